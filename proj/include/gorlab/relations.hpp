#pragma once

/* Binomial relation lists: the file format is a comma/newline separated
 * sequence of tokens like "b^2-af" or "k^2-ehl" (single-letter
 * variables, optional integer exponents, at most one minus sign;
 * pure monomials such as "bf" are allowed and modeled as a binomial
 * with zero right-hand side). '#' starts a comment. */

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorlab {

struct ParseError : std::runtime_error {
	ParseError(const std::string& msg, int line, int col)
	    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
	                         std::to_string(col)),
	      line(line),
	      col(col)
	{
	}
	int line;
	int col;
};

/* Finitely supported exponent map, keyed by variable letter. */
struct ExponentVector {
	std::map<char, int> exponents;

	int total_degree() const
	{
		int d = 0;
		for (auto& [v, e] : exponents) d += e;
		return d;
	}
	bool empty() const { return exponents.empty(); }
	friend bool operator==(const ExponentVector& a, const ExponentVector& b)
	{
		return a.exponents == b.exponents;
	}
	friend bool operator<(const ExponentVector& a, const ExponentVector& b)
	{
		return a.exponents < b.exponents;
	}
	std::string str() const
	{
		if (exponents.empty()) return "1";
		std::string s;
		for (auto& [v, e] : exponents) {
			s += v;
			if (e > 1) s += "^" + std::to_string(e);
		}
		return s;
	}
};

/* lhs - rhs with both coefficients 1; rhs empty-and-flagged for pure
 * monomial relations. */
struct Binomial {
	ExponentVector lhs;
	ExponentVector rhs;
	bool monomial = false;

	std::string str() const { return monomial ? lhs.str() : lhs.str() + "-" + rhs.str(); }
	friend bool operator==(const Binomial& a, const Binomial& b)
	{
		return a.monomial == b.monomial && a.lhs == b.lhs && (a.monomial || a.rhs == b.rhs);
	}
};

struct WeightedRing {
	std::vector<char> variables;
	std::vector<long> weights;

	WeightedRing() = default;
	WeightedRing(std::vector<char> vars, std::vector<long> w)
	    : variables(std::move(vars)), weights(std::move(w))
	{
		if (variables.size() != weights.size())
			throw std::invalid_argument("variable/weight count mismatch");
		for (long x : weights)
			if (x <= 0) throw std::invalid_argument("weights must be positive");
	}

	int index_of(char v) const
	{
		for (size_t i = 0; i < variables.size(); ++i)
			if (variables[i] == v) return (int)i;
		return -1;
	}
	long weight_of(char v) const
	{
		int i = index_of(v);
		if (i < 0) throw std::invalid_argument(std::string("unknown variable ") + v);
		return weights[i];
	}
	size_t size() const { return variables.size(); }

	/* Consecutive letters starting at `first`, e.g. a..l. */
	static WeightedRing consecutive(char first, const std::vector<long>& w)
	{
		std::vector<char> vars;
		for (size_t i = 0; i < w.size(); ++i) vars.push_back((char)(first + i));
		return WeightedRing(vars, w);
	}
};

inline long weighted_degree(const ExponentVector& m, const WeightedRing& w)
{
	long d = 0;
	for (auto& [v, e] : m.exponents) d += (long)e * w.weight_of(v);
	return d;
}

namespace detail {

inline ExponentVector parse_term(const std::string& text, size_t& pos, int line, int col0)
{
	ExponentVector m;
	size_t start = pos;
	while (pos < text.size() && (std::isalpha((unsigned char)text[pos]) || text[pos] == '^')) {
		char v = text[pos];
		if (!std::isalpha((unsigned char)v))
			throw ParseError("expected variable", line, col0 + (int)(pos - start));
		++pos;
		int e = 1;
		if (pos < text.size() && text[pos] == '^') {
			++pos;
			if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
				throw ParseError("expected exponent digits after '^'", line,
				                 col0 + (int)(pos - start));
			e = 0;
			while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
				e = e * 10 + (text[pos] - '0');
				++pos;
			}
			if (e <= 0) throw ParseError("exponent must be positive", line, col0);
		}
		m.exponents[v] += e;
	}
	if (m.exponents.empty()) throw ParseError("empty term", line, col0);
	return m;
}

} // namespace detail

/* Parses a whole relation file; returns binomials in declaration order. */
inline std::vector<Binomial> parse_relations(const std::string& text)
{
	std::vector<Binomial> rels;
	int line = 1, col = 1;
	std::string token;
	int tok_line = 1, tok_col = 1;
	bool in_comment = false;

	auto flush = [&]() {
		if (token.empty()) return;
		size_t pos = 0;
		Binomial b;
		b.lhs = detail::parse_term(token, pos, tok_line, tok_col);
		if (pos == token.size()) {
			b.monomial = true;
		} else {
			if (token[pos] != '-')
				throw ParseError("expected '-' between terms", tok_line,
				                 tok_col + (int)pos);
			++pos;
			if (pos == token.size())
				throw ParseError("missing right-hand term", tok_line, tok_col + (int)pos);
			b.rhs = detail::parse_term(token, pos, tok_line, tok_col + (int)pos);
			if (pos != token.size())
				throw ParseError("trailing characters in relation", tok_line,
				                 tok_col + (int)pos);
			if (b.lhs == b.rhs)
				throw ParseError("relation has equal sides", tok_line, tok_col);
		}
		rels.push_back(b);
		token.clear();
	};

	for (char c : text) {
		if (c == '\n') {
			flush();
			in_comment = false;
			++line;
			col = 1;
			continue;
		}
		if (in_comment) {
			++col;
			continue;
		}
		if (c == '#') {
			flush();
			in_comment = true;
		} else if (c == ',' || std::isspace((unsigned char)c)) {
			flush();
		} else {
			if (token.empty()) {
				tok_line = line;
				tok_col = col;
			}
			token += c;
		}
		++col;
	}
	flush();
	return rels;
}

inline std::string print_relations(const std::vector<Binomial>& rels)
{
	std::string s;
	for (size_t i = 0; i < rels.size(); ++i) {
		if (i) s += ",";
		s += rels[i].str();
	}
	return s;
}

/* Kills the variable: any term containing it is deleted whole; relations
 * that vanish entirely are dropped; a surviving single term becomes a
 * monomial relation (sign discarded). */
inline std::vector<Binomial> substitute_zero(const std::vector<Binomial>& rels, char var)
{
	std::vector<Binomial> out;
	for (const Binomial& b : rels) {
		bool lhs_dies = b.lhs.exponents.count(var) > 0;
		bool rhs_dies = b.monomial || b.rhs.exponents.count(var) > 0;
		if (lhs_dies && rhs_dies) continue;
		Binomial nb;
		if (lhs_dies) {
			nb.lhs = b.rhs;
			nb.monomial = true;
		} else if (rhs_dies) {
			nb.lhs = b.lhs;
			nb.monomial = true;
		} else {
			nb = b;
		}
		out.push_back(nb);
	}
	return out;
}

} // namespace gorlab
