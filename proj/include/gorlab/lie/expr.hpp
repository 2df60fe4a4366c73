#pragma once

/* liedim-compatible input: Lie expressions built from generators with
 * lie[.,.], sq[.], integer coefficients and sums, plus the presentation
 * file format (generators={...}, gensigns={...}, relations={...}).
 * All generators have degree 1 and odd sign; every expression must be
 * homogeneous. */

#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "../arith.hpp"

namespace gorlab {

struct LieParseError : std::runtime_error {
	LieParseError(const std::string& msg, size_t pos)
	    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos(pos)
	{
	}
	size_t pos;
};

class LieExpr;
using LieExprPtr = std::shared_ptr<const LieExpr>;

class LieExpr {
public:
	enum class Kind { Gen, Bracket, Square, Sum };

	static LieExprPtr gen(int index, std::string name)
	{
		auto e = std::make_shared<LieExpr>();
		e->kind_ = Kind::Gen;
		e->gen_index_ = index;
		e->name_ = std::move(name);
		e->degree_ = 1;
		return e;
	}
	static LieExprPtr bracket(LieExprPtr a, LieExprPtr b)
	{
		auto e = std::make_shared<LieExpr>();
		e->kind_ = Kind::Bracket;
		e->degree_ = a->degree() + b->degree();
		e->left_ = std::move(a);
		e->right_ = std::move(b);
		return e;
	}
	static LieExprPtr square(LieExprPtr a)
	{
		if (a->degree() % 2 == 0)
			throw std::invalid_argument("sq[] requires an odd-degree argument");
		auto e = std::make_shared<LieExpr>();
		e->kind_ = Kind::Square;
		e->degree_ = 2 * a->degree();
		e->left_ = std::move(a);
		return e;
	}
	static LieExprPtr sum(std::vector<std::pair<Rat, LieExprPtr>> terms)
	{
		if (terms.empty()) throw std::invalid_argument("empty sum");
		int d = terms[0].second->degree();
		for (auto& [c, t] : terms)
			if (t->degree() != d)
				throw std::invalid_argument("non-homogeneous sum: degrees " +
				                            std::to_string(d) + " and " +
				                            std::to_string(t->degree()));
		if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
		auto e = std::make_shared<LieExpr>();
		e->kind_ = Kind::Sum;
		e->degree_ = d;
		e->terms_ = std::move(terms);
		return e;
	}

	Kind kind() const { return kind_; }
	int degree() const { return degree_; }
	int gen_index() const { return gen_index_; }
	const LieExprPtr& left() const { return left_; }
	const LieExprPtr& right() const { return right_; }
	const std::vector<std::pair<Rat, LieExprPtr>>& terms() const { return terms_; }

	std::string str() const
	{
		switch (kind_) {
		case Kind::Gen:
			return name_;
		case Kind::Bracket:
			return "lie[" + left_->str() + ", " + right_->str() + "]";
		case Kind::Square:
			return "sq[" + left_->str() + "]";
		case Kind::Sum: {
			std::string s;
			for (size_t i = 0; i < terms_.size(); ++i) {
				const Rat& c = terms_[i].first;
				if (c >= 0 && i) s += "+";
				if (c == -1)
					s += "-";
				else if (c != 1)
					s += c.get_str() + "*";
				s += terms_[i].second->str();
			}
			return s;
		}
		}
		return {};
	}

private:
	Kind kind_ = Kind::Gen;
	int degree_ = 0;
	int gen_index_ = -1;
	std::string name_;
	LieExprPtr left_, right_;
	std::vector<std::pair<Rat, LieExprPtr>> terms_;
};

struct LiePresentation {
	std::vector<std::string> generators; // all degree 1, odd
	std::vector<LieExprPtr> relations;   // homogeneous, degree >= 2

	int gen_index(const std::string& name) const
	{
		for (size_t i = 0; i < generators.size(); ++i)
			if (generators[i] == name) return (int)i;
		return -1;
	}
};

namespace lie_detail {

class Parser {
public:
	Parser(const std::string& text, const std::vector<std::string>& gens)
	    : text_(text), gens_(gens)
	{
	}

	LieExprPtr parse_expr()
	{
		auto e = parse_sum();
		skip_ws();
		if (pos_ != text_.size()) throw LieParseError("trailing input", pos_);
		return e;
	}

	LieExprPtr parse_sum()
	{
		std::vector<std::pair<Rat, LieExprPtr>> terms;
		skip_ws();
		bool neg = false;
		if (peek() == '-') {
			neg = true;
			++pos_;
		} else if (peek() == '+') {
			++pos_;
		}
		terms.push_back(parse_term(neg));
		while (true) {
			skip_ws();
			char c = peek();
			if (c != '+' && c != '-') break;
			++pos_;
			terms.push_back(parse_term(c == '-'));
		}
		return LieExpr::sum(std::move(terms));
	}

private:
	std::pair<Rat, LieExprPtr> parse_term(bool neg)
	{
		skip_ws();
		Rat coef(neg ? -1 : 1);
		if (std::isdigit((unsigned char)peek())) {
			long v = 0;
			while (std::isdigit((unsigned char)peek())) {
				v = v * 10 + (peek() - '0');
				++pos_;
			}
			coef *= v;
			skip_ws();
			if (peek() == '*') ++pos_;
		}
		return {coef, parse_atom()};
	}

	LieExprPtr parse_atom()
	{
		skip_ws();
		size_t start = pos_;
		if (!std::isalpha((unsigned char)peek()))
			throw LieParseError("expected generator, lie[..] or sq[..]", pos_);
		std::string name;
		while (std::isalnum((unsigned char)peek()) || peek() == '_') {
			name += peek();
			++pos_;
		}
		skip_ws();
		if (name == "lie") {
			expect('[');
			auto a = parse_sum();
			skip_ws();
			expect(',');
			auto b = parse_sum();
			skip_ws();
			expect(']');
			return LieExpr::bracket(a, b);
		}
		if (name == "sq") {
			expect('[');
			auto a = parse_sum();
			skip_ws();
			expect(']');
			return LieExpr::square(a);
		}
		for (size_t i = 0; i < gens_.size(); ++i)
			if (gens_[i] == name) return LieExpr::gen((int)i, name);
		throw LieParseError("unknown generator '" + name + "'", start);
	}

	void expect(char c)
	{
		skip_ws();
		if (peek() != c)
			throw LieParseError(std::string("expected '") + c + "'", pos_);
		++pos_;
	}
	char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
	}

	const std::string& text_;
	const std::vector<std::string>& gens_;
	size_t pos_ = 0;
};

/* Splits a brace list "{a, b, c}" at top-level commas ('[' nests). */
inline std::vector<std::string> split_brace_list(const std::string& s, size_t pos0)
{
	std::vector<std::string> items;
	size_t i = s.find('{', pos0);
	if (i == std::string::npos) throw LieParseError("expected '{'", pos0);
	++i;
	int depth = 0;
	std::string cur;
	for (; i < s.size(); ++i) {
		char c = s[i];
		if (c == '[') ++depth;
		if (c == ']') --depth;
		if (c == '}' && depth == 0) {
			if (!cur.empty()) items.push_back(cur);
			return items;
		}
		if (c == ',' && depth == 0) {
			items.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	throw LieParseError("unterminated '{'", pos0);
}

inline std::string trim(const std::string& s)
{
	size_t a = s.find_first_not_of(" \t\r\n");
	size_t b = s.find_last_not_of(" \t\r\n");
	return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

} // namespace lie_detail

inline LieExprPtr parse_lie_expr(const std::string& text, const LiePresentation& pres)
{
	lie_detail::Parser p(text, pres.generators);
	return p.parse_expr();
}

/* Parses the liedim-style input file. Only odd degree-1 generators are
 * supported; gensigns must be all 1. */
inline LiePresentation parse_lie_presentation(const std::string& text)
{
	LiePresentation pres;
	size_t gpos = text.find("generators");
	if (gpos == std::string::npos) throw LieParseError("missing generators={...}", 0);
	for (auto& item : lie_detail::split_brace_list(text, gpos)) {
		std::string name = lie_detail::trim(item);
		if (name.empty()) throw LieParseError("empty generator name", gpos);
		pres.generators.push_back(name);
	}
	size_t spos = text.find("gensigns");
	if (spos != std::string::npos) {
		auto signs = lie_detail::split_brace_list(text, spos);
		if (signs.size() != pres.generators.size())
			throw LieParseError("gensigns length mismatch", spos);
		for (auto& s : signs)
			if (lie_detail::trim(s) != "1")
				throw LieParseError("only odd generators (gensigns 1) are supported",
				                    spos);
	}
	size_t rpos = text.find("relations");
	if (rpos == std::string::npos) throw LieParseError("missing relations={...}", 0);
	for (auto& item : lie_detail::split_brace_list(text, rpos)) {
		std::string body = lie_detail::trim(item);
		if (body.empty()) continue;
		auto e = parse_lie_expr(body, pres);
		if (e->degree() < 2) throw LieParseError("relation of degree < 2: " + body, rpos);
		pres.relations.push_back(e);
	}
	return pres;
}

} // namespace gorlab
