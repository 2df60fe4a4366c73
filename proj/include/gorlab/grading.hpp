#pragma once

/* Integral gradings of a binomial relation list: each true binomial
 * contributes one linear equation (lhs exponents minus rhs exponents),
 * and the admissible gradings form the rational nullspace. On a
 * 1-dimensional solution space the minimal positive integral point is
 * extracted; otherwise the parametrized family must be specialized. */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "relations.hpp"

namespace gorlab {

struct GradingSystem {
	std::vector<char> variables;
	std::vector<std::vector<Rat>> rows; // one per binomial, duplicates kept

	bool is_solution(const std::vector<Rat>& v) const
	{
		for (const auto& r : rows) {
			Rat s(0);
			for (size_t j = 0; j < v.size(); ++j) s += r[j] * v[j];
			if (s != 0) return false;
		}
		return true;
	}
};

inline GradingSystem homogeneity_system(const std::vector<Binomial>& rels,
                                        const std::vector<char>& variables)
{
	GradingSystem sys;
	sys.variables = variables;
	std::map<char, int> idx;
	for (size_t i = 0; i < variables.size(); ++i) idx[variables[i]] = (int)i;
	for (const Binomial& b : rels) {
		if (b.monomial) continue;
		std::vector<Rat> row(variables.size(), Rat(0));
		for (auto& [v, e] : b.lhs.exponents) {
			if (!idx.count(v)) throw std::invalid_argument(std::string("unknown variable ") + v);
			row[idx[v]] += e;
		}
		for (auto& [v, e] : b.rhs.exponents) {
			if (!idx.count(v)) throw std::invalid_argument(std::string("unknown variable ") + v);
			row[idx[v]] -= e;
		}
		sys.rows.push_back(std::move(row));
	}
	return sys;
}

/* Variables appearing in a relation list, in alphabetical order. */
inline std::vector<char> collect_variables(const std::vector<Binomial>& rels)
{
	std::map<char, bool> seen;
	for (const Binomial& b : rels) {
		for (auto& [v, e] : b.lhs.exponents) seen[v] = true;
		for (auto& [v, e] : b.rhs.exponents) seen[v] = true;
	}
	std::vector<char> vars;
	for (auto& [v, _] : seen) vars.push_back(v);
	return vars;
}

struct GradingSolution {
	std::vector<char> variables;
	int nullity = 0;
	/* basis[i][j]: coefficient of constant c_{i+1} in variable j; the
	 * constants are the values of free_vars in order. */
	std::vector<std::vector<Rat>> basis;
	std::vector<char> free_vars;
	std::optional<std::vector<long>> minimal_integral; // nullity 1 only

	std::string parametrization() const
	{
		std::string s;
		for (size_t j = 0; j < variables.size(); ++j) {
			if (j) s += ", ";
			s += variables[j];
			s += " = ";
			bool first = true;
			for (int i = 0; i < nullity; ++i) {
				const Rat& coef = basis[i][j];
				if (coef == 0) continue;
				std::string cname = "c" + std::to_string(i + 1);
				std::string term = (coef == 1) ? cname
				                               : "(" + coef.get_str() + ")*" + cname;
				if (!first) s += " + ";
				s += term;
				first = false;
			}
			if (first) s += "0";
		}
		return s;
	}
};

namespace detail {

inline int rat_rank(std::vector<std::vector<Rat>> m)
{
	int rank = 0;
	size_t ncols = m.empty() ? 0 : m[0].size();
	size_t row = 0;
	for (size_t col = 0; col < ncols && row < m.size(); ++col) {
		size_t sel = row;
		while (sel < m.size() && m[sel][col] == 0) ++sel;
		if (sel == m.size()) continue;
		std::swap(m[row], m[sel]);
		for (size_t r = row + 1; r < m.size(); ++r) {
			if (m[r][col] == 0) continue;
			Rat f = m[r][col] / m[row][col];
			for (size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
		}
		++row;
		++rank;
	}
	return rank;
}

/* Columns C index a valid free set iff the nullspace basis restricted
 * to C has full rank k. */
inline int restricted_rank(const std::vector<std::vector<Rat>>& ns_basis,
                           const std::vector<int>& cols)
{
	std::vector<std::vector<Rat>> m;
	for (const auto& v : ns_basis) {
		std::vector<Rat> row;
		for (int c : cols) row.push_back(v[c]);
		m.push_back(std::move(row));
	}
	return rat_rank(std::move(m));
}

} // namespace detail

/* Solves the homogeneity system exactly. Free variables default to the
 * greedy left-to-right choice (each column accepted if it still extends
 * to a valid free set); an explicit choice can be passed to match a
 * published parametrization. */
inline GradingSolution solve_gradings(const GradingSystem& sys,
                                      const std::vector<char>& free_choice = {})
{
	int n = (int)sys.variables.size();
	NullspaceResult ns = nullspace(sys.rows, n);
	GradingSolution sol;
	sol.variables = sys.variables;
	sol.nullity = (int)ns.basis.size();
	if (sol.nullity == 0) return sol;
	int k = sol.nullity;

	std::vector<int> free_cols;
	if (!free_choice.empty()) {
		if ((int)free_choice.size() != k)
			throw std::invalid_argument("free variable count must equal nullity " +
			                            std::to_string(k));
		for (char v : free_choice) {
			int j = -1;
			for (int c = 0; c < n; ++c)
				if (sys.variables[c] == v) j = c;
			if (j < 0) throw std::invalid_argument(std::string("unknown variable ") + v);
			free_cols.push_back(j);
		}
		if (detail::restricted_rank(ns.basis, free_cols) != k)
			throw std::invalid_argument("chosen variables do not form a valid free set");
	} else {
		for (int c = 0; c < n && (int)free_cols.size() < k; ++c) {
			std::vector<int> attempt = free_cols;
			attempt.push_back(c);
			if (detail::restricted_rank(ns.basis, attempt) != (int)attempt.size()) continue;
			std::vector<int> closure = attempt;
			for (int c2 = c + 1; c2 < n; ++c2) closure.push_back(c2);
			if (detail::restricted_rank(ns.basis, closure) != k) continue;
			free_cols = attempt;
		}
		if ((int)free_cols.size() != k)
			throw std::runtime_error("failed to select free variables");
	}
	for (int c : free_cols) sol.free_vars.push_back(sys.variables[c]);

	/* Change basis so that basis[i] is 1 on free_cols[i], 0 on the
	 * other free columns. */
	std::vector<std::vector<Rat>> m(k, std::vector<Rat>(2 * k, Rat(0)));
	for (int i = 0; i < k; ++i) {
		for (int j = 0; j < k; ++j) m[i][j] = ns.basis[i][free_cols[j]];
		m[i][k + i] = 1;
	}
	for (int col = 0; col < k; ++col) {
		int sel = col;
		while (m[sel][col] == 0) ++sel;
		std::swap(m[col], m[sel]);
		Rat inv = 1 / m[col][col];
		for (int c = 0; c < 2 * k; ++c) m[col][c] *= inv;
		for (int r = 0; r < k; ++r) {
			if (r == col || m[r][col] == 0) continue;
			Rat f = m[r][col];
			for (int c = 0; c < 2 * k; ++c) m[r][c] -= f * m[col][c];
		}
	}
	sol.basis.assign(k, std::vector<Rat>(n, Rat(0)));
	for (int i = 0; i < k; ++i)
		for (int r = 0; r < k; ++r) {
			Rat coef = m[i][k + r]; // inverse transpose entry
			if (coef == 0) continue;
			for (int j = 0; j < n; ++j) sol.basis[i][j] += coef * ns.basis[r][j];
		}

	if (k == 1) {
		// primitive integer point on the ray, strictly positive
		Int lcm_den(1);
		for (const Rat& x : sol.basis[0]) {
			Int den = x.get_den();
			lcm_den = lcm_den / gcd(lcm_den, den) * den;
		}
		std::vector<Int> scaled;
		Int g(0);
		for (const Rat& x : sol.basis[0]) {
			Rat y = x * Rat(lcm_den);
			scaled.push_back(y.get_num());
			g = gcd(g, y.get_num());
		}
		if (g == 0) throw std::runtime_error("zero solution ray");
		bool all_pos = true, all_neg = true;
		for (const Int& z : scaled) {
			if (z <= 0) all_pos = false;
			if (z >= 0) all_neg = false;
		}
		if (!all_pos && !all_neg)
			throw std::runtime_error("no positive grading on the solution ray");
		std::vector<long> pt;
		for (Int& z : scaled) {
			Int v = z / g;
			if (all_neg) v = -v;
			pt.push_back(v.get_si());
		}
		sol.minimal_integral = pt;
	}
	return sol;
}

/* Evaluates the family at explicit constants. Keys may be c1..ck or the
 * free variable names themselves. Result must be positive integers. */
inline std::vector<long> specialize(const GradingSolution& sol,
                                    const std::map<std::string, Rat>& assignments)
{
	std::vector<Rat> consts(sol.nullity, Rat(0));
	std::vector<bool> set(sol.nullity, false);
	for (auto& [key, val] : assignments) {
		int idx = -1;
		if (key.size() >= 2 && key[0] == 'c') {
			try {
				idx = std::stoi(key.substr(1)) - 1;
			} catch (...) {
				idx = -1;
			}
		}
		if (idx < 0 && key.size() == 1) {
			for (int i = 0; i < sol.nullity; ++i)
				if (sol.free_vars[i] == key[0]) idx = i;
		}
		if (idx < 0 || idx >= sol.nullity)
			throw std::invalid_argument("unknown constant " + key);
		consts[idx] = val;
		set[idx] = true;
	}
	for (int i = 0; i < sol.nullity; ++i)
		if (!set[i])
			throw std::invalid_argument("missing assignment for c" + std::to_string(i + 1));

	std::vector<long> out;
	for (size_t j = 0; j < sol.variables.size(); ++j) {
		Rat v(0);
		for (int i = 0; i < sol.nullity; ++i) v += sol.basis[i][j] * consts[i];
		if (!is_integer(v) || v <= 0)
			throw std::runtime_error(std::string("variable ") + sol.variables[j] +
			                         " specializes to a non-positive or non-integral value " +
			                         v.get_str());
		out.push_back(v.get_num().get_si());
	}
	return out;
}

} // namespace gorlab
