#pragma once

/* Verifies that a binomial relation list presents the semigroup ring:
 * every relation must be a homogeneous kernel element of the weight
 * map, and the graded quotient dimensions (computed by exact row
 * reduction on the monomial basis of each weighted degree) must agree
 * with semigroup membership. */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "relations.hpp"
#include "semigroup.hpp"

namespace gorlab {

struct KernelReport {
	bool ok = true;
	std::string failure; // first failing relation, if any
};

/* A binomial maps to zero under phi iff both sides have the same
 * weighted degree. Monomial relations never lie in a toric kernel. */
inline KernelReport verify_kernel(const std::vector<Binomial>& rels, const WeightedRing& w)
{
	KernelReport rep;
	for (const Binomial& b : rels) {
		if (b.monomial) {
			rep.ok = false;
			rep.failure = b.str() + " (monomial relation is not a kernel element)";
			return rep;
		}
		if (weighted_degree(b.lhs, w) != weighted_degree(b.rhs, w)) {
			rep.ok = false;
			rep.failure = b.str();
			return rep;
		}
	}
	return rep;
}

namespace detail {

/* All monomials of weighted degree exactly d, enumerated variable by
 * variable; guarded by a per-degree cap. */
inline void enumerate_monomials(const WeightedRing& w, long d, size_t var, ExponentVector& cur,
                                std::vector<ExponentVector>& out, size_t cap)
{
	if (d == 0) {
		if (out.size() >= cap)
			throw std::runtime_error("monomial count exceeds cap at degree " +
			                         std::to_string(d));
		out.push_back(cur);
		return;
	}
	if (var == w.size()) return;
	long wt = w.weights[var];
	// skip this variable entirely, then each positive exponent
	enumerate_monomials(w, d, var + 1, cur, out, cap);
	for (long e = 1; e * wt <= d; ++e) {
		cur.exponents[w.variables[var]] = (int)e;
		enumerate_monomials(w, d - e * wt, var + 1, cur, out, cap);
	}
	cur.exponents.erase(w.variables[var]);
}

inline std::vector<ExponentVector> monomials_of_degree(const WeightedRing& w, long d, size_t cap)
{
	std::vector<ExponentVector> out;
	ExponentVector cur;
	enumerate_monomials(w, d, 0, cur, out, cap);
	return out;
}

inline ExponentVector mono_mul(const ExponentVector& a, const ExponentVector& b)
{
	ExponentVector m = a;
	for (auto& [v, e] : b.exponents) m.exponents[v] += e;
	return m;
}

} // namespace detail

struct QuotientOptions {
	size_t monomial_cap = 2000000; // per-degree memory guard
};

/* dim (T/J)_d for one weighted degree d: the monomial count minus the
 * rank of the span of monomial multiples of the relations. */
inline long quotient_dim(const std::vector<Binomial>& rels, const WeightedRing& w, long d,
                         const QuotientOptions& opt = {})
{
	auto monos = detail::monomials_of_degree(w, d, opt.monomial_cap);
	std::map<ExponentVector, int> index;
	for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;

	RowEchelon<Rat> ech;
	for (const Binomial& b : rels) {
		long deg = weighted_degree(b.lhs, w);
		if (!b.monomial && weighted_degree(b.rhs, w) != deg)
			throw std::invalid_argument("inhomogeneous relation " + b.str());
		if (deg > d) continue;
		for (const ExponentVector& m : detail::monomials_of_degree(w, d - deg, opt.monomial_cap)) {
			SparseVec<Rat> v;
			int il = index.at(detail::mono_mul(m, b.lhs));
			if (b.monomial) {
				v.push_back({il, Rat(1)});
			} else {
				int ir = index.at(detail::mono_mul(m, b.rhs));
				if (il == ir) continue;
				if (il < ir) {
					v.push_back({il, Rat(1)});
					v.push_back({ir, Rat(-1)});
				} else {
					v.push_back({ir, Rat(-1)});
					v.push_back({il, Rat(1)});
				}
			}
			ech.insert(std::move(v));
		}
	}
	return (long)monos.size() - ech.rank();
}

inline std::vector<std::pair<long, long>> quotient_dims(const std::vector<Binomial>& rels,
                                                        const WeightedRing& w, long max_degree,
                                                        const QuotientOptions& opt = {})
{
	std::vector<std::pair<long, long>> dims;
	for (long d = 0; d <= max_degree; ++d) dims.push_back({d, quotient_dim(rels, w, d, opt)});
	return dims;
}

struct PresentationReport {
	bool ok = true;
	long first_mismatch = -1;
	long got = 0, expected = 0;
};

/* T/J = k[S-bar] in all weighted degrees <= D: dimension 1 exactly on
 * semigroup elements, 0 elsewhere. */
inline PresentationReport verify_presentation(const std::vector<Binomial>& rels,
                                              const WeightedRing& w, const NumericalSemigroup& s,
                                              long max_degree, const QuotientOptions& opt = {})
{
	PresentationReport rep;
	for (long d = 0; d <= max_degree; ++d) {
		long dim = quotient_dim(rels, w, d, opt);
		long want = s.contains(d) ? 1 : 0;
		if (dim != want) {
			rep.ok = false;
			rep.first_mismatch = d;
			rep.got = dim;
			rep.expected = want;
			return rep;
		}
	}
	return rep;
}

/* Number of minimal generators of J in degree d, i.e.
 * dim J_d - dim (m J)_d  where (m J)_d is spanned by the multiples with
 * a nonconstant monomial factor. */
inline long minimal_generators_in_degree(const std::vector<Binomial>& rels, const WeightedRing& w,
                                         long d, const QuotientOptions& opt = {})
{
	auto monos = detail::monomials_of_degree(w, d, opt.monomial_cap);
	std::map<ExponentVector, int> index;
	for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;

	auto vec_of = [&](const Binomial& b, const ExponentVector& m) {
		SparseVec<Rat> v;
		int il = index.at(detail::mono_mul(m, b.lhs));
		if (b.monomial) {
			v.push_back({il, Rat(1)});
			return v;
		}
		int ir = index.at(detail::mono_mul(m, b.rhs));
		if (il == ir) return v;
		if (il < ir) {
			v.push_back({il, Rat(1)});
			v.push_back({ir, Rat(-1)});
		} else {
			v.push_back({ir, Rat(-1)});
			v.push_back({il, Rat(1)});
		}
		return v;
	};

	RowEchelon<Rat> ech;
	long rank_mj = 0;
	for (const Binomial& b : rels) {
		long deg = weighted_degree(b.lhs, w);
		if (deg >= d) continue;
		for (const ExponentVector& m : detail::monomials_of_degree(w, d - deg, opt.monomial_cap)) {
			if (m.empty()) continue;
			if (ech.insert(vec_of(b, m))) ++rank_mj;
		}
	}
	long rank_j = rank_mj;
	for (const Binomial& b : rels) {
		if (weighted_degree(b.lhs, w) != d) continue;
		ExponentVector one;
		if (ech.insert(vec_of(b, one))) ++rank_j;
	}
	return rank_j - rank_mj;
}

} // namespace gorlab
