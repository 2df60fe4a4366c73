#pragma once

/* Numerical semigroup arithmetic: membership, gaps, (pseudo-)Frobenius
 * numbers, symmetry, and the symmetrization that turns an arbitrary
 * semigroup into a symmetric one. */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace gorlab {

struct GapData {
	long frobenius = -1;            // -1 when the semigroup is all of N
	std::vector<long> gaps;
	std::vector<long> pseudo_frobenius;
	int type() const { return (int)pseudo_frobenius.size(); }
};

class NumericalSemigroup {
public:
	/* Generators are sorted and minimalized (no generator is a sum of
	 * the others); gcd must be 1. */
	explicit NumericalSemigroup(std::vector<long> gens)
	{
		if (gens.empty()) throw std::invalid_argument("empty generator list");
		for (long g : gens)
			if (g <= 0) throw std::invalid_argument("generators must be positive");
		std::sort(gens.begin(), gens.end());
		gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
		long g = 0;
		for (long x : gens) g = std::gcd(g, x);
		if (g != 1) throw std::invalid_argument("gcd of generators must be 1");
		generators_ = minimalize(gens);
		build_apery();
	}

	const std::vector<long>& generators() const { return generators_; }

	bool contains(long n) const
	{
		if (n < 0) return false;
		if (generators_[0] == 1) return true;
		long g1 = generators_[0];
		return apery_[n % g1] <= n;
	}

	/* Largest integer not in S; -1 for S = N. */
	long frobenius() const
	{
		if (generators_[0] == 1) return -1;
		long f = 0;
		for (long a : apery_) f = std::max(f, a);
		return f - generators_[0];
	}

	GapData gap_data() const
	{
		GapData gd;
		gd.frobenius = frobenius();
		for (long n = 0; n <= gd.frobenius; ++n)
			if (!contains(n)) gd.gaps.push_back(n);
		for (long z : gd.gaps) {
			bool pf = true;
			for (long g : generators_)
				if (!contains(z + g)) {
					pf = false;
					break;
				}
			if (pf) gd.pseudo_frobenius.push_back(z);
		}
		std::sort(gd.pseudo_frobenius.rbegin(), gd.pseudo_frobenius.rend());
		return gd;
	}

	/* n in S or F(S)-n in S for every n; scanning [0, F] suffices
	 * (outside it one side is automatic). */
	bool is_symmetric() const
	{
		long f = frobenius();
		for (long n = 0; n <= f; ++n)
			if (!contains(n) && !contains(f - n)) return false;
		return true;
	}

	friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b)
	{
		return a.generators_ == b.generators_;
	}

private:
	static std::vector<long> minimalize(const std::vector<long>& gens)
	{
		std::vector<long> kept;
		for (size_t i = 0; i < gens.size(); ++i) {
			std::vector<long> others;
			for (size_t j = 0; j < gens.size(); ++j)
				if (j != i) others.push_back(gens[j]);
			if (!representable(gens[i], others)) kept.push_back(gens[i]);
		}
		return kept;
	}

	static bool representable(long n, const std::vector<long>& gens)
	{
		std::vector<char> reach(n + 1, 0);
		reach[0] = 1;
		for (long v = 1; v <= n; ++v)
			for (long g : gens)
				if (g <= v && reach[v - g]) {
					reach[v] = 1;
					break;
				}
		return reach[n] != 0;
	}

	/* Apery set of the smallest generator: apery_[r] is the least
	 * element of S congruent to r mod g1 (Dijkstra over residues). */
	void build_apery()
	{
		long g1 = generators_[0];
		apery_.assign(g1, std::numeric_limits<long>::max());
		apery_[0] = 0;
		using Node = std::pair<long, long>; // (value, residue)
		std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
		pq.push({0, 0});
		while (!pq.empty()) {
			auto [val, r] = pq.top();
			pq.pop();
			if (val > apery_[r]) continue;
			for (long g : generators_) {
				long nv = val + g;
				long nr = nv % g1;
				if (nv < apery_[nr]) {
					apery_[nr] = nv;
					pq.push({nv, nr});
				}
			}
		}
	}

	std::vector<long> generators_;
	std::vector<long> apery_;
};

/* S-bar_gbar = (2g_1,...,2g_n, gbar-2n_1,...,gbar-2n_t) for odd
 * gbar >= 3F(S)+1; symmetric, and recovers S as {n | 2n in S-bar}. */
inline NumericalSemigroup symmetrize(const NumericalSemigroup& s, long gbar)
{
	if (gbar % 2 == 0) throw std::invalid_argument("gbar must be odd");
	long f = s.frobenius();
	if (gbar < 3 * f + 1) throw std::invalid_argument("gbar must be >= 3F(S)+1");
	std::vector<long> gens;
	for (long g : s.generators()) gens.push_back(2 * g);
	for (long n : s.gap_data().pseudo_frobenius) gens.push_back(gbar - 2 * n);
	std::sort(gens.begin(), gens.end());
	return NumericalSemigroup(gens);
}

/* Coefficients of the Hilbert series of k[S] up to t^N: 1 if d in S. */
inline std::vector<int> semigroup_hilbert(const NumericalSemigroup& s, int n)
{
	std::vector<int> coeffs(n + 1, 0);
	for (int d = 0; d <= n; ++d) coeffs[d] = s.contains(d) ? 1 : 0;
	return coeffs;
}

} // namespace gorlab
