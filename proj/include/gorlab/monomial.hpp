#pragma once

/* Hilbert series of a free associative algebra modulo a monomial ideal,
 * by counting words avoiding the forbidden factors with a prefix
 * automaton (Aho-Corasick states = proper prefixes of forbidden words);
 * the transfer-matrix determinant gives the closed rational form. */

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "series.hpp"

namespace gorlab {

struct MonomialAlgebraSpec {
	std::vector<char> alphabet;
	std::vector<std::string> forbidden;

	MonomialAlgebraSpec(std::vector<char> a, std::vector<std::string> f)
	    : alphabet(std::move(a)), forbidden(std::move(f))
	{
		if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
		std::map<char, bool> known;
		for (char c : alphabet) known[c] = true;
		for (auto& w : forbidden) {
			if (w.size() < 2)
				throw std::invalid_argument("forbidden words must have length >= 2");
			for (char c : w)
				if (!known.count(c))
					throw std::invalid_argument(std::string("letter ") + c +
					                            " not in alphabet");
		}
		for (size_t i = 0; i < forbidden.size(); ++i)
			for (size_t j = 0; j < forbidden.size(); ++j) {
				if (i == j) continue;
				if (forbidden[j].find(forbidden[i]) != std::string::npos)
					throw std::invalid_argument(
					    "forbidden set not reduced: " + forbidden[i] +
					    " is a factor of " + forbidden[j]);
			}
	}
};

struct MonomialSeriesResult {
	UniSeries series;          // word counts per length
	RationalFn rational;       // reduced transfer-matrix form
};

namespace detail_monomial {

/* States = proper prefixes of forbidden words; transition by longest
 * matching suffix; entering a complete forbidden word is forbidden
 * (no out-edge). With a reduced forbidden set the longest matching
 * suffix check is exhaustive. */
struct Automaton {
	std::vector<std::string> states;
	std::vector<std::vector<int>> next; // -1 = dead

	Automaton(const MonomialAlgebraSpec& spec)
	{
		std::map<std::string, int> index;
		auto add_state = [&](const std::string& s) {
			if (!index.count(s)) {
				index[s] = (int)states.size();
				states.push_back(s);
			}
		};
		add_state("");
		for (auto& w : spec.forbidden)
			for (size_t l = 1; l + 1 <= w.size(); ++l) add_state(w.substr(0, l));
		auto is_forbidden = [&](const std::string& s) {
			for (auto& w : spec.forbidden)
				if (s == w) return true;
			return false;
		};
		next.assign(states.size(), std::vector<int>((int)spec.alphabet.size(), -1));
		for (size_t s = 0; s < states.size(); ++s) {
			for (size_t a = 0; a < spec.alphabet.size(); ++a) {
				std::string word = states[s] + spec.alphabet[a];
				// longest suffix that is a prefix of a forbidden word
				int target = 0;
				bool dead = false;
				for (size_t start = 0; start < word.size() + 1; ++start) {
					std::string suf = word.substr(start);
					if (is_forbidden(suf)) {
						dead = true;
						break;
					}
					if (index.count(suf)) {
						target = index[suf];
						break;
					}
				}
				next[s][a] = dead ? -1 : target;
			}
		}
	}
};

} // namespace detail_monomial

inline MonomialSeriesResult monomial_hilbert_series(const MonomialAlgebraSpec& spec, int trunc)
{
	detail_monomial::Automaton aut(spec);
	int ns = (int)aut.states.size();

	// counting DP
	UniSeries series(trunc);
	std::vector<Int> cnt(ns, Int(0));
	cnt[0] = 1;
	series[0] = 1;
	for (int n = 1; n <= trunc; ++n) {
		std::vector<Int> nxt(ns, Int(0));
		for (int s = 0; s < ns; ++s) {
			if (cnt[s] == 0) continue;
			for (size_t a = 0; a < spec.alphabet.size(); ++a) {
				int t = aut.next[s][a];
				if (t >= 0) nxt[t] += cnt[s];
			}
		}
		cnt = std::move(nxt);
		Int total(0);
		for (auto& x : cnt) total += x;
		series[n] = Rat(total);
	}

	// denominator det(I - t M) via Faddeev-LeVerrier
	std::vector<std::vector<Rat>> m(ns, std::vector<Rat>(ns, Rat(0)));
	for (int s = 0; s < ns; ++s)
		for (size_t a = 0; a < spec.alphabet.size(); ++a)
			if (aut.next[s][a] >= 0) m[s][aut.next[s][a]] += 1;
	std::vector<Rat> charpoly(ns + 1, Rat(0)); // c[k] coeff of lambda^k
	charpoly[ns] = 1;
	{
		std::vector<std::vector<Rat>> mk(ns, std::vector<Rat>(ns, Rat(0)));
		for (int i = 0; i < ns; ++i) mk[i][i] = 1; // M_0 = I
		Rat c(1);
		for (int k = 1; k <= ns; ++k) {
			// M_k = M * (M_{k-1} + c_{n-k+1} I), c known from previous step
			std::vector<std::vector<Rat>> prod(ns, std::vector<Rat>(ns, Rat(0)));
			for (int i = 0; i < ns; ++i)
				for (int l = 0; l < ns; ++l) {
					if (m[i][l] == 0) continue;
					for (int j = 0; j < ns; ++j)
						prod[i][j] += m[i][l] * mk[l][j];
				}
			Rat tr(0);
			for (int i = 0; i < ns; ++i) tr += prod[i][i];
			c = -tr / k;
			charpoly[ns - k] = c;
			for (int i = 0; i < ns; ++i) prod[i][i] += c;
			mk = std::move(prod);
		}
	}
	// det(I - tM) = t^ns charpoly(1/t), i.e. coefficient of t^k is c[ns-k]
	std::vector<Rat> den_q(ns + 1);
	for (int k = 0; k <= ns; ++k) den_q[k] = charpoly[ns - k];

	// numerator = series * den, degree < ns (verified)
	UniSeries long_series(trunc >= 2 * ns ? trunc : 2 * ns);
	{
		std::vector<Int> c2(ns, Int(0));
		c2[0] = 1;
		long_series[0] = 1;
		for (int n = 1; n <= long_series.trunc(); ++n) {
			std::vector<Int> nxt(ns, Int(0));
			for (int s = 0; s < ns; ++s) {
				if (c2[s] == 0) continue;
				for (size_t a = 0; a < spec.alphabet.size(); ++a) {
					int t = aut.next[s][a];
					if (t >= 0) nxt[t] += c2[s];
				}
			}
			c2 = std::move(nxt);
			Int total(0);
			for (auto& x : c2) total += x;
			long_series[n] = Rat(total);
		}
	}
	std::vector<Rat> num_q(ns + 1, Rat(0));
	for (int k = 0; k <= ns && k <= long_series.trunc(); ++k) {
		Rat acc(0);
		for (int j = 0; j <= k && j <= ns; ++j) acc += den_q[j] * long_series[k - j];
		num_q[k] = acc;
	}
	for (int k = ns + 1; k <= long_series.trunc(); ++k) {
		Rat acc(0);
		for (int j = 0; j <= ns; ++j)
			if (k - j <= long_series.trunc() && k - j >= 0) acc += den_q[j] * long_series[k - j];
		if (acc != 0) throw std::runtime_error("transfer-matrix numerator degree too large");
	}

	// cancel the polynomial gcd, normalize to integer coefficients
	auto degree = [](const std::vector<Rat>& p) {
		int d = -1;
		for (size_t i = 0; i < p.size(); ++i)
			if (p[i] != 0) d = (int)i;
		return d;
	};
	std::vector<Rat> a = num_q, b = den_q;
	while (degree(b) >= 0 && degree(a) >= 0) {
		// a mod b
		int da = degree(a), db = degree(b);
		if (da < db) std::swap(a, b), std::swap(da, db);
		std::vector<Rat> r = a;
		while (degree(r) >= db && degree(r) >= 0) {
			int dr = degree(r);
			Rat f = r[dr] / b[db];
			for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
		}
		a = b;
		b = r;
		if (degree(b) < 0) break;
	}
	// a = gcd
	std::vector<Rat> g = a;
	int dg = degree(g);
	auto divide = [&](const std::vector<Rat>& p) {
		std::vector<Rat> q(p.size(), Rat(0)), r = p;
		int dp = degree(r);
		while (dp >= dg && dp >= 0) {
			Rat f = r[dp] / g[dg];
			q[dp - dg] = f;
			for (int i = 0; i <= dg; ++i) r[dp - dg + i] -= f * g[i];
			dp = degree(r);
		}
		return q;
	};
	std::vector<Rat> num_red = dg >= 0 ? divide(num_q) : num_q;
	std::vector<Rat> den_red = dg >= 0 ? divide(den_q) : den_q;
	// scale so that den(0) = 1, then clear denominators
	Rat scale = 1 / den_red[0];
	Int l(1);
	auto lcm_dens = [&](const std::vector<Rat>& p) {
		for (const Rat& x : p) {
			Int den = Rat(x * scale).get_den();
			l = l / gcd(l, den) * den;
		}
	};
	lcm_dens(num_red);
	lcm_dens(den_red);
	auto to_int_poly = [&](const std::vector<Rat>& p) {
		int d = degree(p);
		std::vector<Int> out;
		for (int k = 0; k <= std::max(d, 0); ++k) {
			Rat y = (k < (int)p.size() ? p[k] : Rat(0)) * scale * Rat(l);
			out.push_back(y.get_num());
		}
		return out;
	};
	std::vector<Int> num_i = to_int_poly(num_red);
	std::vector<Int> den_i = to_int_poly(den_red);
	return MonomialSeriesResult{std::move(series), RationalFn(std::move(num_i), std::move(den_i))};
}

/* Brute-force word count avoiding forbidden factors (test oracle). */
inline std::vector<long> count_words_brute(const MonomialAlgebraSpec& spec, int maxlen)
{
	std::vector<long> counts{1};
	std::vector<std::string> frontier{""};
	for (int n = 1; n <= maxlen; ++n) {
		std::vector<std::string> next;
		for (const std::string& w : frontier)
			for (char a : spec.alphabet) {
				std::string nw = w + a;
				bool bad = false;
				for (auto& f : spec.forbidden)
					if (nw.size() >= f.size() &&
					    nw.compare(nw.size() - f.size(), f.size(), f) == 0) {
						bad = true;
						break;
					}
				if (!bad) next.push_back(std::move(nw));
			}
		frontier = std::move(next);
		counts.push_back((long)frontier.size());
	}
	return counts;
}

} // namespace gorlab
