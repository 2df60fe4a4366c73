#pragma once

/* Exact truncated power series in one and two variables, and the
 * Poincare-series transforms built on them: rational-function
 * expansion, PBW infinite products and their inversion, the Golod and
 * Gulliksen quotient formulas, the Lofwall formula for rings with
 * m^3 = 0, and the full assembly of the main product identity. */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace gorlab {

struct SeriesError : std::runtime_error {
	SeriesError(const std::string& msg, int degree)
	    : std::runtime_error(msg + " at degree " + std::to_string(degree)), degree(degree)
	{
	}
	int degree;
};

class UniSeries {
public:
	explicit UniSeries(int trunc) : c_(trunc + 1, Rat(0)) {}
	static UniSeries one(int trunc)
	{
		UniSeries s(trunc);
		s.c_[0] = 1;
		return s;
	}
	static UniSeries from_coeffs(std::vector<Rat> coeffs)
	{
		UniSeries s((int)coeffs.size() - 1);
		s.c_ = std::move(coeffs);
		return s;
	}

	int trunc() const { return (int)c_.size() - 1; }
	const Rat& operator[](int k) const { return c_[k]; }
	Rat& operator[](int k) { return c_[k]; }

	UniSeries truncated(int n) const
	{
		UniSeries s(std::min(n, trunc()));
		for (int k = 0; k <= s.trunc(); ++k) s.c_[k] = c_[k];
		return s;
	}

	friend UniSeries operator+(const UniSeries& a, const UniSeries& b)
	{
		UniSeries s(std::min(a.trunc(), b.trunc()));
		for (int k = 0; k <= s.trunc(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
		return s;
	}
	friend UniSeries operator-(const UniSeries& a, const UniSeries& b)
	{
		UniSeries s(std::min(a.trunc(), b.trunc()));
		for (int k = 0; k <= s.trunc(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
		return s;
	}
	friend UniSeries operator*(const UniSeries& a, const UniSeries& b)
	{
		UniSeries s(std::min(a.trunc(), b.trunc()));
		for (int i = 0; i <= s.trunc(); ++i) {
			if (a.c_[i] == 0) continue;
			for (int j = 0; i + j <= s.trunc(); ++j)
				if (b.c_[j] != 0) s.c_[i + j] += a.c_[i] * b.c_[j];
		}
		return s;
	}
	friend bool operator==(const UniSeries& a, const UniSeries& b)
	{
		int n = std::min(a.trunc(), b.trunc());
		for (int k = 0; k <= n; ++k)
			if (a.c_[k] != b.c_[k]) return false;
		return true;
	}

	/* Adds c * t^k in place. */
	void add_term(const Rat& c, int k)
	{
		if (k <= trunc()) c_[k] += c;
	}

	bool nonnegative_integers() const
	{
		for (const Rat& x : c_)
			if (!is_integer(x) || x < 0) return false;
		return true;
	}

	std::string str() const
	{
		std::string s = "[";
		for (int k = 0; k <= trunc(); ++k) {
			if (k) s += ",";
			s += c_[k].get_str();
		}
		return s + "]";
	}

private:
	std::vector<Rat> c_;
};

inline UniSeries recip(const UniSeries& a)
{
	if (a[0] == 0) throw SeriesError("recip of non-unit series", 0);
	UniSeries b(a.trunc());
	b[0] = 1 / a[0];
	for (int n = 1; n <= a.trunc(); ++n) {
		Rat acc(0);
		for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
		b[n] = -acc / a[0];
	}
	return b;
}

/* Numerator/denominator with integer coefficients; expansion is exact. */
struct RationalFn {
	std::vector<Int> num;
	std::vector<Int> den;

	RationalFn(std::vector<Int> n, std::vector<Int> d) : num(std::move(n)), den(std::move(d))
	{
		if (den.empty() || den[0] == 0)
			throw std::invalid_argument("denominator needs a nonzero constant term");
	}

	UniSeries expand(int trunc) const
	{
		UniSeries out(trunc);
		Rat d0(den[0]);
		for (int n = 0; n <= trunc; ++n) {
			Rat acc = n < (int)num.size() ? Rat(num[n]) : Rat(0);
			for (int k = 1; k <= n && k < (int)den.size(); ++k)
				acc -= Rat(den[k]) * out[n - k];
			out[n] = acc / d0;
		}
		return out;
	}
};

inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b)
{
	std::vector<Int> c(a.size() + b.size() - 1, Int(0));
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
	return c;
}

/* ---- PBW products ------------------------------------------------- */

namespace detail {

inline Int binom(unsigned long n, unsigned long k)
{
	Int r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

/* (1 + t^n)^d truncated. */
inline UniSeries odd_factor(int n, long d, int trunc)
{
	UniSeries s(trunc);
	for (long k = 0; n * k <= trunc && k <= d; ++k)
		s[(int)(n * k)] = Rat(binom((unsigned long)d, (unsigned long)k));
	return s;
}

/* (1 - t^n)^{-d} truncated. */
inline UniSeries even_factor(int n, long d, int trunc)
{
	UniSeries s(trunc);
	for (long k = 0; n * k <= trunc; ++k)
		s[(int)(n * k)] = Rat(binom((unsigned long)(d + k - 1), (unsigned long)k));
	if (d == 0) {
		s = UniSeries::one(trunc);
	}
	return s;
}

} // namespace detail

/* prod_n (1+t^(2n-1))^{d_(2n-1)} / (1-t^(2n))^{d_(2n)}; dims[i] is the
 * dimension in degree i+1. */
inline UniSeries pbw_product(const std::vector<long>& dims, int trunc)
{
	UniSeries s = UniSeries::one(trunc);
	for (int n = 1; n <= trunc && n <= (int)dims.size(); ++n) {
		long d = dims[n - 1];
		if (d < 0) throw SeriesError("negative dimension", n);
		if (d == 0) continue;
		s = s * (n % 2 ? detail::odd_factor(n, d, trunc) : detail::even_factor(n, d, trunc));
	}
	return s;
}

/* Strips one factor per degree; fails if the input is not the Hilbert
 * series of an enveloping algebra up to the truncation. */
inline std::vector<long> pbw_invert(const UniSeries& u, int trunc)
{
	if (u[0] != 1) throw SeriesError("constant term must be 1", 0);
	UniSeries t = u.truncated(trunc);
	std::vector<long> dims;
	for (int n = 1; n <= trunc; ++n) {
		Rat c = t[n];
		if (!is_integer(c)) throw SeriesError("non-integral dimension", n);
		long d = c.get_num().get_si();
		if (d < 0) throw SeriesError("negative dimension", n);
		dims.push_back(d);
		if (d == 0) continue;
		if (n % 2) {
			t = t * recip(detail::odd_factor(n, d, trunc));
		} else {
			// multiply by (1 - t^n)^d
			UniSeries f(trunc);
			for (long k = 0; n * k <= trunc && k <= d; ++k) {
				Int b = detail::binom((unsigned long)d, (unsigned long)k);
				f[(int)(n * k)] = Rat((k % 2) ? -b : b);
			}
			t = t * f;
		}
	}
	return dims;
}

/* ---- Golod / Gulliksen / Lofwall (univariate) ---------------------- */

/* 1/P' = 1/P + c t^k. */
inline UniSeries golod(const UniSeries& p, const Rat& c, int k)
{
	UniSeries inv = recip(p);
	inv.add_term(c, k);
	return recip(inv);
}

/* P_S / (1 - t^k P_M). */
inline UniSeries gulliksen(const UniSeries& ps, const UniSeries& pm, int k = 1)
{
	UniSeries d = UniSeries::one(std::min(ps.trunc(), pm.trunc()));
	for (int n = k; n <= d.trunc(); ++n) d[n] -= pm[n - k];
	return ps * recip(d);
}

/* P_{S/m^3} = P_S / (1 - t^2 P_S). */
inline UniSeries levin_golod_m3(const UniSeries& ps) { return gulliksen(ps, ps, 2); }

/* 1/P_T = (1+1/z)/T^!(z) - T(-z)/z for T with cube of the maximal ideal
 * zero; tpoly holds the coefficients of the Hilbert series T(z).
 * The z^{-1} terms of the two summands must cancel. */
inline UniSeries lofwall(const std::vector<Rat>& tpoly, const UniSeries& tbang, int trunc)
{
	if (tbang.trunc() < trunc + 1)
		throw std::invalid_argument("tbang must be expanded to trunc+1");
	UniSeries l = recip(tbang);
	if (tpoly.empty() || l[0] != tpoly[0])
		throw SeriesError("z^-1 terms fail to cancel", -1);
	UniSeries inv(trunc);
	for (int k = 0; k <= trunc; ++k) {
		Rat t1 = k + 1 < (int)tpoly.size() ? tpoly[k + 1] : Rat(0);
		// coefficient of z^k in T(-z)/z is (-1)^(k+1) tpoly[k+1]
		inv[k] = l[k] + l[k + 1] - ((k % 2 == 0) ? -t1 : t1);
	}
	return recip(inv);
}

/* ---- Bivariate series ---------------------------------------------- */

class BiSeries {
public:
	BiSeries(int nx, int ny) : nx_(nx), ny_(ny), c_((nx + 1) * (ny + 1), Rat(0)) {}
	static BiSeries one(int nx, int ny)
	{
		BiSeries s(nx, ny);
		s.at(0, 0) = 1;
		return s;
	}

	int nx() const { return nx_; }
	int ny() const { return ny_; }
	Rat& at(int i, int j) { return c_[i * (ny_ + 1) + j]; }
	const Rat& at(int i, int j) const { return c_[i * (ny_ + 1) + j]; }

	friend BiSeries operator+(const BiSeries& a, const BiSeries& b)
	{
		BiSeries s(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
		for (int i = 0; i <= s.nx_; ++i)
			for (int j = 0; j <= s.ny_; ++j) s.at(i, j) = a.at(i, j) + b.at(i, j);
		return s;
	}
	friend BiSeries operator-(const BiSeries& a, const BiSeries& b)
	{
		BiSeries s(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
		for (int i = 0; i <= s.nx_; ++i)
			for (int j = 0; j <= s.ny_; ++j) s.at(i, j) = a.at(i, j) - b.at(i, j);
		return s;
	}
	friend BiSeries operator*(const BiSeries& a, const BiSeries& b)
	{
		BiSeries s(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
		for (int i = 0; i <= s.nx_; ++i)
			for (int j = 0; j <= s.ny_; ++j) {
				if (a.at(i, j) == 0) continue;
				for (int k = 0; i + k <= s.nx_; ++k)
					for (int l = 0; j + l <= s.ny_; ++l)
						if (b.at(k, l) != 0)
							s.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
			}
		return s;
	}
	friend bool operator==(const BiSeries& a, const BiSeries& b)
	{
		int nx = std::min(a.nx_, b.nx_), ny = std::min(a.ny_, b.ny_);
		for (int i = 0; i <= nx; ++i)
			for (int j = 0; j <= ny; ++j)
				if (a.at(i, j) != b.at(i, j)) return false;
		return true;
	}

	/* Multiply by c x^a y^b in place (drops overflowing terms). */
	BiSeries shifted(const Rat& c, int a, int b) const
	{
		BiSeries s(nx_, ny_);
		for (int i = 0; i + a <= nx_; ++i)
			for (int j = 0; j + b <= ny_; ++j)
				if (at(i, j) != 0) s.at(i + a, j + b) = c * at(i, j);
		return s;
	}

	/* Exact when every nonzero coefficient has j <= ny (true for the
	 * Poincare series here, where j <= 2i <= 2 nx <= ny). */
	UniSeries specialize_y1() const
	{
		UniSeries u(nx_);
		for (int i = 0; i <= nx_; ++i) {
			Rat acc(0);
			for (int j = 0; j <= ny_; ++j) acc += at(i, j);
			u[i] = acc;
		}
		return u;
	}

	bool nonnegative_integers() const
	{
		for (const Rat& x : c_)
			if (!is_integer(x) || x < 0) return false;
		return true;
	}

	std::string str() const
	{
		std::string s = "[";
		for (int i = 0; i <= nx_; ++i) {
			if (i) s += ",";
			s += "[";
			for (int j = 0; j <= ny_; ++j) {
				if (j) s += ",";
				s += at(i, j).get_str();
			}
			s += "]";
		}
		return s + "]";
	}

private:
	int nx_, ny_;
	std::vector<Rat> c_;
};

inline BiSeries recip(const BiSeries& a)
{
	if (a.at(0, 0) == 0) throw SeriesError("recip of non-unit series", 0);
	BiSeries b(a.nx(), a.ny());
	b.at(0, 0) = 1 / a.at(0, 0);
	for (int i = 0; i <= a.nx(); ++i)
		for (int j = 0; j <= a.ny(); ++j) {
			if (i == 0 && j == 0) continue;
			Rat acc(0);
			for (int k = 0; k <= i; ++k)
				for (int l = 0; l <= j; ++l) {
					if (k == 0 && l == 0) continue;
					if (a.at(k, l) != 0) acc += a.at(k, l) * b.at(i - k, j - l);
				}
			b.at(i, j) = -acc / a.at(0, 0);
		}
	return b;
}

inline BiSeries golod(const BiSeries& p, const Rat& c, int a, int b)
{
	BiSeries inv = recip(p);
	if (a <= inv.nx() && b <= inv.ny()) inv.at(a, b) += c;
	return recip(inv);
}

/* P_S / (1 - x^a y^b P_M). */
inline BiSeries gulliksen(const BiSeries& ps, const BiSeries& pm, int a, int b)
{
	BiSeries d = BiSeries::one(std::min(ps.nx(), pm.nx()), std::min(ps.ny(), pm.ny()));
	d = d - pm.shifted(Rat(1), a, b);
	return ps * recip(d);
}

/* ---- The product identity ------------------------------------------ */

/* prod_{n=2..} (1+t^(2n-1))^2 / (1-t^(2n))^2 truncated. */
inline UniSeries radical_product_factor(int trunc)
{
	UniSeries s = UniSeries::one(trunc);
	for (int n = 2; 2 * n - 1 <= trunc; ++n)
		s = s * detail::odd_factor(2 * n - 1, 2, trunc);
	for (int n = 2; 2 * n <= trunc; ++n) s = s * detail::even_factor(2 * n, 2, trunc);
	return s;
}

/* S^!(t) = T^!(t): rational prefactor times the infinite product. */
inline UniSeries koszul_dual_series(int trunc)
{
	RationalFn pre({Int(1)},
	               poly_mul(poly_mul({Int(1), Int(1)}, poly_mul({Int(1), Int(-2)}, {Int(1), Int(-2)})),
	                        {Int(1), Int(-3), Int(1)}));
	return pre.expand(trunc) * radical_product_factor(trunc);
}

/* Same series via the decomposition route: the enveloping series of the
 * radical-free quotient times the radical's own product factor. */
inline UniSeries koszul_dual_series_decomposed(int trunc)
{
	RationalFn bar({Int(1), Int(-1)},
	               poly_mul(poly_mul({Int(1), Int(-2)}, {Int(1), Int(-2)}), {Int(1), Int(-3), Int(1)}));
	UniSeries rad = detail::even_factor(2, 1, trunc) * radical_product_factor(trunc);
	return bar.expand(trunc) * rad;
}

struct Theorem1Result {
	BiSeries ps_xy;
	BiSeries prbar197_xy;
	BiSeries pr197_xy;
	UniSeries prbar197_z;
	UniSeries pr197_z;
	bool laurent_cancellation = false;
	bool two_route_equal = false;
	bool y1_identity = false;
	bool r197_relation = false;
	bool nonneg_integers = false;
};

/* sbang must be expanded at least to degree nx+1. The two routes are
 * the closed formula and the chain quotient-then-socle-correction; both
 * are computed and compared coefficientwise. */
inline Theorem1Result assemble_theorem1(const UniSeries& sbang, int nx, int ny)
{
	if (sbang.trunc() < nx + 1) throw std::invalid_argument("sbang too short");
	Theorem1Result res{BiSeries(nx, ny), BiSeries(nx, ny), BiSeries(nx, ny),
	                   UniSeries(nx),   UniSeries(nx)};

	const std::vector<Rat> s_hilb = {Rat(1), Rat(6), Rat(10), Rat(1)}; // S(t)
	UniSeries gamma = recip(sbang);
	res.laurent_cancellation = (gamma[0] == s_hilb[0]);
	if (!res.laurent_cancellation) return res;

	// 1/P_S(x,y) = (1+1/x)/S^!(xy) - S(-xy)/x
	BiSeries inv_ps(nx, ny);
	for (int i = 0; i <= nx; ++i) {
		if (i <= ny) inv_ps.at(i, i) += gamma[i];
		int j = i + 1;
		if (j <= ny) {
			inv_ps.at(i, j) += gamma[j];
			if (j < (int)s_hilb.size())
				inv_ps.at(i, j) -= ((j % 2) ? -s_hilb[j] : s_hilb[j]);
		}
	}
	res.ps_xy = recip(inv_ps);

	// route 1: 1/P_Rbar197 = (1-xy)/P_S - 4xy^2 - 4x^2y^3
	BiSeries inv1 = inv_ps - inv_ps.shifted(Rat(1), 1, 1);
	if (1 <= nx && 2 <= ny) inv1.at(1, 2) -= 4;
	if (2 <= nx && 3 <= ny) inv1.at(2, 3) -= 4;
	res.prbar197_xy = recip(inv1);

	// route 2: Gulliksen for the trivial extension, then the socle Golod step
	BiSeries pmbar = BiSeries::one(nx, ny) + res.ps_xy.shifted(Rat(4), 0, 1) +
	                 res.ps_xy.shifted(Rat(4), 1, 2) + res.ps_xy.shifted(Rat(1), 1, 3);
	BiSeries prbar = gulliksen(res.ps_xy, pmbar, 1, 1);
	BiSeries route2 = golod(prbar, Rat(1), 2, 4);
	res.two_route_equal = (res.prbar197_xy == route2);

	res.prbar197_z = res.prbar197_xy.specialize_y1();
	UniSeries ps_z = res.ps_xy.specialize_y1();
	UniSeries lhs = recip(res.prbar197_z);
	UniSeries inv_psz = recip(ps_z);
	UniSeries rhs(nx);
	for (int k = 0; k <= nx; ++k) rhs[k] = inv_psz[k] - (k >= 1 ? inv_psz[k - 1] : Rat(0));
	rhs.add_term(Rat(-4), 1);
	rhs.add_term(Rat(-4), 2);
	res.y1_identity = (lhs == rhs);

	// the killed parameter contributes one exterior variable
	UniSeries one_plus_z(nx);
	one_plus_z[0] = 1;
	if (nx >= 1) one_plus_z[1] = 1;
	res.pr197_z = one_plus_z * res.prbar197_z;
	res.pr197_xy = res.prbar197_xy + res.prbar197_xy.shifted(Rat(1), 1, 1);
	res.r197_relation = (res.pr197_xy.specialize_y1() == res.pr197_z);

	res.nonneg_integers = res.ps_xy.nonnegative_integers() &&
	                      res.prbar197_xy.nonnegative_integers() &&
	                      res.pr197_xy.nonnegative_integers() &&
	                      res.prbar197_z.nonnegative_integers() &&
	                      res.pr197_z.nonnegative_integers();
	return res;
}

} // namespace gorlab
