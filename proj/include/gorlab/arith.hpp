#pragma once

/* Exact coefficient types used throughout: GMP-backed integers and
 * rationals, a checked 64-bit rational for the hot linear-algebra
 * paths, and the prime field F_p with p = 2^31 - 1. */

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gorlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1)
{
	Rat r(num, den);
	r.canonicalize();
	return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/* Thrown by Rat64 when a value leaves the 64-bit range; callers retry
 * with Rat. Never silently wraps. */
struct overflow_error : std::runtime_error {
	overflow_error() : std::runtime_error("Rat64 overflow") {}
};

/* Rational with 64-bit numerator/denominator, canonical form
 * (den > 0, gcd = 1). Intermediate products use __int128 and any
 * result outside int64 throws. */
class Rat64 {
public:
	Rat64() : num_(0), den_(1) {}
	Rat64(long long n) : num_(n), den_(1) {}
	Rat64(long long n, long long d) { *this = make(n, d); }

	long long num() const { return num_; }
	long long den() const { return den_; }
	bool is_zero() const { return num_ == 0; }

	friend Rat64 operator-(const Rat64& a)
	{
		Rat64 r;
		r.num_ = -a.num_;
		r.den_ = a.den_;
		return r;
	}
	friend Rat64 operator+(const Rat64& a, const Rat64& b)
	{
		__int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
		__int128 d = (__int128)a.den_ * b.den_;
		return make(n, d);
	}
	friend Rat64 operator-(const Rat64& a, const Rat64& b) { return a + (-b); }
	friend Rat64 operator*(const Rat64& a, const Rat64& b)
	{
		__int128 n = (__int128)a.num_ * b.num_;
		__int128 d = (__int128)a.den_ * b.den_;
		return make(n, d);
	}
	friend Rat64 operator/(const Rat64& a, const Rat64& b)
	{
		if (b.num_ == 0) throw std::domain_error("Rat64 division by zero");
		__int128 n = (__int128)a.num_ * b.den_;
		__int128 d = (__int128)a.den_ * b.num_;
		return make(n, d);
	}
	Rat64& operator+=(const Rat64& b) { return *this = *this + b; }
	Rat64& operator-=(const Rat64& b) { return *this = *this - b; }
	Rat64& operator*=(const Rat64& b) { return *this = *this * b; }
	Rat64& operator/=(const Rat64& b) { return *this = *this / b; }
	friend bool operator==(const Rat64& a, const Rat64& b)
	{
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }

	Rat to_rat() const { return Rat(Int((long)num_), Int((long)den_)); }

private:
	static Rat64 make(__int128 n, __int128 d)
	{
		if (d < 0) {
			n = -n;
			d = -d;
		}
		__int128 g = gcd128(n < 0 ? -n : n, d);
		if (g > 1) {
			n /= g;
			d /= g;
		}
		// exclude INT64_MIN so negation stays in range
		if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw overflow_error();
		Rat64 r;
		r.num_ = (long long)n;
		r.den_ = (long long)d;
		return r;
	}
	static __int128 gcd128(__int128 a, __int128 b)
	{
		while (b != 0) {
			__int128 t = a % b;
			a = b;
			b = t;
		}
		return a == 0 ? 1 : a;
	}

	long long num_;
	long long den_;
};

/* F_p, p = 2^31 - 1 (Mersenne prime). */
class Fp {
public:
	static constexpr uint64_t P = 2147483647ull;

	Fp() : v_(0) {}
	Fp(long long n)
	{
		long long m = n % (long long)P;
		if (m < 0) m += P;
		v_ = (uint32_t)m;
	}

	bool is_zero() const { return v_ == 0; }
	uint32_t value() const { return v_; }

	friend Fp operator-(const Fp& a) { return from_raw(a.v_ == 0 ? 0 : (uint32_t)(P - a.v_)); }
	friend Fp operator+(const Fp& a, const Fp& b)
	{
		uint64_t s = (uint64_t)a.v_ + b.v_;
		if (s >= P) s -= P;
		return from_raw((uint32_t)s);
	}
	friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
	friend Fp operator*(const Fp& a, const Fp& b)
	{
		return from_raw((uint32_t)((uint64_t)a.v_ * b.v_ % P));
	}
	friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
	Fp& operator+=(const Fp& b) { return *this = *this + b; }
	Fp& operator-=(const Fp& b) { return *this = *this - b; }
	Fp& operator*=(const Fp& b) { return *this = *this * b; }
	Fp& operator/=(const Fp& b) { return *this = *this / b; }
	friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

	Fp inverse() const
	{
		if (v_ == 0) throw std::domain_error("Fp inverse of zero");
		// Fermat
		uint64_t base = v_, result = 1, e = P - 2;
		while (e) {
			if (e & 1) result = result * base % P;
			base = base * base % P;
			e >>= 1;
		}
		return from_raw((uint32_t)result);
	}

private:
	static Fp from_raw(uint32_t v)
	{
		Fp f;
		f.v_ = v;
		return f;
	}
	uint32_t v_;
};

template <class F>
struct field_traits {
	static F zero() { return F(0); }
	static F one() { return F(1); }
	static bool is_zero(const F& x) { return x.is_zero(); }
};

template <>
struct field_traits<Rat> {
	static Rat zero() { return Rat(0); }
	static Rat one() { return Rat(1); }
	static bool is_zero(const Rat& x) { return x == 0; }
};

} // namespace gorlab
