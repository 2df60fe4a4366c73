#pragma once

/* The lambda_{m,n} coefficients of the radical extension cocycle,
 * built by the even/odd antidiagonal procedure:
 *   lambda_{2m,2n} = 0
 *   lambda_{m,n}   = -(-1)^{mn} lambda_{n,m}
 *   lambda_{m+1,n} = lambda_{m,n} + (-1)^{m+1} lambda_{m,n+1}
 * with lambda_{1,1} = 2, lambda_{2,1} = 1. The free choices that the
 * construction leaves open (lambda_{1,k-1} for odd k with (k-1)/2 even)
 * are fixed to 0. */

#include <stdexcept>
#include <vector>

#include "../arith.hpp"

namespace gorlab {

class LambdaTable {
public:
	explicit LambdaTable(int max_sum) : n_(max_sum)
	{
		if (max_sum < 2) throw std::invalid_argument("max_sum must be >= 2");
		tab_.assign((size_t)(n_ + 1) * (n_ + 1), Rat(0));
		at(1, 1) = 2;
		for (int k = 3; k <= n_; ++k) {
			if (k % 2 == 0) {
				// even antidiagonal
				at(1, k - 1) = at(k - 2, 1);
				for (int m = 2; m < k; ++m) {
					int n = k - m;
					if (m % 2 == 1 && n % 2 == 1)
						at(m, n) = at(m - 1, n);
					else
						at(m, n) = 0;
				}
			} else {
				int r = (k - 1) / 2;
				Rat s(0);
				for (int j = 1; j <= r; ++j) {
					Rat term = at(k - 2 * j, 2 * j - 1);
					s += (j % 2 == 1) ? term : -term;
				}
				// r even: the sum vanishes and lambda_{1,k-1} is free (0);
				// r odd: lambda_{k-1,1} = -lambda_{1,k-1} = s/2.
				at(1, k - 1) = (r % 2 == 1) ? -s / 2 : Rat(0);
				for (int m = 1; m + 1 < k; ++m) {
					int n = k - m - 1;
					Rat inc = at(m, n + 1);
					at(m + 1, n) = at(m, n) + ((m % 2 == 0) ? -inc : inc);
				}
			}
		}
	}

	int max_sum() const { return n_; }

	const Rat& operator()(int m, int n) const
	{
		if (m < 1 || n < 1 || m + n > n_)
			throw std::out_of_range("lambda index out of range");
		return tab_[(size_t)m * (n_ + 1) + n];
	}

	bool check_conditions() const
	{
		for (int m = 1; m < n_; ++m)
			for (int n = 1; m + n <= n_; ++n) {
				if (m % 2 == 0 && n % 2 == 0 && (*this)(m, n) != 0) return false;
				// lambda_{m,n} = -(-1)^{mn} lambda_{n,m}
				Rat rhs = ((m * n) % 2 == 1) ? (*this)(n, m) : -(*this)(n, m);
				if ((*this)(m, n) != rhs) return false;
				// lambda_{m+1,n} = lambda_{m,n} + (-1)^{m+1} lambda_{m,n+1}
				if (m + n + 1 <= n_) {
					Rat rec = (*this)(m, n) +
					          ((m % 2 == 0) ? -(*this)(m, n + 1) : (*this)(m, n + 1));
					if ((*this)(m + 1, n) != rec) return false;
				}
			}
		return true;
	}

private:
	Rat& at(int m, int n) { return tab_[(size_t)m * (n_ + 1) + n]; }

	int n_;
	std::vector<Rat> tab_;
};

} // namespace gorlab
