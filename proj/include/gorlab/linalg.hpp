#pragma once

/* Small exact linear-algebra helpers shared by the presentation and
 * grading modules: a sparse row echelon for rank queries and a dense
 * Gauss-Jordan nullspace over the rationals. */

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace gorlab {

template <class F>
using SparseVec = std::vector<std::pair<int, F>>; // sorted by column

/* Incremental echelon: rows normalized to pivot 1, pivot = smallest
 * column. insert() returns true when the vector enlarges the span. */
template <class F>
class RowEchelon {
public:
	bool insert(SparseVec<F> v)
	{
		reduce(v);
		if (v.empty()) return false;
		F lead = v.front().second;
		for (auto& [c, x] : v) x /= lead;
		int pivot = v.front().first;
		rows_[pivot] = std::move(v);
		return true;
	}

	/* Reduces v against the stored rows (eliminating every pivot
	 * column); the result may be nonzero only in non-pivot columns. */
	void reduce(SparseVec<F>& v) const
	{
		SparseVec<F> work = std::move(v);
		SparseVec<F> out;
		while (!work.empty()) {
			auto [c, x] = work.front();
			if (field_traits<F>::is_zero(x)) {
				work.erase(work.begin());
				continue;
			}
			auto it = rows_.find(c);
			if (it == rows_.end()) {
				out.push_back({c, x});
				work.erase(work.begin());
				continue;
			}
			// work -= x * row
			SparseVec<F> merged;
			const SparseVec<F>& row = it->second;
			size_t i = 0, j = 0;
			while (i < work.size() || j < row.size()) {
				if (j == row.size() || (i < work.size() && work[i].first < row[j].first)) {
					merged.push_back(work[i++]);
				} else if (i == work.size() || row[j].first < work[i].first) {
					merged.push_back({row[j].first, -x * row[j].second});
					++j;
				} else {
					F val = work[i].second - x * row[j].second;
					if (!field_traits<F>::is_zero(val)) merged.push_back({work[i].first, val});
					++i;
					++j;
				}
			}
			work = std::move(merged);
		}
		v = std::move(out);
	}

	bool contains(SparseVec<F> v) const
	{
		reduce(v);
		return v.empty();
	}

	int rank() const { return (int)rows_.size(); }

private:
	std::map<int, SparseVec<F>> rows_;
};

/* Exact nullspace basis of an m x n rational matrix (row-major), via
 * Gauss-Jordan; also reports the pivot columns. */
struct NullspaceResult {
	std::vector<std::vector<Rat>> basis; // each of length n
	std::vector<int> pivot_columns;
	std::vector<int> free_columns;
};

inline NullspaceResult nullspace(std::vector<std::vector<Rat>> m, int ncols)
{
	NullspaceResult res;
	int nrows = (int)m.size();
	int row = 0;
	std::vector<int> pivot_of_col(ncols, -1);
	for (int col = 0; col < ncols && row < nrows; ++col) {
		int sel = -1;
		for (int r = row; r < nrows; ++r)
			if (m[r][col] != 0) {
				sel = r;
				break;
			}
		if (sel < 0) continue;
		std::swap(m[row], m[sel]);
		Rat inv = 1 / m[row][col];
		for (int c = col; c < ncols; ++c) m[row][c] *= inv;
		for (int r = 0; r < nrows; ++r) {
			if (r == row || m[r][col] == 0) continue;
			Rat f = m[r][col];
			for (int c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
		}
		pivot_of_col[col] = row;
		res.pivot_columns.push_back(col);
		++row;
	}
	for (int col = 0; col < ncols; ++col)
		if (pivot_of_col[col] < 0) res.free_columns.push_back(col);
	for (int fc : res.free_columns) {
		std::vector<Rat> v(ncols, Rat(0));
		v[fc] = 1;
		for (int col = 0; col < ncols; ++col) {
			int pr = pivot_of_col[col];
			if (pr >= 0) v[col] = -m[pr][fc];
		}
		res.basis.push_back(std::move(v));
	}
	return res;
}

} // namespace gorlab
