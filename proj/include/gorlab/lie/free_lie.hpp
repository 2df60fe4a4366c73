#pragma once

/* Free graded Lie superalgebra components (all generators odd, degree
 * 1) as row-reduced vectors in the free associative word space:
 * L_1 = generators, L_d = [L_1, L_{d-1}] for d >= 2. Small degrees
 * only; this is the flat construction the faster quotient machinery is
 * checked against. */

#include <map>
#include <stdexcept>
#include <vector>

#include "../arith.hpp"
#include "word_quotient.hpp"

namespace gorlab {

/* Sparse word vectors over one degree; columns are word codes. */
using WordVec = std::vector<std::pair<Word, Rat>>; // sorted by word

inline WordVec wordvec_add(const WordVec& a, const WordVec& b, const Rat& c)
{
	WordVec out;
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
			out.push_back(a[i++]);
		} else if (i == a.size() || b[j].first < a[i].first) {
			out.push_back({b[j].first, c * b[j].second});
			++j;
		} else {
			Rat x = a[i].second + c * b[j].second;
			if (x != 0) out.push_back({a[i].first, x});
			++i;
			++j;
		}
	}
	return out;
}

/* [a, b] in the free algebra; degrees da, db fix the sign rule. */
inline WordVec wordvec_bracket(const WordVec& a, int da, const WordVec& b, int db, int ngens)
{
	Word shift_b = 1, shift_a = 1;
	for (int i = 0; i < db; ++i) shift_b *= ngens;
	for (int i = 0; i < da; ++i) shift_a *= ngens;
	std::map<Word, Rat> acc;
	Rat sign((da % 2) && (db % 2) ? 1 : -1);
	for (auto& [wa, ca] : a)
		for (auto& [wb, cb] : b) {
			acc[wa * shift_b + wb] += ca * cb;
			acc[wb * shift_a + wa] += sign * ca * cb;
		}
	WordVec out;
	for (auto& [w, c] : acc)
		if (c != 0) out.push_back({w, c});
	return out;
}

class WordEchelon {
public:
	bool insert(WordVec v)
	{
		reduce(v);
		if (v.empty()) return false;
		Rat lead = v.front().second;
		for (auto& [w, c] : v) c /= lead;
		rows_[v.front().first] = std::move(v);
		return true;
	}
	/* Eliminates the leading word while it is a pivot; a vector in the
	 * span reduces to empty, anything else stops at an unused lead. */
	void reduce(WordVec& v) const
	{
		while (!v.empty()) {
			auto it = rows_.find(v.front().first);
			if (it == rows_.end()) return;
			v = wordvec_add(v, it->second, -v.front().second);
		}
	}
	bool contains(WordVec v) const
	{
		reduce(v);
		return v.empty();
	}
	int rank() const { return (int)rows_.size(); }
	const std::map<Word, WordVec>& rows() const { return rows_; }

private:
	std::map<Word, WordVec> rows_;
};

/* Basis of the degree-d component of the free Lie superalgebra on
 * ngens odd generators. */
inline std::vector<WordVec> free_lie_component(int ngens, int d, int degree_guard = 8)
{
	if (d < 1) throw std::invalid_argument("degree must be >= 1");
	if (d > degree_guard) throw std::runtime_error("free Lie degree guard exceeded");
	std::vector<WordVec> basis;
	for (int x = 0; x < ngens; ++x) basis.push_back({{(Word)x, Rat(1)}});
	for (int deg = 2; deg <= d; ++deg) {
		WordEchelon ech;
		std::vector<WordVec> next;
		for (int x = 0; x < ngens; ++x) {
			WordVec g{{(Word)x, Rat(1)}};
			for (const WordVec& b : basis) {
				WordVec br = wordvec_bracket(g, 1, b, deg - 1, ngens);
				if (ech.insert(br)) next.push_back(std::move(br));
			}
		}
		basis = std::move(next);
	}
	return basis;
}

inline std::vector<int> free_lie_dims(int ngens, int maxdeg, int degree_guard = 8)
{
	std::vector<int> dims;
	for (int d = 1; d <= maxdeg; ++d)
		dims.push_back((int)free_lie_component(ngens, d, degree_guard).size());
	return dims;
}

} // namespace gorlab
