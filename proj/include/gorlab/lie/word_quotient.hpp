#pragma once

/* Exact linear algebra in the free associative word space, organized
 * degree by degree. A_d splits by first letter as ⊕_x x·A_{d-1}, so the
 * two-sided ideal satisfies I_d = A_1·I_{d-1} + R·A_{d-deg r}; the
 * first summand is handled structurally (reduce each first-letter
 * block recursively) and only the genuinely new degree-d rows are
 * echelonized. Columns at degree d are pairs (letter, normal word of
 * degree d-1); the non-pivot columns are the normal words of degree d
 * and index the quotient U_d. */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "../arith.hpp"
#include "expr.hpp"

namespace gorlab {

template <class F>
inline F from_rat(const Rat& r);

template <>
inline Rat from_rat<Rat>(const Rat& r)
{
	return r;
}
template <>
inline Rat64 from_rat<Rat64>(const Rat& r)
{
	if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) throw overflow_error();
	return Rat64(r.get_num().get_si(), r.get_den().get_si());
}
template <>
inline Fp from_rat<Fp>(const Rat& r)
{
	Int num = r.get_num() % (long)Fp::P;
	Int den = r.get_den() % (long)Fp::P;
	return Fp(num.get_si()) / Fp(den.get_si());
}

/* Word = digit string in base n, most significant digit first. */
using Word = uint64_t;

template <class F>
using UVec = std::vector<std::pair<uint32_t, F>>; // sorted by index

template <class F>
class DenseAcc {
public:
	void reset(size_t n)
	{
		if (val_.size() < n) {
			val_.resize(n, F(0));
			mark_.resize(n, 0);
		}
		for (uint32_t i : touched_) {
			val_[i] = F(0);
			mark_[i] = 0;
		}
		touched_.clear();
	}
	void add(uint32_t i, const F& c)
	{
		if (!mark_[i]) {
			mark_[i] = 1;
			touched_.push_back(i);
		}
		val_[i] += c;
	}
	void add_vec(const UVec<F>& v, const F& c)
	{
		for (auto& [i, x] : v) add(i, c * x);
	}
	const F& at(uint32_t i) const { return val_[i]; }
	UVec<F> take_sorted()
	{
		std::sort(touched_.begin(), touched_.end());
		UVec<F> out;
		out.reserve(touched_.size());
		for (uint32_t i : touched_) {
			if (!field_traits<F>::is_zero(val_[i])) out.push_back({i, val_[i]});
			val_[i] = F(0);
			mark_[i] = 0;
		}
		touched_.clear();
		return out;
	}

private:
	std::vector<F> val_;
	std::vector<char> mark_;
	std::vector<uint32_t> touched_;
};

struct WordAlgebraOptions {
	int degree_cap = 8;
	size_t column_guard = 6000000; // abort cleanly past this many columns
};

template <class F>
class WordAlgebra {
public:
	/* relations: homogeneous word vectors with their degrees. */
	WordAlgebra(int ngens, std::vector<std::pair<int, std::vector<std::pair<Word, F>>>> rels,
	            WordAlgebraOptions opt = {})
	    : n_(ngens), rels_(std::move(rels)), opt_(opt)
	{
		if (ngens < 1 || ngens > 16) throw std::invalid_argument("1..16 generators");
		pow_.push_back(1);
		for (int i = 0; i < 20; ++i) pow_.push_back(pow_.back() * (Word)n_);
		for (auto& [d, rv] : rels_)
			if (d < 2) throw std::invalid_argument("relations must have degree >= 2");
		degrees_.resize(1); // degree 0 unused
	}

	int ngens() const { return n_; }

	void ensure(int d)
	{
		if (d > opt_.degree_cap)
			throw std::runtime_error("degree cap exceeded (cap " +
			                         std::to_string(opt_.degree_cap) + ")");
		while ((int)degrees_.size() <= d) build_next();
	}

	long normal_count(int d)
	{
		ensure(d);
		return (long)degrees_[d].normal_code.size();
	}
	const std::vector<Word>& normal_words(int d)
	{
		ensure(d);
		return degrees_[d].normal_code;
	}
	Word normal_code(int d, uint32_t idx) const { return degrees_[d].normal_code[idx]; }

	std::string word_str(Word w, int d, const std::vector<std::string>& names) const
	{
		std::string s;
		for (int k = 0; k < d; ++k) s += names[(w / pow_[d - 1 - k]) % n_];
		return s;
	}

	/* Normal form of a single word as a vector over normal words. */
	const UVec<F>& reduce_word(Word w, int d)
	{
		DegreeData& dd = degrees_.at(d);
		auto it = dd.word_cache.find(w);
		if (it != dd.word_cache.end()) return it->second;
		UVec<F> res;
		if (d == 1) {
			res.push_back({(uint32_t)w, F(1)});
		} else {
			uint32_t x = (uint32_t)(w / pow_[d - 1]);
			Word wp = w % pow_[d - 1];
			UVec<F> sub = reduce_word(wp, d - 1); // copy: recursion may rehash
			res = lambda(x, sub, d - 1);
		}
		return dd.word_cache.emplace(w, std::move(res)).first->second;
	}

	UVec<F> reduce_wordvec(const std::vector<std::pair<Word, F>>& words, int d)
	{
		ensure(d);
		acc_.reset(degrees_[d].normal_code.size());
		for (auto& [w, c] : words) acc_.add_vec(reduce_word(w, d), c);
		return acc_.take_sorted();
	}

	/* x · v for v in U_{dv} coordinates; degree dv+1 must be built. */
	UVec<F> lambda(uint32_t x, const UVec<F>& v, int dv)
	{
		const DegreeData& dd = degrees_.at(dv + 1);
		long u_prev = (long)degrees_[dv].normal_code.size();
		DenseAcc<F>& acc = lambda_acc_[(dv + 1) & 1];
		acc.reset(dd.normal_code.size());
		for (auto& [j, c] : v) {
			int64_t st = dd.col_state[(size_t)x * u_prev + j];
			if (st < 0)
				acc.add((uint32_t)(-st - 1), c);
			else
				acc.add_vec(dd.rows[st], -c); // pivot word = -tail
		}
		return acc.take_sorted();
	}

	/* v · g. */
	UVec<F> right_mul(const UVec<F>& v, int dv, uint32_t g)
	{
		ensure(dv + 1);
		if (dv == 1) {
			UVec<F> out;
			acc_.reset(degrees_[2].normal_code.size());
			for (auto& [j, c] : v) acc_.add_vec(reduce_word((Word)j * n_ + g, 2), c);
			return acc_.take_sorted();
		}
		const DegreeData& dd = degrees_[dv];
		long u_prev = (long)degrees_[dv - 1].normal_code.size();
		std::vector<UVec<F>> buckets(n_);
		for (auto& [j, c] : v) {
			uint32_t col = dd.normal_col[j];
			buckets[col / u_prev].push_back({(uint32_t)(col % u_prev), c});
		}
		DenseAcc<F> acc;
		acc.reset(degrees_[dv + 1].normal_code.size());
		for (int x = 0; x < n_; ++x) {
			if (buckets[x].empty()) continue;
			UVec<F> sub = right_mul(buckets[x], dv - 1, g);
			acc.add_vec(lambda(x, sub, dv), F(1));
		}
		return acc.take_sorted();
	}

	/* w (a plain word of length lw) times v. */
	UVec<F> prepend(Word w, int lw, UVec<F> v, int dv)
	{
		for (int k = lw - 1; k >= 0; --k) {
			uint32_t x = (uint32_t)((w / pow_[lw - 1 - k]) % n_);
			ensure(dv + 1);
			v = lambda(x, v, dv);
			++dv;
		}
		return v;
	}

	UVec<F> mul(const UVec<F>& a, int da, const UVec<F>& b, int db)
	{
		ensure(da + db);
		DenseAcc<F> acc;
		acc.reset(degrees_[da + db].normal_code.size());
		for (auto& [i, c] : a) {
			UVec<F> t = prepend(degrees_[da].normal_code[i], da, b, db);
			acc.add_vec(t, c);
		}
		return acc.take_sorted();
	}

	/* Super bracket [a, b] = ab - (-1)^{|a||b|} ba. */
	UVec<F> bracket(const UVec<F>& a, int da, const UVec<F>& b, int db)
	{
		UVec<F> ab = mul(a, da, b, db);
		UVec<F> ba = mul(b, db, a, da);
		F sign((da % 2) && (db % 2) ? 1 : -1); // -(-1)^{da db}
		DenseAcc<F> acc;
		acc.reset(degrees_[da + db].normal_code.size());
		acc.add_vec(ab, F(1));
		acc.add_vec(ba, sign);
		return acc.take_sorted();
	}

private:
	struct DegreeData {
		std::vector<Word> normal_code;
		std::vector<uint32_t> normal_col;
		std::vector<int64_t> col_state; // >=0 row id, <0 -(normal idx)-1
		std::vector<UVec<F>> rows;      // tails over normal indices of this degree
		std::unordered_map<Word, UVec<F>> word_cache;
	};

	void build_next()
	{
		int d = (int)degrees_.size();
		degrees_.emplace_back();
		DegreeData& dd = degrees_[d];
		if (d == 0) return;
		if (d == 1) {
			for (int x = 0; x < n_; ++x) {
				dd.normal_code.push_back((Word)x);
				dd.normal_col.push_back((uint32_t)x);
			}
			dd.col_state.assign(n_, 0);
			for (int x = 0; x < n_; ++x) dd.col_state[x] = -(int64_t)x - 1;
			return;
		}
		size_t u_prev = degrees_[d - 1].normal_code.size();
		size_t cols = (size_t)n_ * u_prev;
		if (cols > opt_.column_guard)
			throw std::runtime_error("column guard exceeded at degree " + std::to_string(d));

		std::vector<int64_t> pivot_row(cols, -1);
		std::vector<UVec<F>> build_rows; // tails over columns, pivot removed

		DenseAcc<F> acc;
		auto insert_candidate = [&]() {
			// ascending-column elimination over the accumulator
			UVec<F> pending = acc.take_sorted();
			size_t cursor = 0;
			while (cursor < pending.size()) {
				auto [col, val] = pending[cursor];
				if (field_traits<F>::is_zero(val)) {
					++cursor;
					continue;
				}
				if (pivot_row[col] < 0) {
					// new pivot: normalize the rest
					UVec<F> tail;
					tail.reserve(pending.size() - cursor - 1);
					for (size_t k = cursor + 1; k < pending.size(); ++k)
						if (!field_traits<F>::is_zero(pending[k].second))
							tail.push_back({pending[k].first,
							                pending[k].second / val});
					pivot_row[col] = (int64_t)build_rows.size();
					build_rows.push_back(std::move(tail));
					return;
				}
				// pending -= val * row  (row cols all > col)
				const UVec<F>& row = build_rows[pivot_row[col]];
				UVec<F> merged;
				merged.reserve(pending.size() - cursor - 1 + row.size());
				size_t i = cursor + 1, j = 0;
				while (i < pending.size() || j < row.size()) {
					if (j == row.size() ||
					    (i < pending.size() && pending[i].first < row[j].first)) {
						merged.push_back(pending[i++]);
					} else if (i == pending.size() ||
					           row[j].first < pending[i].first) {
						merged.push_back({row[j].first, -val * row[j].second});
						++j;
					} else {
						F x = pending[i].second - val * row[j].second;
						if (!field_traits<F>::is_zero(x))
							merged.push_back({pending[i].first, x});
						++i;
						++j;
					}
				}
				pending = std::move(merged);
				cursor = 0;
			}
		};

		for (auto& [rdeg, rv] : rels_) {
			if (rdeg > d) continue;
			if (rdeg == d) {
				acc.reset(cols);
				for (auto& [w, c] : rv) add_word_blocks(acc, w, c, d, u_prev);
				insert_candidate();
			} else {
				const std::vector<Word>& normals = degrees_[d - rdeg].normal_code;
				for (Word nw : normals) {
					acc.reset(cols);
					for (auto& [w, c] : rv)
						add_word_blocks(acc, w * pow_[d - rdeg] + nw, c, d, u_prev);
					insert_candidate();
				}
			}
		}

		// assign normal indices to the non-pivot columns
		dd.col_state.assign(cols, 0);
		for (size_t col = 0; col < cols; ++col) {
			if (pivot_row[col] < 0) {
				uint32_t idx = (uint32_t)dd.normal_code.size();
				dd.col_state[col] = -(int64_t)idx - 1;
				dd.normal_col.push_back((uint32_t)col);
				Word code = (Word)(col / u_prev) * pow_[d - 1] +
				            degrees_[d - 1].normal_code[col % u_prev];
				dd.normal_code.push_back(code);
			}
		}

		// back-substitution, descending pivots: tails become normal-only
		dd.rows.resize(build_rows.size());
		std::vector<char> done(build_rows.size(), 0);
		DenseAcc<F> nacc;
		for (size_t col = cols; col-- > 0;) {
			if (pivot_row[col] < 0) continue;
			size_t rid = (size_t)pivot_row[col];
			nacc.reset(dd.normal_code.size());
			for (auto& [c2, v2] : build_rows[rid]) {
				int64_t st2 = pivot_row[c2];
				if (st2 < 0)
					nacc.add((uint32_t)(-dd.col_state[c2] - 1), v2);
				else
					// pivot word c2 has normal form -rows[st2]
					nacc.add_vec(dd.rows[st2], -v2);
			}
			dd.rows[rid] = nacc.take_sorted();
			done[rid] = 1;
			build_rows[rid].clear();
			build_rows[rid].shrink_to_fit();
			dd.col_state[col] = (int64_t)rid;
		}
		(void)done;
	}

	void add_word_blocks(DenseAcc<F>& acc, Word w, const F& c, int d, size_t u_prev)
	{
		uint32_t x = (uint32_t)(w / pow_[d - 1]);
		Word wp = w % pow_[d - 1];
		const UVec<F>& v = reduce_word(wp, d - 1);
		for (auto& [j, cc] : v) acc.add((uint32_t)(x * u_prev + j), c * cc);
	}

	int n_;
	std::vector<std::pair<int, std::vector<std::pair<Word, F>>>> rels_;
	WordAlgebraOptions opt_;
	std::vector<Word> pow_;
	std::vector<DegreeData> degrees_;
	DenseAcc<F> acc_;
	DenseAcc<F> lambda_acc_[2];
};

/* Expands a Lie expression into the free word space (exact, over Q). */
inline std::vector<std::pair<Word, Rat>> expand_to_words(const LieExprPtr& e, int ngens)
{
	std::vector<Word> pow{1};
	for (int i = 0; i < 20; ++i) pow.push_back(pow.back() * (Word)ngens);
	std::function<std::map<Word, Rat>(const LieExprPtr&)> go =
	    [&](const LieExprPtr& x) -> std::map<Word, Rat> {
		std::map<Word, Rat> out;
		switch (x->kind()) {
		case LieExpr::Kind::Gen:
			out[(Word)x->gen_index()] = 1;
			break;
		case LieExpr::Kind::Bracket: {
			auto a = go(x->left());
			auto b = go(x->right());
			int da = x->left()->degree(), db = x->right()->degree();
			Rat sign((da % 2) && (db % 2) ? 1 : -1); // -(-1)^{da db}
			for (auto& [wa, ca] : a)
				for (auto& [wb, cb] : b) {
					out[wa * pow[db] + wb] += ca * cb;
					out[wb * pow[da] + wa] += sign * ca * cb;
				}
			break;
		}
		case LieExpr::Kind::Square: {
			auto a = go(x->left());
			int da = x->left()->degree();
			for (auto& [wa, ca] : a)
				for (auto& [wb, cb] : a) out[wa * pow[da] + wb] += ca * cb;
			break;
		}
		case LieExpr::Kind::Sum:
			for (auto& [c, t] : x->terms())
				for (auto& [w, cw] : go(t)) out[w] += c * cw;
			break;
		}
		return out;
	};
	std::vector<std::pair<Word, Rat>> vec;
	for (auto& [w, c] : go(e))
		if (c != 0) vec.push_back({w, c});
	return vec;
}

} // namespace gorlab
