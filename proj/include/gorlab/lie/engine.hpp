#pragma once

/* Finitely presented graded Lie superalgebra calculator. Quotient
 * components are cut out inside the enveloping algebra: the PBW
 * embedding identifies eta_d with the span of left-normed bracket
 * images in U_d, so dimensions, labeled bases (modbas), def/fed,
 * ideals, annihilators, products and subalgebras all reduce to exact
 * linear algebra on small coordinate vectors. */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "expr.hpp"
#include "word_quotient.hpp"

namespace gorlab {

struct LieEngineOptions {
	int degree_cap = 7;
	int assoc_degree_cap = 8;
	size_t column_guard = 6000000;
};

template <class F>
class LieEngine {
public:
	/* Coordinates of a homogeneous quotient element in the modbas
	 * basis of its degree. */
	struct Element {
		int degree = 0;
		UVec<F> coords;
		bool is_zero() const { return coords.empty(); }
	};

	explicit LieEngine(LiePresentation pres, LieEngineOptions opt = {})
	    : pres_(std::move(pres)), opt_(opt), algebra_(make_algebra(pres_, opt_))
	{
	}

	const LiePresentation& presentation() const { return pres_; }
	int ngens() const { return (int)pres_.generators.size(); }

	void ensure_degree(int d)
	{
		if (d > opt_.degree_cap)
			throw std::runtime_error("lie degree cap exceeded (cap " +
			                         std::to_string(opt_.degree_cap) + ")");
		while ((int)built_ < d) build_next();
	}

	int dim(int d)
	{
		ensure_degree(d);
		return (int)deg_[d].basis_vec.size();
	}

	std::vector<int> quotient_dims(int maxdeg)
	{
		std::vector<int> dims;
		for (int d = 1; d <= maxdeg; ++d) dims.push_back(dim(d));
		return dims;
	}

	/* Hilbert-series coefficients of the enveloping algebra. */
	long assoc_dim(int d)
	{
		if (d == 0) return 1;
		if (d > opt_.assoc_degree_cap)
			throw std::runtime_error("assoc degree cap exceeded");
		return algebra_.normal_count(d);
	}
	std::vector<long> assoc_quotient_dims(int maxdeg)
	{
		std::vector<long> dims;
		for (int d = 1; d <= maxdeg; ++d) dims.push_back(assoc_dim(d));
		return dims;
	}

	std::string def(int d, int i)
	{
		ensure_degree(d);
		return def_string(d, i);
	}

	/* Coordinates of an expression in the modbas basis. */
	Element fed(const LieExprPtr& e)
	{
		int d = e->degree();
		ensure_degree(d);
		UVec<F> u = to_uvec(e);
		return Element{d, express(d, u)};
	}

	Element element_of_basis(int d, int i)
	{
		ensure_degree(d);
		return Element{d, {{(uint32_t)i, F(1)}}};
	}

	Element scale_add(const Element& a, const Element& b, const F& cb)
	{
		if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
		DenseAcc<F> acc;
		acc.reset(deg_[a.degree].basis_vec.size());
		acc.add_vec(a.coords, F(1));
		acc.add_vec(b.coords, cb);
		return Element{a.degree, acc.take_sorted()};
	}

	/* [a, b] in the quotient. */
	Element bracket(const Element& a, const Element& b)
	{
		int d = a.degree + b.degree;
		ensure_degree(d);
		UVec<F> ua = uvec_of(a), ub = uvec_of(b);
		UVec<F> w = algebra_.bracket(ua, a.degree, ub, b.degree);
		return Element{d, express(d, w)};
	}

	/* Component at degree n of the ideal generated by gens. */
	std::vector<Element> ideal_component(int n, const std::vector<Element>& gens)
	{
		ensure_degree(n);
		std::map<int, std::vector<UVec<F>>> span; // degree -> coord echelon rows
		int dmin = n + 1;
		for (const Element& g : gens)
			if (!g.is_zero()) dmin = std::min(dmin, g.degree);
		for (int t = dmin; t <= n; ++t) {
			std::vector<UVec<F>>& rows = span[t];
			auto add = [&](UVec<F> v) { echelon_insert(rows, std::move(v)); };
			for (const Element& g : gens)
				if (!g.is_zero() && g.degree == t) add(g.coords);
			if (span.count(t - 1))
				for (const UVec<F>& r : span[t - 1])
					for (int x = 0; x < ngens(); ++x) add(apply_gen(x, t - 1, r));
		}
		std::vector<Element> out;
		for (auto& r : span[n]) out.push_back(Element{n, r});
		return out;
	}

	int ideal_dim(int n, const std::vector<Element>& gens)
	{
		return (int)ideal_component(n, gens).size();
	}

	/* Basis of { x in eta_s : [x, a] = 0 for all a in A }. */
	std::vector<Element> ann(const std::vector<Element>& a, int t, int s)
	{
		for (const Element& e : a)
			if (e.degree != t) throw std::invalid_argument("ann: element of wrong degree");
		ensure_degree(s + t);
		int ds = dim(s), dst = dim(s + t);
		size_t w = a.size() * (size_t)dst;
		std::vector<std::vector<F>> rows(ds, std::vector<F>(w, F(0)));
		for (int i = 0; i < ds; ++i) {
			Element xi = element_of_basis(s, i);
			for (size_t k = 0; k < a.size(); ++k) {
				Element br = bracket(xi, a[k]);
				for (auto& [j, c] : br.coords) rows[i][k * dst + j] = c;
			}
		}
		auto null_basis = dense_nullspace(rows, (int)w);
		std::vector<Element> out;
		for (auto& v : null_basis) {
			UVec<F> coords;
			for (int i = 0; i < ds; ++i)
				if (!field_traits<F>::is_zero(v[i])) coords.push_back({(uint32_t)i, v[i]});
			out.push_back(Element{s, coords});
		}
		return out;
	}

	/* Components per degree of the subalgebra generated by gens
	 * (closure of the given elements under bracket). */
	std::map<int, std::vector<Element>> suba_components(const std::vector<Element>& gens,
	                                                    int maxdeg)
	{
		ensure_degree(maxdeg);
		std::map<int, std::vector<UVec<F>>> span;
		for (const Element& g : gens) {
			if (g.is_zero()) continue;
			if (g.degree > maxdeg) continue;
			echelon_insert(span[g.degree], g.coords);
		}
		for (int t = 2; t <= maxdeg; ++t) {
			for (int a = 1; a + a <= t; ++a) {
				int b = t - a;
				if (!span.count(a) || !span.count(b)) continue;
				std::vector<UVec<F>> ra = span[a], rb = span[b];
				for (size_t i = 0; i < ra.size(); ++i) {
					size_t j0 = (a == b) ? i : 0;
					for (size_t j = j0; j < rb.size(); ++j) {
						Element br = bracket(Element{a, ra[i]}, Element{b, rb[j]});
						if (!br.is_zero())
							echelon_insert(span[t], std::move(br.coords));
					}
				}
			}
		}
		std::map<int, std::vector<Element>> out;
		for (auto& [t, rows] : span)
			for (auto& r : rows) out[t].push_back(Element{t, r});
		return out;
	}

	std::vector<Element> suba_component(const std::vector<Element>& gens, int deg)
	{
		auto comps = suba_components(gens, deg);
		return comps.count(deg) ? comps[deg] : std::vector<Element>{};
	}

	std::vector<int> suba_dims(const std::vector<Element>& gens, int maxdeg)
	{
		auto comps = suba_components(gens, maxdeg);
		std::vector<int> dims(maxdeg + 1, 0);
		for (auto& [t, rows] : comps) dims[t] = (int)rows.size();
		return dims;
	}

	/* True iff v lies in the span of the given elements (same degree). */
	bool in_span(const std::vector<Element>& basis, const Element& v)
	{
		std::vector<UVec<F>> rows;
		for (const Element& b : basis)
			if (!b.is_zero()) echelon_insert(rows, b.coords);
		UVec<F> r = v.coords;
		echelon_reduce(rows, r);
		return r.empty();
	}

	bool same_span(const std::vector<Element>& a, const std::vector<Element>& b)
	{
		std::vector<UVec<F>> ra, rb;
		for (auto& e : a)
			if (!e.is_zero()) echelon_insert(ra, e.coords);
		for (auto& e : b)
			if (!e.is_zero()) echelon_insert(rb, e.coords);
		if (ra.size() != rb.size()) return false;
		for (auto& e : b) {
			UVec<F> r = e.coords;
			echelon_reduce(ra, r);
			if (!r.empty()) return false;
		}
		return true;
	}

	/* U_d coordinates of a quotient element. */
	UVec<F> uvec_of(const Element& e)
	{
		DenseAcc<F> acc;
		acc.reset(algebra_.normal_count(e.degree));
		for (auto& [i, c] : e.coords) acc.add_vec(deg_[e.degree].basis_vec[i], c);
		return acc.take_sorted();
	}

	WordAlgebra<F>& algebra() { return algebra_; }

private:
	struct DegreeInfo {
		std::vector<UVec<F>> basis_vec;             // modbas images in U_d
		std::vector<std::pair<int, int>> basis_def; // (generator, previous index)
		// echelon of basis_vec with coordinate tracking
		std::vector<UVec<F>> ech_vec;
		std::vector<UVec<F>> ech_coords;
		// action of generator x on previous basis: coords at this degree
		std::vector<std::vector<UVec<F>>> act; // act[x][j]
	};

	static WordAlgebra<F> make_algebra(const LiePresentation& pres, const LieEngineOptions& opt)
	{
		std::vector<std::pair<int, std::vector<std::pair<Word, F>>>> rels;
		for (auto& r : pres.relations) {
			auto words = expand_to_words(r, (int)pres.generators.size());
			std::vector<std::pair<Word, F>> wv;
			for (auto& [w, c] : words) wv.push_back({w, from_rat<F>(c)});
			if (!wv.empty()) rels.push_back({r->degree(), std::move(wv)});
		}
		WordAlgebraOptions wopt;
		wopt.degree_cap = std::max(opt.degree_cap + 1, opt.assoc_degree_cap);
		wopt.column_guard = opt.column_guard;
		return WordAlgebra<F>((int)pres.generators.size(), std::move(rels), wopt);
	}

	void build_next()
	{
		int d = built_ + 1;
		algebra_.ensure(d);
		if ((int)deg_.size() <= d) deg_.resize(d + 1);
		DegreeInfo& di = deg_[d];
		if (d == 1) {
			for (int x = 0; x < ngens(); ++x) {
				di.basis_vec.push_back({{(uint32_t)x, F(1)}});
				di.basis_def.push_back({x, -1});
				insert_basis_row(di, di.basis_vec.back(), (int)di.basis_vec.size() - 1);
			}
			built_ = 1;
			return;
		}
		DegreeInfo& prev = deg_[d - 1];
		di.act.assign(ngens(), std::vector<UVec<F>>(prev.basis_vec.size()));
		// candidates in (generator asc) x (previous basis asc) order
		for (int x = 0; x < ngens(); ++x) {
			for (size_t j = 0; j < prev.basis_vec.size(); ++j) {
				const UVec<F>& v = prev.basis_vec[j];
				UVec<F> gv = algebra_.lambda((uint32_t)x, v, d - 1);
				UVec<F> vg = algebra_.right_mul(v, d - 1, (uint32_t)x);
				// [x, v] = xv - (-1)^{d-1} vx
				DenseAcc<F> acc;
				acc.reset(algebra_.normal_count(d));
				acc.add_vec(gv, F(1));
				acc.add_vec(vg, F((d - 1) % 2 ? 1 : -1));
				UVec<F> cand = acc.take_sorted();
				di.act[x][j] = insert_candidate(di, std::move(cand), x, (int)j);
			}
		}
		built_ = d;
	}

	/* Reduce cand against the tracked echelon; absorb as a new basis
	 * element if independent. Returns its modbas coordinates. */
	UVec<F> insert_candidate(DegreeInfo& di, UVec<F> cand, int gen, int prev_idx)
	{
		UVec<F> r = cand;
		UVec<F> comb; // coords with r = cand - sum(comb * basis)
		reduce_tracked(di, r, comb);
		if (r.empty()) return comb;
		int k = (int)di.basis_vec.size();
		di.basis_vec.push_back(std::move(cand));
		di.basis_def.push_back({gen, prev_idx});
		// echelon row: r = basis_k - comb
		UVec<F> coords;
		coords.push_back({(uint32_t)k, F(1)});
		for (auto& [i, c] : comb) coords.push_back({i, -c});
		std::sort(coords.begin(), coords.end(),
		          [](auto& a, auto& b) { return a.first < b.first; });
		add_ech_row(di, std::move(r), std::move(coords));
		return {{(uint32_t)k, F(1)}};
	}

	void insert_basis_row(DegreeInfo& di, const UVec<F>& vec, int idx)
	{
		add_ech_row(di, vec, {{(uint32_t)idx, F(1)}});
	}

	void add_ech_row(DegreeInfo& di, UVec<F> vec, UVec<F> coords)
	{
		F lead = vec.front().second;
		if (!(lead == F(1))) {
			for (auto& [i, c] : vec) c = c / lead;
			for (auto& [i, c] : coords) c = c / lead;
		}
		di.ech_vec.push_back(std::move(vec));
		di.ech_coords.push_back(std::move(coords));
	}

	/* r -= rows matching r's leading index; comb accumulates the basis
	 * combination subtracted. */
	void reduce_tracked(DegreeInfo& di, UVec<F>& r, UVec<F>& comb)
	{
		DenseAcc<F> cacc;
		cacc.reset(di.basis_vec.size() + 1);
		bool changed = true;
		while (changed && !r.empty()) {
			changed = false;
			for (size_t k = 0; k < di.ech_vec.size(); ++k) {
				if (r.empty()) break;
				if (di.ech_vec[k].front().first != r.front().first) continue;
				F f = r.front().second; // pivots normalized to 1
				r = axpy(r, di.ech_vec[k], -f);
				cacc.add_vec(di.ech_coords[k], f);
				changed = true;
			}
		}
		comb = cacc.take_sorted();
	}

	static UVec<F> axpy(const UVec<F>& a, const UVec<F>& b, const F& c)
	{
		UVec<F> out;
		out.reserve(a.size() + b.size());
		size_t i = 0, j = 0;
		while (i < a.size() || j < b.size()) {
			if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
				out.push_back(a[i++]);
			} else if (i == a.size() || b[j].first < a[i].first) {
				out.push_back({b[j].first, c * b[j].second});
				++j;
			} else {
				F x = a[i].second + c * b[j].second;
				if (!field_traits<F>::is_zero(x)) out.push_back({a[i].first, x});
				++i;
				++j;
			}
		}
		return out;
	}

	/* Express a U_d vector in modbas coordinates; throws if it is not
	 * in the span (cannot happen for genuine quotient elements). */
	UVec<F> express(int d, UVec<F> u)
	{
		DegreeInfo& di = deg_[d];
		UVec<F> comb;
		reduce_tracked(di, u, comb);
		if (!u.empty())
			throw std::runtime_error("element not in the Lie quotient component");
		return comb;
	}

	UVec<F> to_uvec(const LieExprPtr& e)
	{
		auto words = expand_to_words(e, ngens());
		std::vector<std::pair<Word, F>> wv;
		for (auto& [w, c] : words) wv.push_back({w, from_rat<F>(c)});
		return algebra_.reduce_wordvec(wv, e->degree());
	}

	/* Action of generator x on a coords vector at degree t. */
	UVec<F> apply_gen(int x, int t, const UVec<F>& coords)
	{
		DenseAcc<F> acc;
		acc.reset(deg_[t + 1].basis_vec.size());
		for (auto& [j, c] : coords) acc.add_vec(deg_[t + 1].act[x][j], c);
		return acc.take_sorted();
	}

	static void echelon_reduce(const std::vector<UVec<F>>& rows, UVec<F>& r)
	{
		bool changed = true;
		while (changed && !r.empty()) {
			changed = false;
			for (const UVec<F>& row : rows) {
				if (r.empty()) break;
				if (row.front().first != r.front().first) continue;
				r = axpy(r, row, -(r.front().second / row.front().second));
				changed = true;
			}
		}
	}

	static void echelon_insert(std::vector<UVec<F>>& rows, UVec<F> v)
	{
		echelon_reduce(rows, v);
		if (v.empty()) return;
		rows.push_back(std::move(v));
		std::sort(rows.begin(), rows.end(),
		          [](const UVec<F>& a, const UVec<F>& b) {
			          return a.front().first < b.front().first;
		          });
	}

	/* Left kernel of m (combinations of the rows mapping to zero). */
	std::vector<std::vector<F>> dense_nullspace(const std::vector<std::vector<F>>& m, int w)
	{
		int nr = (int)m.size();
		std::vector<std::vector<F>> t(w, std::vector<F>(nr, F(0)));
		for (int i = 0; i < nr; ++i)
			for (int c = 0; c < w; ++c) t[c][i] = m[i][c];
		return kernel_of_columns(std::move(t), nr);
	}

	/* Kernel of the linear map F^n -> F^rows given column-wise:
	 * a has `rows` rows of length n. */
	std::vector<std::vector<F>> kernel_of_columns(std::vector<std::vector<F>> a, int n)
	{
		int nr = (int)a.size();
		std::vector<int> pivot_of_col(n, -1);
		int row = 0;
		for (int col = 0; col < n && row < nr; ++col) {
			int sel = -1;
			for (int r = row; r < nr; ++r)
				if (!field_traits<F>::is_zero(a[r][col])) {
					sel = r;
					break;
				}
			if (sel < 0) continue;
			std::swap(a[row], a[sel]);
			F inv = F(1) / a[row][col];
			for (int c = col; c < n; ++c) a[row][c] *= inv;
			for (int r = 0; r < nr; ++r) {
				if (r == row || field_traits<F>::is_zero(a[r][col])) continue;
				F f = a[r][col];
				for (int c = col; c < n; ++c) a[r][c] -= f * a[row][c];
			}
			pivot_of_col[col] = row;
			++row;
		}
		std::vector<std::vector<F>> basis;
		for (int fc = 0; fc < n; ++fc) {
			if (pivot_of_col[fc] >= 0) continue;
			std::vector<F> v(n, F(0));
			v[fc] = F(1);
			for (int col = 0; col < n; ++col) {
				int pr = pivot_of_col[col];
				if (pr >= 0) v[col] = -a[pr][fc];
			}
			basis.push_back(std::move(v));
		}
		return basis;
	}

	std::string def_string(int d, int i) const
	{
		if (d == 1) return pres_.generators[i];
		auto [g, j] = deg_[d].basis_def[i];
		return "lie[" + pres_.generators[g] + ", " + def_string(d - 1, j) + "]";
	}

	LiePresentation pres_;
	LieEngineOptions opt_;
	WordAlgebra<F> algebra_;
	std::vector<DegreeInfo> deg_;
	int built_ = 0;
};

} // namespace gorlab
