#include <catch2/catch_amalgamated.hpp>

#include <gorlab/lie/engine.hpp>
#include <gorlab/lie/free_lie.hpp>
#include <gorlab/lie/lambda_table.hpp>
#include <gorlab/series.hpp>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

using namespace gorlab;

namespace {

LiePresentation eta_presentation()
{
	std::ifstream f(std::string(GORLAB_DATA_DIR) + "/eta.lie");
	REQUIRE(f.good());
	std::stringstream ss;
	ss << f.rdbuf();
	return parse_lie_presentation(ss.str());
}

std::map<Word, Rat> to_map(const std::vector<std::pair<Word, Rat>>& v)
{
	std::map<Word, Rat> m;
	for (auto& [w, c] : v) m[w] = c;
	return m;
}

/* Encodes a letter string as a word code (base ngens), mapping letters
 * through the generator list order starting at 'B'. */
Word code_of(const std::string& s, int ngens)
{
	Word w = 0;
	for (char c : s) w = w * ngens + (Word)(c - 'B');
	return w;
}

/* Slow ideal closure in the flat word space: I_d = R_d + sum over all
 * splits [L_j, I_{d-j}]; the engine uses only j = 1. */
std::vector<int> oracle_quotient_dims(const LiePresentation& pres, int maxdeg)
{
	int n = (int)pres.generators.size();
	std::map<int, std::vector<std::vector<std::pair<Word, Rat>>>> rels_by_deg;
	for (auto& r : pres.relations) rels_by_deg[r->degree()].push_back(expand_to_words(r, n));

	std::vector<std::vector<WordVec>> lie_basis(maxdeg + 1);
	for (int d = 1; d <= maxdeg; ++d) lie_basis[d] = free_lie_component(n, d);

	std::vector<std::vector<WordVec>> ideal_basis(maxdeg + 1);
	std::vector<int> dims;
	for (int d = 1; d <= maxdeg; ++d) {
		WordEchelon ech;
		std::vector<WordVec> rows;
		auto add = [&](WordVec v) {
			if (ech.insert(v)) rows.push_back(v);
		};
		if (rels_by_deg.count(d))
			for (auto& rv : rels_by_deg[d]) {
				WordVec v(rv.begin(), rv.end());
				std::sort(v.begin(), v.end());
				add(v);
			}
		for (int j = 1; j < d; ++j)
			for (const WordVec& x : lie_basis[j])
				for (const WordVec& y : ideal_basis[d - j])
					add(wordvec_bracket(x, j, y, d - j, n));
		ideal_basis[d] = rows;
		dims.push_back((int)lie_basis[d].size() - (int)rows.size());
	}
	return dims;
}

} // namespace

TEST_CASE("expression parser")
{
	auto pres = eta_presentation();
	CHECK(pres.generators == std::vector<std::string>{"b", "c", "d", "e", "f", "g"});
	REQUIRE(pres.relations.size() == 10);
	CHECK(pres.relations[0]->str() == "lie[b, c]");
	CHECK(pres.relations[1]->str() == "sq[c]+lie[b, d]");

	auto e = parse_lie_expr("lie[e, lie[b, b]]", pres);
	CHECK(e->degree() == 3);
	CHECK(e->str() == "lie[e, lie[b, b]]");

	CHECK_THROWS_AS(parse_lie_expr("lie[b,c]+d", pres), std::invalid_argument);
	CHECK_THROWS_AS(parse_lie_expr("lie[b,", pres), LieParseError);
	CHECK_THROWS_AS(parse_lie_expr("lie[b,z]", pres), LieParseError);
	CHECK_THROWS(parse_lie_presentation("generators={a}\ngensigns={0}\nrelations={}"));
}

TEST_CASE("expansion to words follows the super sign rule")
{
	LiePresentation p;
	p.generators = {"B", "C"};
	auto B = LieExpr::gen(0, "B"), C = LieExpr::gen(1, "C");

	auto bc = to_map(expand_to_words(LieExpr::bracket(B, C), 2));
	CHECK(bc == to_map({{code_of("BC", 2), Rat(1)}, {code_of("CB", 2), Rat(1)}}));

	auto cc = to_map(expand_to_words(LieExpr::square(C), 2));
	CHECK(cc == to_map({{code_of("CC", 2), Rat(1)}}));

	auto bbc = to_map(expand_to_words(LieExpr::bracket(B, LieExpr::bracket(B, C)), 2));
	CHECK(bbc == to_map({{code_of("BBC", 2), Rat(1)}, {code_of("CBB", 2), Rat(-1)}}));
}

TEST_CASE("antisymmetry of the expansion on random expressions")
{
	std::mt19937 rng(42);
	LiePresentation p;
	p.generators = {"a", "b", "c"};
	std::vector<LieExprPtr> gens = {LieExpr::gen(0, "a"), LieExpr::gen(1, "b"),
	                                LieExpr::gen(2, "c")};
	auto random_expr = [&](auto&& self, int depth) -> LieExprPtr {
		if (depth == 0 || rng() % 3 == 0) return gens[rng() % 3];
		if (rng() % 4 == 0) return LieExpr::square(self(self, 0));
		return LieExpr::bracket(self(self, depth - 1), self(self, depth - 1));
	};
	for (int trial = 0; trial < 50; ++trial) {
		auto x = random_expr(random_expr, 2);
		auto y = random_expr(random_expr, 2);
		auto xy = expand_to_words(LieExpr::bracket(x, y), 3);
		auto yx = expand_to_words(LieExpr::bracket(y, x), 3);
		// [x,y] + (-1)^{|x||y|} [y,x] = 0
		Rat sign((x->degree() % 2) && (y->degree() % 2) ? -1 : 1);
		std::map<Word, Rat> acc = to_map(xy);
		for (auto& [w, c] : yx) acc[w] += sign * c;
		for (auto& [w, c] : acc) CHECK(c == 0);
	}
}

TEST_CASE("free Lie superalgebra components")
{
	CHECK(free_lie_dims(1, 4) == std::vector<int>{1, 1, 0, 0});
	CHECK(free_lie_dims(2, 5) == std::vector<int>{2, 3, 2, 3, 6});
	CHECK(free_lie_component(6, 2).size() == 21);

	// PBW consistency: the free dims invert the free-algebra series
	auto dims2 = pbw_invert(RationalFn({Int(1)}, {Int(1), Int(-2)}).expand(7), 7);
	auto free2 = free_lie_dims(2, 7);
	for (int d = 0; d < 7; ++d) CHECK(dims2[d] == free2[d]);
}

TEST_CASE("engine matches the free case")
{
	LiePresentation p;
	p.generators = {"a", "b"};
	LieEngineOptions opt;
	opt.degree_cap = 6;
	opt.assoc_degree_cap = 6;
	LieEngine<Rat> eng(p, opt);
	CHECK(eng.quotient_dims(6) == std::vector<int>{2, 3, 2, 3, 6, 11});
	for (int d = 1; d <= 6; ++d) CHECK(eng.assoc_dim(d) == (1L << d));

	LiePresentation p6 = eta_presentation();
	p6.relations.clear();
	LieEngineOptions opt6;
	opt6.degree_cap = 2;
	opt6.assoc_degree_cap = 3;
	LieEngine<Rat> eng6(p6, opt6);
	CHECK(eng6.quotient_dims(2) == std::vector<int>{6, 21});
	CHECK(eng6.assoc_quotient_dims(3) == std::vector<long>{6, 36, 216});
}

TEST_CASE("abelian quotient and the exterior envelope")
{
	LiePresentation p = eta_presentation();
	p.relations.clear();
	// kill every degree-2 component: all brackets and squares
	for (int i = 0; i < 6; ++i) {
		p.relations.push_back(LieExpr::square(LieExpr::gen(i, p.generators[i])));
		for (int j = i + 1; j < 6; ++j)
			p.relations.push_back(LieExpr::bracket(LieExpr::gen(i, p.generators[i]),
			                                       LieExpr::gen(j, p.generators[j])));
	}
	REQUIRE(p.relations.size() == 21);
	LieEngineOptions opt;
	opt.degree_cap = 4;
	opt.assoc_degree_cap = 6;
	LieEngine<Rat64> eng(p, opt);
	CHECK(eng.quotient_dims(3) == std::vector<int>{6, 0, 0});
	// U is the exterior algebra on six odd generators
	for (int d = 1; d <= 6; ++d) {
		long binom = 1;
		for (int k = 1; k <= d; ++k) binom = binom * (7 - k) / k;
		CHECK(eng.assoc_dim(d) == binom);
	}
}

TEST_CASE("eta dimensions at desk degrees")
{
	LieEngineOptions opt;
	opt.degree_cap = 5;
	opt.assoc_degree_cap = 5;
	LieEngine<Rat64> eng(eta_presentation(), opt);
	CHECK(eng.quotient_dims(5) == std::vector<int>{6, 11, 11, 18, 38});
	CHECK(eng.assoc_quotient_dims(5) == std::vector<long>{6, 26, 97, 330, 1054});
}

TEST_CASE("engine agrees with the flat word-space oracle")
{
	auto pres = eta_presentation();
	LieEngineOptions opt;
	opt.degree_cap = 5;
	opt.assoc_degree_cap = 5;
	LieEngine<Rat> eng(pres, opt);
	CHECK(oracle_quotient_dims(pres, 5) == eng.quotient_dims(5));

	// with the two cubic relations added (the radical-free quotient)
	LiePresentation pbar = pres;
	pbar.relations.push_back(parse_lie_expr("lie[e,lie[b,b]]", pres));
	pbar.relations.push_back(parse_lie_expr("lie[f,lie[f,d]]", pres));
	LieEngine<Rat> engbar(pbar, opt);
	CHECK(oracle_quotient_dims(pbar, 5) == engbar.quotient_dims(5));
	CHECK(engbar.quotient_dims(5) == std::vector<int>{6, 11, 9, 16, 36});
}

TEST_CASE("prime-field dimensions agree with the exact route")
{
	auto pres = eta_presentation();
	LieEngineOptions opt;
	opt.degree_cap = 5;
	opt.assoc_degree_cap = 5;
	LieEngine<Rat64> exact(pres, opt);
	LieEngine<Fp> modp(pres, opt);
	CHECK(exact.quotient_dims(5) == modp.quotient_dims(5));
	CHECK(exact.assoc_quotient_dims(5) == modp.assoc_quotient_dims(5));
}

TEST_CASE("labeled basis, def and fed")
{
	LieEngineOptions opt;
	opt.degree_cap = 4;
	opt.assoc_degree_cap = 4;
	LieEngine<Rat> eng(eta_presentation(), opt);
	REQUIRE(eng.dim(2) == 11);
	for (int d = 2; d <= 3; ++d)
		for (int i = 0; i < eng.dim(d); ++i) {
			auto e = parse_lie_expr(eng.def(d, i), eng.presentation());
			auto coords = eng.fed(e);
			REQUIRE(coords.coords.size() == 1);
			CHECK(coords.coords[0].first == (uint32_t)i);
			CHECK(coords.coords[0].second == Rat(1));
		}
	// the published defining expressions are nonzero classes
	CHECK_FALSE(eng.fed(parse_lie_expr("lie[e,lie[b,b]]", eng.presentation())).is_zero());
	CHECK_FALSE(eng.fed(parse_lie_expr("lie[f,lie[f,d]]", eng.presentation())).is_zero());
	// relations are zero classes
	CHECK(eng.fed(parse_lie_expr("lie[b,c]", eng.presentation())).is_zero());
	CHECK(eng.fed(parse_lie_expr("sq[c]+lie[b,d]", eng.presentation())).is_zero());
}

TEST_CASE("bracket of an element with itself doubles the square")
{
	LieEngineOptions opt;
	opt.degree_cap = 3;
	opt.assoc_degree_cap = 3;
	LieEngine<Rat> eng(eta_presentation(), opt);
	auto b = eng.fed(parse_lie_expr("b", eng.presentation()));
	auto bb = eng.bracket(b, b);
	auto sq = eng.fed(parse_lie_expr("sq[b]", eng.presentation()));
	REQUIRE(bb.coords.size() == sq.coords.size());
	for (size_t k = 0; k < bb.coords.size(); ++k) {
		CHECK(bb.coords[k].first == sq.coords[k].first);
		CHECK(bb.coords[k].second == 2 * sq.coords[k].second);
	}
}

TEST_CASE("ideal components")
{
	LieEngineOptions opt;
	opt.degree_cap = 5;
	opt.assoc_degree_cap = 5;
	LieEngine<Rat> eng(eta_presentation(), opt);
	auto ebb = eng.fed(parse_lie_expr("lie[e,lie[b,b]]", eng.presentation()));
	auto ffd = eng.fed(parse_lie_expr("lie[f,lie[f,d]]", eng.presentation()));
	CHECK(eng.ideal_dim(3, {ebb, ffd}) == 2);
	CHECK(eng.ideal_dim(4, {ebb, ffd}) == 2);
	CHECK(eng.ideal_dim(5, {ebb, ffd}) == 2);
	CHECK(eng.ideal_dim(5, {}) == 0);
	// an ideal component below the generator degrees is zero
	CHECK(eng.ideal_dim(2, {ebb}) == 0);
}

TEST_CASE("annihilator in the free superalgebra")
{
	LiePresentation p;
	p.generators = {"a", "b"};
	LieEngineOptions opt;
	opt.degree_cap = 3;
	opt.assoc_degree_cap = 3;
	LieEngine<Rat> eng(p, opt);
	auto b = eng.fed(parse_lie_expr("b", p));
	// nothing in degree 1 multiplies b to zero: [a,b] and [b,b] are
	// both nonzero in the free algebra
	CHECK(eng.ann({b}, 1, 1).empty());
	// everything annihilates the empty list
	CHECK(eng.ann({}, 1, 1).size() == 2);
}

TEST_CASE("subalgebras")
{
	LieEngineOptions opt;
	opt.degree_cap = 5;
	opt.assoc_degree_cap = 5;
	LieEngine<Rat> eng(eta_presentation(), opt);
	auto el = [&](const char* s) { return eng.fed(parse_lie_expr(s, eng.presentation())); };
	// all generators generate the whole quotient
	auto full = eng.suba_dims({el("b"), el("c"), el("d"), el("e"), el("f"), el("g")}, 5);
	CHECK(std::vector<int>(full.begin() + 1, full.end()) == eng.quotient_dims(5));
	// a single odd generator: the square survives, degree 3 dies
	auto single = eng.suba_dims({el("b")}, 4);
	CHECK(std::vector<int>(single.begin() + 1, single.end()) ==
	      std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("degree caps abort cleanly")
{
	LieEngineOptions opt;
	opt.degree_cap = 3;
	opt.assoc_degree_cap = 3;
	LieEngine<Rat> eng(eta_presentation(), opt);
	CHECK_THROWS(eng.dim(4));
	CHECK_THROWS(eng.assoc_dim(4));

	// the column guard stops runaway free-algebra growth
	LiePresentation pf = eta_presentation();
	pf.relations.clear();
	LieEngineOptions small;
	small.degree_cap = 6;
	small.assoc_degree_cap = 6;
	small.column_guard = 1000;
	LieEngine<Rat> engf(pf, small);
	CHECK_THROWS(engf.assoc_dim(6));
}

TEST_CASE("basis defs are deterministic")
{
	LieEngineOptions opt;
	opt.degree_cap = 2;
	opt.assoc_degree_cap = 2;
	LieEngine<Rat> eng(eta_presentation(), opt);
	// candidates scan (generator asc) x (previous basis asc); the first
	// surviving degree-2 candidate is [b, b]
	CHECK(eng.def(2, 0) == "lie[b, b]");
	CHECK(eng.def(1, 0) == "b");
	LieEngine<Rat> again(eta_presentation(), opt);
	for (int i = 0; i < eng.dim(2); ++i) CHECK(eng.def(2, i) == again.def(2, i));
}

TEST_CASE("lambda table values and conditions")
{
	LambdaTable tab(20);
	CHECK(tab(1, 1) == 2);
	CHECK(tab(2, 1) == 1);
	CHECK(tab(1, 2) == -1);
	CHECK(tab(1, 3) == 1);
	CHECK(tab(3, 1) == 1);
	CHECK(tab(2, 2) == 0);
	CHECK(tab.check_conditions());
	// the three conditions, asserted directly for every pair
	for (int m = 1; m < 20; ++m)
		for (int n = 1; m + n <= 20; ++n) {
			if (m % 2 == 0 && n % 2 == 0) CHECK(tab(m, n) == 0);
			Rat rhs = ((m * n) % 2 == 1) ? tab(n, m) : -tab(n, m);
			CHECK(tab(m, n) == rhs);
			if (m + n + 1 <= 20) {
				Rat rec = tab(m, n) +
				          ((m % 2 == 0) ? -tab(m, n + 1) : tab(m, n + 1));
				CHECK(tab(m + 1, n) == rec);
			}
		}
	CHECK_THROWS(LambdaTable(1));
	CHECK_THROWS(tab(0, 1));
}

TEST_CASE("pbw crosscheck at desk degrees")
{
	LieEngineOptions opt;
	opt.degree_cap = 5;
	opt.assoc_degree_cap = 5;
	LieEngine<Rat64> eng(eta_presentation(), opt);
	auto lie_dims = eng.quotient_dims(5);
	std::vector<long> ld(lie_dims.begin(), lie_dims.end());
	UniSeries p = pbw_product(ld, 5);
	for (int d = 1; d <= 5; ++d) CHECK(p[d] == eng.assoc_dim(d));
}
