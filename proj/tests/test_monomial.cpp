#include <catch2/catch_amalgamated.hpp>

#include <gorlab/lie/engine.hpp>
#include <gorlab/monomial.hpp>

using namespace gorlab;

TEST_CASE("the three-letter monomial algebra")
{
	MonomialAlgebraSpec spec({'C', 'D', 'G'}, {"CC", "CDG"});
	auto res = monomial_hilbert_series(spec, 20);
	UniSeries want = RationalFn({Int(1)}, {Int(1), Int(-3), Int(1)}).expand(20);
	CHECK(res.series == want);
	CHECK(res.series[1] == 3);
	CHECK(res.series[2] == 8);
	CHECK(res.series[3] == 21);
	CHECK(res.series[4] == 55);
	// the reduced transfer-matrix form
	CHECK(res.rational.num == std::vector<Int>{Int(1)});
	CHECK(res.rational.den == std::vector<Int>{Int(1), Int(-3), Int(1)});
}

TEST_CASE("free algebra and a single-letter alphabet")
{
	MonomialAlgebraSpec free3({'a', 'b', 'c'}, {});
	auto res = monomial_hilbert_series(free3, 10);
	for (int n = 0; n <= 10; ++n) {
		Int want(1);
		for (int k = 0; k < n; ++k) want *= 3;
		CHECK(res.series[n] == Rat(want));
	}
	CHECK(res.rational.den == std::vector<Int>{Int(1), Int(-3)});

	MonomialAlgebraSpec aa({'a'}, {"aa"});
	auto r2 = monomial_hilbert_series(aa, 8);
	CHECK(r2.series[0] == 1);
	CHECK(r2.series[1] == 1);
	for (int n = 2; n <= 8; ++n) CHECK(r2.series[n] == 0);
}

TEST_CASE("input validation")
{
	CHECK_THROWS(MonomialAlgebraSpec({'a'}, {"a"}));          // length < 2
	CHECK_THROWS(MonomialAlgebraSpec({'a'}, {"ab"}));         // unknown letter
	CHECK_THROWS(MonomialAlgebraSpec({'a', 'b'}, {"ab", "aab"})); // not reduced
}

TEST_CASE("automaton counts match brute-force enumeration")
{
	std::vector<MonomialAlgebraSpec> cases = {
	    MonomialAlgebraSpec({'C', 'D', 'G'}, {"CC", "CDG"}),
	    MonomialAlgebraSpec({'a', 'b'}, {"aa", "bb"}),
	    MonomialAlgebraSpec({'a', 'b'}, {"aba"}),
	    MonomialAlgebraSpec({'a', 'b', 'c'}, {"ab", "bc", "ca"}),
	    MonomialAlgebraSpec({'a', 'b'}, {"abab"}),
	};
	for (auto& spec : cases) {
		auto res = monomial_hilbert_series(spec, 10);
		auto brute = count_words_brute(spec, 10);
		for (int n = 0; n <= 10; ++n) CHECK(res.series[n] == Rat(brute[n]));
	}
}

TEST_CASE("rational form expands to the counting series")
{
	std::vector<MonomialAlgebraSpec> cases = {
	    MonomialAlgebraSpec({'C', 'D', 'G'}, {"CC", "CDG"}),
	    MonomialAlgebraSpec({'a', 'b'}, {"aa", "bb"}),
	    MonomialAlgebraSpec({'a', 'b', 'c'}, {"ab", "bc", "ca"}),
	};
	for (auto& spec : cases) {
		auto res = monomial_hilbert_series(spec, 30);
		CHECK(res.rational.expand(30) == res.series);
	}
}

TEST_CASE("the quadratic data quotient computed by the Lie route agrees")
{
	// <C^2, [C,[D',G]]> is a Groebner basis for the monomial data:
	// the associative quotient of the presentation has the same series
	LiePresentation p;
	p.generators = {"c", "d", "g"};
	auto C = LieExpr::gen(0, "c"), D = LieExpr::gen(1, "d"), G = LieExpr::gen(2, "g");
	p.relations = {LieExpr::square(C), LieExpr::bracket(C, LieExpr::bracket(D, G))};
	LieEngineOptions opt;
	opt.degree_cap = 8;
	opt.assoc_degree_cap = 8;
	LieEngine<Rat64> eng(p, opt);
	MonomialAlgebraSpec spec({'C', 'D', 'G'}, {"CC", "CDG"});
	auto res = monomial_hilbert_series(spec, 8);
	for (int d = 1; d <= 8; ++d) CHECK(res.series[d] == Rat(eng.assoc_dim(d)));
}
