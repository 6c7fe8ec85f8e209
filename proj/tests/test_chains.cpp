#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chains.hpp"

#include <random>

using namespace torelli;

namespace {
ChainNotation straight(std::vector<int> idx) {
    ChainNotation n;
    n.indices = std::move(idx);
    return n;
}
ChainNotation beta(std::vector<int> idx) {
    ChainNotation n;
    n.beta = true;
    n.indices = std::move(idx);
    return n;
}
}  // namespace

TEST_CASE("notation parsing and formatting") {
    CHECK(parse_chain("1346") == straight({1, 3, 4, 6}));
    CHECK(parse_chain("1,3,4,6") == straight({1, 3, 4, 6}));
    CHECK(parse_chain("b567") == beta({5, 6, 7}));
    CHECK(parse_chain("beta,5,6,7") == beta({5, 6, 7}));
    CHECK(parse_chain("b,5,6,12") == beta({5, 6, 12}));
    CHECK(format_chain(straight({1, 3, 4, 6})) == "1346");
    CHECK(format_chain(beta({5, 6, 12})) == "b,5,6,12");
    CHECK_THROWS_AS(parse_chain("4321"), input_error);
    CHECK_THROWS_AS(parse_chain("11"), input_error);
    CHECK_THROWS_AS(parse_chain(""), input_error);
    CHECK_THROWS_AS(parse_chain("1x3"), input_error);
}

TEST_CASE("subchain expansion") {
    SurfaceModel m = build_surface(3, 2);
    auto c = [&](int j) { return m.curve("c" + std::to_string(j)); };

    ChainMapValue v = expand_subchain(parse_chain("1346"), m);
    REQUIRE(v.curves.size() == 3);
    CHECK(v.curves[0] == vec_add(c(1), c(2)));
    CHECK(v.curves[1] == c(3));
    CHECK(v.curves[2] == vec_add(c(4), c(5)));
    CHECK(v.genus == 1);
    CHECK(v.boundary_class == vec_add(v.curves[0], v.curves[2]));

    ChainMapValue single = expand_subchain(parse_chain("12"), m);
    REQUIRE(single.curves.size() == 1);
    CHECK(single.curves[0] == c(1));
    CHECK(single.genus == 0);

    // full odd chain: boundary curves are parallel to the surface boundary
    ChainMapValue full = expand_subchain(straight({1, 2, 3, 4, 5, 6, 7, 8}), m);
    CHECK(full.curves.size() == 7);
    CHECK(full.boundary_class == m.curve("d1"));

    ChainMapValue bc = expand_subchain(parse_chain("b567"), m);
    REQUIRE(bc.curves.size() == 3);
    CHECK(bc.curves[0] == m.curve("beta"));
    CHECK(bc.curves[1] == c(5));
    CHECK(bc.curves[2] == c(6));

    // shifted beta head absorbs c5
    ChainMapValue bs = expand_subchain(beta({6, 7, 8}), m);
    CHECK(bs.curves[0] == vec_add(m.curve("beta"), c(5)));

    CHECK_THROWS_AS(expand_subchain(parse_chain("1"), m), input_error);       // no curves
    CHECK_THROWS_AS(expand_subchain(parse_chain("135"), m), input_error);     // even curve count
    CHECK_THROWS_AS(expand_subchain(straight({1, 99}), m), input_error);      // out of range
    CHECK_THROWS_AS(expand_subchain(beta({4, 6, 7}), m), input_error);        // beta starts at 5
    ChainNotation g1 = straight({6, 7});
    g1.gamma3 = true;
    CHECK(expand_subchain(g1, m).curves.size() == 3);
    CHECK_THROWS_AS(expand_subchain(parse_chain("b567"), build_surface(1, 2)), input_error);
}

TEST_CASE("one-boundary full chain has vanishing boundary class") {
    SurfaceModel m = build_surface(3, 1);
    ChainMapValue full = expand_subchain(straight({1, 2, 3, 4, 5, 6, 7, 8}), m);
    CHECK(vec_is_zero(full.boundary_class));
}

TEST_CASE("chain sums") {
    SurfaceModel m = build_surface(3, 2);
    CHECK(chain_sum(m, m.curve("c1"), m.curve("c2")) == vec_add(m.curve("c1"), m.curve("c2")));
    CHECK(chain_sum(m, m.curve("b"), m.curve("c4")) == m.curve("beta"));
    CHECK_THROWS_AS(chain_sum(m, m.curve("c1"), m.curve("c3")), input_error);

    std::mt19937 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        Vec x(m.rank());
        for (auto& e : x) e = static_cast<long>(rng() % 9) - 4;
        Vec s = chain_sum(m, m.curve("c1"), m.curve("c2"));
        CHECK(pairing(m.form, s, x) ==
              pairing(m.form, m.curve("c1"), x) + pairing(m.form, m.curve("c2"), x));
    }
}

TEST_CASE("boundary class basics") {
    SurfaceModel m = build_surface(3, 2);
    auto c = [&](int j) { return m.curve("c" + std::to_string(j)); };
    CHECK(boundary_class(m, {c(1), c(2), c(3)}) == vec_add(c(1), c(3)));
    CHECK(boundary_class(m, {c(5)}) == c(5));
    CHECK_THROWS_AS(boundary_class(m, {c(1), c(2)}), input_error);
}

TEST_CASE("commutation predicate") {
    ChainNotation n = parse_chain("1346");
    CHECK_FALSE(commutes_with_twist(1, n));  // 1 in, 2 out
    CHECK(commutes_with_twist(3, n));        // 3 and 4 both in
    CHECK(commutes_with_twist(7, n));        // both out
    ChainNotation bn = parse_chain("b567");
    CHECK(commutes_with_twist(1, bn));
    CHECK_FALSE(commutes_with_twist(3, bn));
    CHECK_FALSE(commutes_with_twist(4, bn));
    CHECK(commutes_with_twist(5, bn));  // 5 and 6 both indices
}

TEST_CASE("conjugation rules") {
    SurfaceModel m = build_surface(3, 2);
    ChainNotation n = parse_chain("1356");

    SUBCASE("A1: negative twist bumps the matched index") {
        GroupWord w = conjugate_by_twist(3, -1, n, m);
        REQUIRE(w.size() == 1);
        CHECK(w[0].chain == parse_chain("1456"));
        CHECK(w[0].exponent == 1);
    }
    SUBCASE("A2: positive twist yields the three-token word") {
        GroupWord w = conjugate_by_twist(3, 1, n, m);
        REQUIRE(w.size() == 3);
        CHECK(w[0].chain == n);
        CHECK(w[1].chain == parse_chain("1456"));
        CHECK(w[1].exponent == -1);
        CHECK(w[2].chain == n);
    }
    SUBCASE("B1: positive twist drops the matched index") {
        GroupWord w = conjugate_by_twist(4, 1, n, m);
        REQUIRE(w.size() == 1);
        CHECK(w[0].chain == parse_chain("1346"));
    }
    SUBCASE("B2: negative twist yields the three-token word") {
        GroupWord w = conjugate_by_twist(4, -1, n, m);
        REQUIRE(w.size() == 3);
        CHECK(w[1].chain == parse_chain("1346"));
    }
    SUBCASE("commuting twist returns the chain unchanged") {
        GroupWord w = conjugate_by_twist(8, 1, n, m);
        REQUIRE(w.size() == 1);
        CHECK(w[0].chain == n);
    }
    SUBCASE("beta rules") {
        ChainNotation bn = parse_chain("b567");
        CHECK(conjugate_by_twist(1, 1, bn, m).size() == 1);
        CHECK_THROWS_WITH_AS((void)conjugate_by_twist(3, 1, bn, m),
                             "no rewrite rule for this twist/chain combination", input_error);
        CHECK_THROWS_AS((void)conjugate_by_twist(4, -1, bn, m), input_error);
        GroupWord w = conjugate_by_twist(7, -1, bn, m);  // 7 in, 8 out: A1
        REQUIRE(w.size() == 1);
        CHECK(w[0].chain == parse_chain("b568"));
    }
    CHECK_THROWS_AS((void)conjugate_by_twist(99, 1, n, m), input_error);
    CHECK_THROWS_AS((void)conjugate_by_twist(1, 2, n, m), input_error);
}

TEST_CASE("generator enumeration at genus 3") {
    SurfaceModel m = build_surface(3, 2);
    auto gens = enumerate_generators(m);
    // even-size subsets of {1..8} (127) plus beta chains [b5], [b5ab] (4)
    CHECK(gens.size() == 131);
    std::size_t betas = 0, full = 0, trivial = 0;
    for (const auto& n : gens) {
        if (n.beta) ++betas;
        if (!n.beta && n.indices == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}) ++full;
        if (expand_subchain(n, m).curves.size() == 1) ++trivial;
    }
    CHECK(betas == 4);
    CHECK(full == 1);
    CHECK(trivial == 29);  // 28 one-block straights plus [b5]
    CHECK_THROWS_AS(enumerate_generators(build_surface(2, 2)), input_error);
}

TEST_CASE("relation word shapes") {
    SurfaceModel m = build_surface(3, 2);
    SUBCASE("J1") {
        auto [lhs, rhs] = relation_words("J1", 3, m);
        REQUIRE(lhs.size() == 1);
        CHECK(lhs[0].chain == parse_chain("234567"));
        REQUIRE(rhs.size() == 4);
        CHECK(rhs[0].chain.gamma3);
        CHECK(rhs[1].chain == parse_chain("67"));  // trivial at k = 3
        CHECK(rhs[1].exponent == -1);
        CHECK(rhs[2].chain == parse_chain("4567"));
        CHECK(rhs[3].chain == parse_chain("2345"));
    }
    SUBCASE("J2 carries the b-conjugation") {
        auto [lhs, rhs] = relation_words("J2", 3, m);
        REQUIRE(lhs.size() == 2);
        CHECK(lhs[0].exponent == -1);
        CHECK((lhs[1].conjugators == std::vector<std::pair<std::string, int>>{{"b", 1}}));
        REQUIRE(rhs.size() == 4);
        CHECK(rhs[2].chain.beta);
    }
    SUBCASE("J3 ranges to k = g+1") {
        CHECK_NOTHROW(relation_words("J3", 4, m));
        CHECK_THROWS_AS(relation_words("J3", 5, m), input_error);
        CHECK_THROWS_AS(relation_words("J1", 4, m), input_error);
        CHECK_THROWS_AS(relation_words("J1", 2, m), input_error);
        CHECK_THROWS_AS(relation_words("nope", 3, m), input_error);
    }
    SUBCASE("lantern") {
        auto [lhs, rhs] = relation_words("lantern", 0, m);
        REQUIRE(lhs.size() == 1);
        CHECK(lhs[0].kind == WordToken::Kind::SeparatingTwist);
        REQUIRE(rhs.size() == 3);
        for (const auto& t : rhs) CHECK(t.kind == WordToken::Kind::BoundingPair);
        CHECK_THROWS_AS(relation_words("lantern", 0, build_surface(3, 1)), input_error);
    }
}
