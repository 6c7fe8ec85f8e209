#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surface.hpp"

using namespace torelli;

TEST_CASE("model ranks") {
    CHECK(build_surface(3, 2).rank() == 8);
    CHECK(build_surface(3, 1).rank() == 6);
    CHECK(build_surface(1, 2).rank() == 4);
    CHECK_THROWS_AS(build_surface(0, 2), input_error);
    CHECK_THROWS_AS(build_surface(3, 3), input_error);
}

TEST_CASE("curve table solves the constraint system") {
    for (int g = 1; g <= 6; ++g)
        for (int nb = 1; nb <= 2; ++nb) {
            SurfaceModel m = build_surface(g, nb);  // construction re-verifies all constraints
            auto c = [&](std::size_t j) { return m.curve("c" + std::to_string(j)); };
            for (std::size_t i = 1; i < m.chain_curves; ++i) CHECK(pairing(m.form, c(i), c(i + 1)) == 1);
            for (std::size_t i = 1; i + 2 <= m.chain_curves; ++i)
                CHECK(pairing(m.form, c(i), c(i + 2)) == 0);
        }
}

TEST_CASE("named classes at genus 3, two boundary components") {
    SurfaceModel m = build_surface(3, 2);
    CHECK(m.curve("c1") == m.basis_vector(4));  // y1
    CHECK(m.curve("beta") == vec_add(m.curve("b"), m.curve("c4")));
    Vec odd(m.rank());
    for (int j = 1; j <= 7; j += 2) odd = vec_add(odd, m.curve("c" + std::to_string(j)));
    CHECK(odd == m.curve("d1"));
    CHECK(vec_is_zero(vec_add(m.curve("d1"), m.curve("d2"))));
    CHECK_FALSE(vec_is_zero(m.curve("d1")));
    for (const auto& [name, v] : m.curve_list) {
        INFO(name);
        Int g = 0;
        for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
        CHECK(g == 1);
    }
    CHECK_THROWS_AS(m.curve("nope"), input_error);
}

TEST_CASE("one-boundary table closes up") {
    SurfaceModel m = build_surface(3, 1);
    Vec odd(m.rank());
    for (int j = 1; j <= 7; j += 2) odd = vec_add(odd, m.curve("c" + std::to_string(j)));
    CHECK(vec_is_zero(odd));
}

TEST_CASE("handle support") {
    SurfaceModel m = build_surface(3, 2);
    CHECK(handle_support(m, m.curve("c1")) == std::set<int>{1});
    CHECK((handle_support(m, m.curve("c3")) == std::set<int>{1, 2}));
    CHECK(handle_support(m, m.curve("c4")) == std::set<int>{2});
    CHECK(handle_support(m, m.curve("d1")) == std::set<int>{4});
}

TEST_CASE("subsurface enumeration") {
    CHECK(enumerate_subsurfaces(SubsurfaceKind::S, 3, 3).size() == 1);
    CHECK(enumerate_subsurfaces(SubsurfaceKind::S, 5, 3).size() == 10);
    CHECK(enumerate_subsurfaces(SubsurfaceKind::W, 3, 2).size() == 6);  // C(4,2)
    CHECK(enumerate_subsurfaces(SubsurfaceKind::R, 4, 0).size() == 4);
    CHECK(enumerate_subsurfaces(SubsurfaceKind::Y, 4, 0).size() == 4);
    CHECK_THROWS_AS(enumerate_subsurfaces(SubsurfaceKind::S, 3, 4), input_error);

    for (const auto& d : enumerate_subsurfaces(SubsurfaceKind::S, 4, 2)) {
        CHECK(d.index_set.count(5) == 0);          // S-family indices avoid g+1
        CHECK(d.support_handles.count(5) == 1);    // but the subsurface touches the boundary handle
    }
    std::size_t two_boundary = 0;
    for (const auto& d : enumerate_subsurfaces(SubsurfaceKind::W, 3, 2))
        if (d.index_set.count(4)) ++two_boundary;
    CHECK(two_boundary == 3);  // W_I with g+1 in I
    CHECK(parse_subsurface_kind("W") == SubsurfaceKind::W);
    CHECK_THROWS_AS(parse_subsurface_kind("Q"), input_error);
}

TEST_CASE("generator support cover") {
    for (int g = 3; g <= 6; ++g) CHECK(generator_support_cover(g, 2));
    CHECK_FALSE(generator_support_cover(3, 1));  // c3 spans two handles
    CHECK_THROWS_AS(generator_support_cover(3, 0), input_error);
}
