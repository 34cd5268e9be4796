#include <doctest.h>

#include "helpers.hpp"
#include "regstab/polynomial.hpp"

using namespace regstab;
using namespace regstab::testing;

TEST_CASE("polynomial construction keeps terms sorted and nonzero") {
    auto R = ring_fp({"x", "y"}, 101);
    auto p = poly(R, {{1, {0, 2}}, {3, {2, 0}}, {-3, {2, 0}}, {5, {1, 1}}});
    // 3x^2 - 3x^2 cancels; remaining 5xy + y^2 sorted descending
    REQUIRE(p.size() == 2);
    CHECK(p.lead_mono() == mono({1, 1}));
    CHECK(p.terms()[1].mono == mono({0, 2}));
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 2);
}

TEST_CASE("arithmetic identities") {
    auto R = ring_fp({"x", "y"}, 101);
    const auto& K = R.field;
    auto f = poly(R, {{2, {3, 0}}, {1, {1, 2}}});
    auto g = poly(R, {{7, {0, 3}}, {100, {1, 2}}});
    CHECK(f.add(K, g).sub(K, g).equals(K, f));
    CHECK(f.sub(K, f).is_zero());
    auto h = f.mul(K, g);
    CHECK(h.degree() == 6);
    CHECK(h.is_homogeneous());
    // (f+g)*(f+g) == f*f + 2fg + g*g
    auto s = f.add(K, g);
    auto lhs = s.mul(K, s);
    auto rhs = f.mul(K, f).add(K, f.mul(K, g).scaled(K, 2)).add(K, g.mul(K, g));
    CHECK(lhs.equals(K, rhs));
}

TEST_CASE("inhomogeneous polynomials are detected") {
    auto R = ring_fp({"x", "y"}, 101);
    auto p = poly(R, {{1, {2, 0}}, {1, {0, 3}}});
    CHECK_FALSE(p.is_homogeneous());
    CHECK_FALSE(p.homogeneous_degree().has_value());
}

TEST_CASE("printing uses canonical form") {
    auto R = ring_fp({"x", "y"}, 101);
    auto p = poly(R, {{1, {2, 0}}, {3, {1, 1}}, {1, {0, 0}}});
    CHECK(p.str(R.field, R.vars) == "x^2 + 3*x*y + 1");
    CHECK(Polynomial<FpField>::zero().str(R.field, R.vars) == "0");
}
