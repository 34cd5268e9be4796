#include <doctest.h>

#include "helpers.hpp"
#include "regstab/stabilization.hpp"

using namespace regstab;
using namespace regstab::testing;

namespace {

IdealSpec<FpField> ci22(const Ring<FpField>& R) {
    return ideal(R, {poly(R, {{1, {2, 0}}}), poly(R, {{1, {0, 2}}})});
}

bool all_checks_pass(const std::vector<CheckRecord>& cs) {
    for (const auto& c : cs)
        if (!c.pass()) return false;
    return true;
}

} // namespace

TEST_CASE("compute_d") {
    auto R = ring_fp({"x", "y"});
    CHECK(compute_d(power_of_maximal_ideal(R, 1)) == 1);
    CHECK(compute_d(ideal(R, {poly(R, {{1, {0, 1}}}), poly(R, {{1, {3, 0}}})})) == 3);
    auto I = ideal(R, {poly(R, {{1, {3, 0}}}), poly(R, {{1, {0, 3}}}), poly(R, {{1, {2, 2}}})});
    CHECK(compute_d(I) == 3);
    auto Ip = subideal_up_to_degree(I, 3);
    CHECK(Ip.gens.size() == 2); // (x^3, y^3), strictly smaller than I
    CHECK_THROWS_AS(compute_d(ideal(R, {poly(R, {{1, {2, 0}}})})), DomainError);
}

TEST_CASE("compute_t0 and its cap") {
    auto R = ring_fp({"x", "y"});
    CHECK(compute_t0(ci22(R), 2) == 1);                 // I' = I
    CHECK(compute_t0(power_of_maximal_ideal(R, 1), 1) == 1);
    auto I = ideal(R, {poly(R, {{1, {3, 0}}}), poly(R, {{1, {0, 3}}}), poly(R, {{1, {2, 2}}})});
    CHECK(compute_t0(I, 3) == 1); // m^3 * I lands in (x^3, y^3)
    // cap arithmetic: the n=4, d=5 value of ceil((n-1)(d-1)/(d+1)) is 2
    CHECK(t0_cap((5 - 1) * 4 + 1, 5) == 2);
}

TEST_CASE("reg tables of the golden examples") {
    auto R = ring_fp({"x", "y"});
    SUBCASE("maximal ideal: reg(m^t) = t") {
        PowerCache<FpField> cache(power_of_maximal_ideal(R, 1));
        auto rows = reg_table(cache, 1, 4);
        for (int t = 1; t <= 4; ++t) {
            CHECK(rows[t - 1].reg == t);
            CHECK(rows[t - 1].f == 0);
        }
    }
    SUBCASE("(x^2, y^2): reg = 3, 5, 7 and f = 1") {
        PowerCache<FpField> cache(ci22(R));
        auto rows = reg_table(cache, 2, 3);
        CHECK(rows[0].reg == 3);
        CHECK(rows[1].reg == 5);
        CHECK(rows[2].reg == 7);
        for (auto& r : rows) CHECK(r.f == 1);
    }
    SUBCASE("(y, x^3): reg = 3, 6, 9 and f = 0") {
        PowerCache<FpField> cache(ideal(R, {poly(R, {{1, {0, 1}}}), poly(R, {{1, {3, 0}}})}));
        auto rows = reg_table(cache, 3, 3);
        CHECK(rows[0].reg == 3);
        CHECK(rows[1].reg == 6);
        CHECK(rows[2].reg == 9);
        for (auto& r : rows) CHECK(r.f == 0);
    }
}

TEST_CASE("n_strand_dimensions of (x^2, y^2)") {
    auto R = ring_fp({"x", "y"});
    auto dims0 = n_strand_dimensions(ci22(R), 0, 3);
    CHECK(dims0 == std::vector<long long>{1, 2, 3});
    auto dims1 = n_strand_dimensions(ci22(R), 1, 3);
    CHECK(dims1 == std::vector<long long>{0, 0, 0});
    // mu at/above c: identically zero
    auto dims2 = n_strand_dimensions(ci22(R), 2, 3);
    CHECK(dims2 == std::vector<long long>{0, 0, 0});
}

TEST_CASE("verify_monotonicity") {
    SUBCASE("true grid passes") {
        DimGrid g;
        g.t0 = 1;
        g.dims = {{1, 2, 3}, {0, 0, 0}};
        CHECK(verify_monotonicity(g).pass());
    }
    SUBCASE("fabricated counterexample is caught") {
        DimGrid g;
        g.t0 = 1;
        g.dims = {{1, 1, 1}, {1, 1, 1}, {1, 1, 0}, {1, 1, 1}};
        auto c = verify_monotonicity(g);
        CHECK(c.fail());
        CHECK(c.note.find("mu=2") != std::string::npos);
    }
    SUBCASE("zero propagation forward in t only applies from t0 on") {
        DimGrid g;
        g.t0 = 2;
        g.dims = {{0, 1, 1}}; // a revival before t0 is allowed
        CHECK(verify_monotonicity(g).pass());
        g.t0 = 1;
        CHECK(verify_monotonicity(g).fail());
    }
    SUBCASE("all-zero grid passes") {
        DimGrid g;
        g.t0 = 1;
        g.dims = {{0, 0}, {0, 0}};
        CHECK(verify_monotonicity(g).pass());
    }
}

TEST_CASE("stabilization_report golden: maximal ideal") {
    auto R = ring_fp({"x", "y"});
    auto rep = stabilization_report(power_of_maximal_ideal(R, 1));
    CHECK(rep.d == 1);
    CHECK(rep.t0 == 1);
    CHECK(rep.b == 0);
    CHECK(rep.c == 0);
    CHECK(rep.stab == 1);
    CHECK(rep.degenerate);
    CHECK(rep.certified);
    CHECK(all_checks_pass(rep.checks));
}

TEST_CASE("stabilization_report golden: (x^2, y^2)") {
    auto R = ring_fp({"x", "y"});
    auto rep = stabilization_report(ci22(R));
    CHECK(rep.d == 2);
    CHECK(rep.t0 == 1);
    CHECK(rep.b == 1);
    CHECK(rep.c == 1);
    CHECK(rep.stab == 1);
    CHECK(rep.e_b.is_neg_inf());
    CHECK(rep.degenerate);
    CHECK(rep.certified);
    CHECK(all_checks_pass(rep.checks));
}

TEST_CASE("stabilization_report golden: (x^3, y^3, x^2y^2)") {
    auto R = ring_fp({"x", "y"});
    auto I = ideal(R, {poly(R, {{1, {3, 0}}}), poly(R, {{1, {0, 3}}}), poly(R, {{1, {2, 2}}})});
    auto rep = stabilization_report(I);
    CHECK(rep.d == 3);
    CHECK(rep.iprime_proper);
    CHECK(rep.t0 == 1);
    CHECK(rep.b == 1);
    CHECK(rep.stab == 1);
    CHECK(rep.table[0].f == 1);
    CHECK(rep.table[1].f == 1);
    CHECK(all_checks_pass(rep.checks));
}

TEST_CASE("stabilization_report golden: nondegenerate (x^4, x^3y, xy^3, y^4)") {
    auto R = ring_fp({"x", "y"});
    auto I = ideal(R, {poly(R, {{1, {4, 0}}}), poly(R, {{1, {3, 1}}}), poly(R, {{1, {1, 3}}}),
                       poly(R, {{1, {0, 4}}})});
    auto rep = stabilization_report(I);
    CHECK(rep.d == 4);
    CHECK(rep.t0 == 1);
    CHECK(rep.table[0].reg == 5);
    CHECK(rep.table[0].f == 1);
    CHECK(rep.table[1].reg == 8);
    CHECK(rep.table[1].f == 0);
    CHECK(rep.b == 0);
    CHECK(rep.c == 1);
    CHECK(rep.c_argmax == 1);
    CHECK(rep.e_b == ExtInt::exact(1));
    CHECK(rep.stab == 2);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.certified);
    CHECK(all_checks_pass(rep.checks));
}

TEST_CASE("stabilization_report over the rationals") {
    Ring<RatField> R{RatField{}, {"x", "y"}};
    RatField Q;
    auto mk = [&](std::vector<std::pair<long long, std::vector<int>>> ts) {
        std::vector<Polynomial<RatField>::Term> v;
        for (auto& [c, e] : ts) v.push_back({Monomial::from_exponents(e), Q.from_int(c)});
        return Polynomial<RatField>::from_terms(Q, std::move(v));
    };
    IdealSpec<RatField> I{R, {mk({{2, {2, 0}}, {1, {1, 1}}}), mk({{3, {0, 2}}})}};
    auto rep = stabilization_report(I, 8, 2);
    CHECK(rep.d == 2);
    CHECK(rep.b >= 0);
    CHECK(all_checks_pass(rep.checks));
}

TEST_CASE("report horizon precondition") {
    auto R = ring_fp({"x", "y"});
    CHECK_THROWS_AS(stabilization_report(ci22(R), 1, 4), InputError);
}

TEST_CASE("verify_t0_bounds is tight on (x^2, y^2)") {
    auto R = ring_fp({"x", "y"});
    auto cs = verify_t0_bounds(ci22(R));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].pass());
    CHECK(cs[0].lhs == "3");
    CHECK(cs[0].rhs == "3"); // (d-1)n+1 = 3, attained
    CHECK(cs[1].pass());
    CHECK(cs[1].lhs == "1");
}
