#include <doctest.h>

#include "helpers.hpp"
#include "regstab/extint.hpp"
#include "regstab/matrix.hpp"

using namespace regstab;
using namespace regstab::testing;

TEST_CASE("prime field arithmetic") {
    FpField K(101);
    CHECK(K.add(100, 5) == 4);
    CHECK(K.sub(3, 7) == 97);
    CHECK(K.mul(50, 50) == (50ull * 50) % 101);
    for (uint32_t a = 1; a < 101; ++a) CHECK(K.mul(a, K.inv(a)) == 1);
    CHECK(K.from_int(-1) == 100);
    CHECK_THROWS_AS(K.inv(0), DomainError);
    CHECK_THROWS_AS(FpField(100), InputError);
}

TEST_CASE("rational field is exact at large sizes") {
    RatField Q;
    // 1/3 repeated: no drift, exact arbitrary precision
    auto x = Q.one();
    for (int i = 0; i < 40; ++i) x = Q.div(x, Q.from_int(3));
    for (int i = 0; i < 40; ++i) x = Q.mul(x, Q.from_int(3));
    CHECK(Q.eq(x, Q.one()));
    // 2^100 as an exact integer
    auto big = Q.one();
    for (int i = 0; i < 100; ++i) big = Q.mul(big, Q.from_int(2));
    CHECK(Q.to_string(big) == "1267650600228229401496703205376");
}

TEST_CASE("kernel_and_rank basics") {
    FpField K(101);
    SUBCASE("identity") {
        auto M = DenseMatrix<FpField>::identity(K, 2);
        auto [rank, ker] = kernel_and_rank(K, M);
        CHECK(rank == 2);
        CHECK(ker.empty());
    }
    SUBCASE("zero matrix") {
        DenseMatrix<FpField> M(K, 2, 2);
        auto [rank, ker] = kernel_and_rank(K, M);
        CHECK(rank == 0);
        CHECK(ker.size() == 2);
    }
    SUBCASE("duplicated rows") {
        DenseMatrix<FpField> M(K, 2, 2);
        M.at(0, 0) = M.at(0, 1) = M.at(1, 0) = M.at(1, 1) = 1;
        auto [rank, ker] = kernel_and_rank(K, M);
        CHECK(rank == 1);
        REQUIRE(ker.size() == 1);
        // kernel spanned by (1, -1)
        CHECK(K.add(ker[0][0], ker[0][1]) == 0);
        CHECK(ker[0][0] != 0);
    }
}

TEST_CASE("kernel vectors map to zero and rank is shuffle-invariant") {
    Rng rng(99);
    FpField K(32003);
    for (int iter = 0; iter < 50; ++iter) {
        int r = rng.range(1, 8), c = rng.range(1, 8);
        DenseMatrix<FpField> M(K, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                M.at(i, j) = rng.range(0, 4) == 0 ? 0u : (uint32_t)(rng.next() % 32003);
        auto [rank, ker] = kernel_and_rank(K, M);
        CHECK(rank + (int)ker.size() == c);
        for (const auto& v : ker) {
            auto img = M.apply(K, v);
            for (auto& x : img) CHECK(x == 0);
        }
        // shuffle rows
        DenseMatrix<FpField> S(K, 0, c);
        std::vector<int> perm(r);
        for (int i = 0; i < r; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng.eng);
        for (int i : perm) {
            std::vector<uint32_t> row(c);
            for (int j = 0; j < c; ++j) row[j] = M.at(i, j);
            S.append_row(row);
        }
        CHECK(S.rank(K) == rank);
    }
}

TEST_CASE("extended integers") {
    CHECK(ExtInt::neg_inf().plus(5).is_neg_inf());
    CHECK(ExtInt::exact(3).plus(2) == ExtInt::exact(5));
    CHECK(ExtInt::at_least(4).plus(1) == ExtInt::at_least(5));
    CHECK(ExtInt::le(ExtInt::neg_inf(), ExtInt::exact(-100)) == true);
    CHECK(ExtInt::le(ExtInt::exact(2), ExtInt::exact(1)) == false);
    CHECK(ExtInt::le(ExtInt::at_least(5), ExtInt::exact(3)) == false);
    CHECK(!ExtInt::le(ExtInt::at_least(2), ExtInt::exact(3)).has_value());
    CHECK(ExtInt::max(ExtInt::neg_inf(), ExtInt::exact(1)) == ExtInt::exact(1));
    CHECK(ExtInt::exact(7).str() == "7");
    CHECK(ExtInt::at_least(8).str() == ">=8");
    CHECK(ExtInt::neg_inf().str() == "-inf");
}
