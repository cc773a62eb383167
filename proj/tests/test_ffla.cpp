#include <random>

#include "dhall/errors.hpp"
#include "dhall/ffla.hpp"
#include "doctest.h"

using namespace dhall;

namespace {

FpMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Fp p) {
    FpMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng() % p;
    return m;
}

}  // namespace

TEST_CASE("enumeration order is lexicographic") {
    std::vector<FpVec> seen;
    enumerate_space({{1, 0}, {0, 1}}, 2, 2, kDefaultEnumerationCap, [&](const FpVec& v) { seen.push_back(v); });
    REQUIRE(seen.size() == 4);
    CHECK(seen[0] == FpVec{0, 0});
    CHECK(seen[1] == FpVec{0, 1});
    CHECK(seen[2] == FpVec{1, 0});
    CHECK(seen[3] == FpVec{1, 1});
    CHECK_THROWS_AS(enumerate_coefficients(21, 2, kDefaultEnumerationCap, [](const FpVec&) {}), CapExceeded);
    int count = 0;
    enumerate_coefficients(0, 3, 10, [&](const FpVec&) { ++count; });
    CHECK(count == 1);
}

TEST_CASE("rref, rank, inverse on a fixed matrix") {
    auto m = FpMatrix::from_rows({{1, 2, 0}, {2, 1, 1}, {0, 0, 1}}, 3, 3);
    CHECK(rank(m) == 2);  // row2 = 2*row1 + row3 mod 3
    auto m2 = FpMatrix::from_rows({{1, 1}, {0, 1}}, 2, 2);
    auto inv = inverse(m2);
    REQUIRE(inv.has_value());
    CHECK(*inv * m2 == FpMatrix::identity(2, 2));
    CHECK_FALSE(inverse(m).has_value());
    CHECK_THROWS_AS(FpMatrix(2, 2, 4), InputError);
}

TEST_CASE("property: rank-nullity, kernels, solving") {
    std::mt19937 rng(11);
    for (Fp p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            FpMatrix m = random_matrix(rng, r, c, p);
            auto ker = kernel_basis(m);
            CHECK(rank(m) + ker.size() == c);
            for (const auto& v : ker) CHECK(vec_is_zero(m * v));
            FpVec x(c);
            for (auto& xi : x) xi = rng() % p;
            FpVec b = m * x;
            auto sol = solve(m, b);
            REQUIRE(sol.has_value());
            CHECK(m * *sol == b);
            auto basis = row_space_basis({m.row(0)}, c, p);
            auto ext = extend_basis(basis, {m.row(0)}, c, p);
            CHECK(ext.empty());
        }
    }
}
