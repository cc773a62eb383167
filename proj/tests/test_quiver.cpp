#include "dhall/errors.hpp"
#include "dhall/quiver.hpp"
#include "doctest.h"

using namespace dhall;

TEST_CASE("oriented cycles are rejected") {
    CHECK_THROWS_AS(Quiver({"a", "b"}, {{0, 1}, {1, 0}}), NotHereditary);
    CHECK_THROWS_AS(Quiver({"a"}, {{0, 0}}), NotHereditary);
}

TEST_CASE("annulus quiver shape and paths") {
    Quiver v = annulus_quiver(2, 2);
    CHECK(v.names() == std::vector<std::string>{"S", "P1", "Q1", "T"});
    CHECK(v.num_arrows() == 4);
    Quiver op = v.opposite();
    // paths from T in the opposite quiver: T, T->P1, T->Q1, and two to S
    CHECK(op.paths_from(op.vertex("T")).size() == 5);
    CHECK(v.paths_from(v.vertex("T")).size() == 1);
}

TEST_CASE("Euler form") {
    Quiver a2 = linear_quiver(2);
    CHECK(a2.euler_form({1, 0}, {0, 1}) == -1);
    CHECK(a2.euler_form({0, 1}, {1, 0}) == 0);
    CHECK(a2.symmetrized(0, 1) == -1);
    CHECK(a2.symmetrized(0, 0) == 2);
    Quiver v = annulus_quiver(2, 2).opposite();
    DimVector pt{2, 1, 1, 1};
    CHECK(v.euler_form(pt, pt) == 1);  // projective with End = k
    CHECK(v.symmetrized(v.vertex("S"), v.vertex("T")) == 0);
    CHECK_THROWS_AS(v.euler_form({1}, pt), DimensionMismatch);
}

TEST_CASE("JSON round trip") {
    Quiver v = annulus_quiver(3, 2);
    CHECK(quiver_from_json(quiver_to_json(v)) == v);
    CHECK_THROWS_AS(quiver_from_json(nlohmann::json::parse(R"({"vertices":[{"id":0}]})")), InputError);
}
