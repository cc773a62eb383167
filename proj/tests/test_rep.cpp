#include <random>

#include "dhall/errors.hpp"
#include "dhall/rep.hpp"
#include "doctest.h"

using namespace dhall;

namespace {

QuiverPtr vop22() { return std::make_shared<Quiver>(annulus_quiver(2, 2).opposite()); }

Rep random_rep(std::mt19937& rng, const QuiverPtr& q, Fp p, std::size_t maxdim) {
    std::vector<std::size_t> dims(q->num_vertices());
    for (auto& d : dims) d = rng() % (maxdim + 1);
    std::vector<FpMatrix> maps;
    for (const auto& a : q->arrows()) {
        FpMatrix m(dims[a.dst], dims[a.src], p);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rng() % p;
        maps.push_back(m);
    }
    return Rep(q, p, dims, maps);
}

// Conjugate every vertex space by a random invertible matrix.
Rep random_base_change(std::mt19937& rng, const Rep& x) {
    const Fp p = x.prime();
    std::vector<FpMatrix> g, ginv;
    for (auto d : x.dims()) {
        while (true) {
            FpMatrix m(d, d, p);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) m.at(r, c) = rng() % p;
            if (auto inv = inverse(m)) {
                g.push_back(m);
                ginv.push_back(*inv);
                break;
            }
        }
    }
    std::vector<FpMatrix> maps;
    for (ArrowId a = 0; a < x.maps().size(); ++a) {
        const auto& arr = x.quiver()->arrow(a);
        maps.push_back(g[arr.dst] * x.map(a) * ginv[arr.src]);
    }
    return Rep(x.quiver(), p, x.dims(), maps);
}

bool exact_at(const Intertwiner& into, const Intertwiner& out_of) {
    for (std::size_t v = 0; v < into.comps.size(); ++v) {
        if (!(out_of.comps[v] * into.comps[v]).is_zero()) return false;
        if (rank(into.comps[v]) + rank(out_of.comps[v]) != into.comps[v].rows()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("projective at T of the opposite annulus quiver") {
    auto q = vop22();
    Rep pt = projective(q, 2, q->vertex("T"));
    CHECK(pt.dims() == std::vector<std::size_t>{2, 1, 1, 1});
    // both paths T -> S are independent
    auto basis = hom_space(pt, pt);
    CHECK(basis.size() == 1);
}

TEST_CASE("wrong shapes and contexts are rejected") {
    auto q = vop22();
    CHECK_THROWS_AS(Rep(q, 2, {1, 1, 1, 1}, {}), DimensionMismatch);
    Rep a = Rep::simple(q, 2, 0), b = Rep::simple(q, 3, 0);
    CHECK_THROWS_AS(hom_space(a, b), ContextMismatch);
}

TEST_CASE("property: Hom(P_v, M) has dimension dim M_v") {
    std::mt19937 rng(3);
    auto q = vop22();
    for (int trial = 0; trial < 40; ++trial) {
        Fp p = trial % 2 ? 3 : 2;
        Rep m = random_rep(rng, q, p, 2);
        for (VertexId v = 0; v < q->num_vertices(); ++v)
            CHECK(hom_space(projective(q, p, v), m).size() == m.dim(v));
    }
}

TEST_CASE("property: standard and minimal resolutions are exact") {
    std::mt19937 rng(5);
    auto q = vop22();
    for (int trial = 0; trial < 40; ++trial) {
        Fp p = trial % 2 ? 3 : 2;
        Rep m = random_rep(rng, q, p, 2);
        for (const auto& res : {standard_resolution(m), minimal_resolution(m)}) {
            CHECK(is_intertwiner(res.p1.rep, res.p0.rep, res.d));
            CHECK(is_intertwiner(res.p0.rep, m, res.eps));
            for (VertexId v = 0; v < q->num_vertices(); ++v) {
                CHECK(rank(res.d.comps[v]) == res.p1.rep.dim(v));  // injective
                CHECK(rank(res.eps.comps[v]) == m.dim(v));        // surjective
            }
            Intertwiner zero_in;
            for (VertexId v = 0; v < q->num_vertices(); ++v) zero_in.comps.emplace_back(res.p1.rep.dim(v), 0, p);
            CHECK(exact_at(res.d, res.eps));
        }
        auto mr = minimal_resolution(m);
        auto sr = standard_resolution(m);
        CHECK(mr.p0.rep.total_dim() <= sr.p0.rep.total_dim());
    }
}

TEST_CASE("minimal resolution of a projective has no first term") {
    auto q = vop22();
    for (VertexId v = 0; v < q->num_vertices(); ++v) {
        auto res = minimal_resolution(projective(q, 2, v));
        CHECK(res.p1.gens.empty());
        CHECK(res.p0.gens == std::vector<VertexId>{v});
    }
}

TEST_CASE("property: iso test sees through base change and separates non-isomorphic") {
    std::mt19937 rng(9);
    auto q = vop22();
    for (int trial = 0; trial < 60; ++trial) {
        Fp p = trial % 2 ? 3 : 2;
        Rep m = random_rep(rng, q, p, 2);
        CHECK(is_isomorphic(m, random_base_change(rng, m)));
        CHECK(fingerprint(m) == fingerprint(random_base_change(rng, m)));
    }
    Rep s = Rep::simple(q, 2, 0);
    CHECK_FALSE(is_isomorphic(s, Rep::simple(q, 2, 1)));
}

TEST_CASE("iso classes of small A2 representations") {
    auto a2 = std::make_shared<Quiver>(linear_quiver(2));
    // dims <= (1,1): S1, S2, S1+S2, and the indecomposable of dim (1,1)
    CHECK(enumerate_reps(a2, 2, {1, 1}).size() == 4);
    CHECK(enumerate_reps(a2, 3, {1, 1}).size() == 4);
    // dims <= (2,2): multiplicities (a, b, c) of S1, S2, P with a+c <= 2, b+c <= 2
    CHECK(enumerate_reps(a2, 2, {2, 2}).size() == 13);
}

TEST_CASE("JSON round trip") {
    std::mt19937 rng(1);
    auto q = vop22();
    Rep m = random_rep(rng, q, 3, 2);
    Rep back = rep_from_json(q, rep_to_json(m));
    CHECK(back.exact_key() == m.exact_key());
}
