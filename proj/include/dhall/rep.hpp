#pragma once

// Finite-dimensional representations of a quiver over F_p, homomorphisms
// between them, projectives and projective resolutions.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "dhall/ffla.hpp"
#include "dhall/quiver.hpp"
#include "json.hpp"

namespace dhall {

using QuiverPtr = std::shared_ptr<const Quiver>;

class Rep {
public:
    Rep() = default;
    // maps[a] has shape dims[dst(a)] x dims[src(a)].
    Rep(QuiverPtr quiver, Fp p, std::vector<std::size_t> dims, std::vector<FpMatrix> maps);
    static Rep zero(QuiverPtr quiver, Fp p);
    static Rep simple(QuiverPtr quiver, Fp p, VertexId v);

    const QuiverPtr& quiver() const { return quiver_; }
    Fp prime() const { return p_; }
    std::size_t dim(VertexId v) const { return dims_.at(v); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    DimVector dim_vector() const;
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const FpMatrix& map(ArrowId a) const { return maps_.at(a); }
    const std::vector<FpMatrix>& maps() const { return maps_; }

    FpMatrix path_action(const Path& path) const;

    // Exact byte-level key: equal keys mean identical matrices.
    std::string exact_key() const;

private:
    QuiverPtr quiver_;
    Fp p_ = 2;
    std::vector<std::size_t> dims_;
    std::vector<FpMatrix> maps_;
};

// Family of linear maps, one per vertex, shape dims(target) x dims(source).
struct Intertwiner {
    std::vector<FpMatrix> comps;
};

bool same_context(const Rep& a, const Rep& b);
void require_same_context(const Rep& a, const Rep& b);

bool is_intertwiner(const Rep& x, const Rep& y, const Intertwiner& f);
Intertwiner compose(const Intertwiner& g, const Intertwiner& f);  // g after f
Intertwiner zero_map(const Rep& x, const Rep& y);
Intertwiner identity_map(const Rep& x);
Intertwiner linear_combination(const std::vector<Intertwiner>& basis, const FpVec& coeffs, Fp p);
bool is_iso(const Intertwiner& f);

// Basis of Hom(x, y).
std::vector<Intertwiner> hom_space(const Rep& x, const Rep& y);

Rep direct_sum(const Rep& x, const Rep& y);

// Direct sum of indecomposable projectives P_{g_1} + ... + P_{g_k}. The basis
// at vertex w lists, generator by generator, the paths g_k ~> w.
struct ProjSum {
    std::vector<VertexId> gens;
    Rep rep;
    // offset[k][w]: first basis index at w belonging to generator k
    std::vector<std::vector<std::size_t>> offset;
    // generator k sits at basis index offset[k][gens[k]] of vertex gens[k]
};

ProjSum proj_sum(const QuiverPtr& quiver, Fp p, const std::vector<VertexId>& gens);
Rep projective(const QuiverPtr& quiver, Fp p, VertexId v);

// The map out of a projective sum sending generator k to images[k] in dst at gens[k].
Intertwiner map_from_generators(const ProjSum& src, const Rep& dst, const std::vector<FpVec>& images);

// Sub-space spanned by images of arrows into each vertex.
std::vector<std::vector<FpVec>> radical_basis(const Rep& x);
// For each vertex, vectors spanning a complement of the radical.
std::vector<std::vector<FpVec>> top_generators(const Rep& x);

// 0 -> P1 -> P0 -> X -> 0. The standard resolution uses one summand per
// (vertex, basis vector) in P0 and per (arrow, source basis vector) in P1.
struct Resolution {
    ProjSum p1;
    ProjSum p0;
    Intertwiner d;    // P1 -> P0
    Intertwiner eps;  // P0 -> X
};
Resolution standard_resolution(const Rep& x);
Resolution minimal_resolution(const Rep& x);

// Iso-invariant fingerprint: dimensions, ranks of path maps, and ranks of
// pairs of path maps with a common source or target.
std::vector<long long> fingerprint(const Rep& x);

// Exact decision. Random witness search first, then exhaustive search over
// Hom(x, y) (throws CapExceeded if that is too large).
bool is_isomorphic(const Rep& x, const Rep& y, std::uint64_t cap = kDefaultEnumerationCap);

// Iso-class representatives of all non-zero representations with dims <= dmax.
std::vector<Rep> enumerate_reps(const QuiverPtr& quiver, Fp p, const std::vector<std::size_t>& dmax,
                                std::uint64_t cap = kDefaultEnumerationCap);

nlohmann::json rep_to_json(const Rep& x);
Rep rep_from_json(const QuiverPtr& quiver, const nlohmann::json& j);

}  // namespace dhall
