#pragma once

// Bounded derived category of a hereditary path algebra. Objects are kept in
// canonical form: a module for each shift, X = sum_n M_n[n]. Morphisms are
// computed as chain maps out of a projective complex modulo null-homotopy.
// Complexes use cohomological degrees and X[1]^i = X^{i+1}, so M[n] lives in
// degree -n.

#include <cstdint>
#include <map>
#include <vector>

#include "dhall/rep.hpp"

namespace dhall {

struct RepComplex {
    QuiverPtr quiver;
    Fp p = 2;
    std::map<int, Rep> terms;          // absent degrees are zero
    std::map<int, Intertwiner> diffs;  // diffs[i]: terms[i] -> terms[i+1]; absent means zero

    Rep term(int i) const;
    Intertwiner differential(int i) const;
    int lo() const;  // lowest non-zero degree (0 if empty)
    int hi() const;
};

struct ProjComplex {
    RepComplex cx;
    std::map<int, ProjSum> proj;  // same degrees as cx.terms
};

class DerivedObject {
public:
    DerivedObject() = default;
    DerivedObject(QuiverPtr quiver, Fp p);
    static DerivedObject module(const Rep& m, int shift = 0);

    const QuiverPtr& quiver() const { return quiver_; }
    Fp prime() const { return p_; }
    const std::map<int, Rep>& parts() const { return parts_; }
    void add(int shift, const Rep& m);  // direct sum into the given shift

    DerivedObject shifted(int k) const;
    bool is_zero() const { return parts_.empty(); }
    DerivedObject direct_sum(const DerivedObject& o) const;

    // Class in the Grothendieck group: sum (-1)^n dim M_n.
    DimVector k0_class() const;

private:
    QuiverPtr quiver_;
    Fp p_ = 2;
    std::map<int, Rep> parts_;
};

RepComplex stalk_complex(const DerivedObject& x);
ProjComplex projective_complex(const DerivedObject& x);

// Family of intertwiners f^i: X^i -> Y^i commuting with differentials.
struct ChainMap {
    std::map<int, Intertwiner> comps;
};

// Basis of Hom_K(P, Y) = Hom_D(P, Y) for a projective source complex P.
struct DerivedHom {
    std::vector<ChainMap> basis;
    std::size_t dim() const { return basis.size(); }
    ChainMap combination(const FpVec& coeffs, Fp p) const;
};

DerivedHom derived_hom_basis(const ProjComplex& source, const RepComplex& target);
DerivedHom derived_hom_basis(const DerivedObject& source, const DerivedObject& target);

// cone(f)^i = X^{i+1} + Y^i with d = [[-dX, 0], [f, dY]].
RepComplex cone(const ProjComplex& source, const RepComplex& target, const ChainMap& f);

std::map<int, Rep> homology(const RepComplex& c);
// dim H^i at each vertex, cheaper than the module structure
std::map<int, std::vector<std::size_t>> homology_dims(const RepComplex& c);
DerivedObject canonical_form(const RepComplex& c);

// dim Hom_D(X, Y[n]) for each n in [lo, hi].
std::map<int, std::size_t> ext_dims(const DerivedObject& x, const DerivedObject& y, int lo, int hi);

// The same dimension from module data: Hom for equal shifts, Ext^1 = Hom - <,>
// for shifts one apart, zero otherwise.
std::size_t derived_hom_dim_by_modules(const DerivedObject& x, const DerivedObject& y);

// Number of automorphisms of X, by enumerating End(X) and testing cones.
std::uint64_t aut_count(const DerivedObject& x, std::uint64_t cap = kDefaultEnumerationCap);

bool is_quasi_iso(const ProjComplex& source, const RepComplex& target, const ChainMap& f);

}  // namespace dhall
