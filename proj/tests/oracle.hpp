#pragma once

// Brute-force reference counts for module triples. Everything is enumerated
// entry by entry: no Hom-space bases, no fingerprints, no Ext corrections.

#include <cstdint>
#include <functional>
#include <vector>

#include "dhall/coeff.hpp"
#include "dhall/rep.hpp"

namespace oracle {

using dhall::Fp;
using dhall::FpMatrix;
using dhall::Rep;

// Visit every tuple of matrices (one per vertex) of shape dims_y[v] x dims_x[v].
inline void for_each_linear_family(const Rep& x, const Rep& y,
                                   const std::function<void(const std::vector<FpMatrix>&)>& visit) {
    const Fp p = x.prime();
    std::size_t nv = x.dims().size();
    std::vector<FpMatrix> comps;
    std::size_t entries = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        comps.emplace_back(y.dim(v), x.dim(v), p);
        entries += y.dim(v) * x.dim(v);
    }
    std::vector<Fp> digits(entries, 0);
    while (true) {
        std::size_t k = 0;
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t r = 0; r < y.dim(v); ++r)
                for (std::size_t c = 0; c < x.dim(v); ++c) comps[v].set(r, c, digits[k++]);
        visit(comps);
        std::size_t i = 0;
        while (i < entries && ++digits[i] == p) digits[i++] = 0;
        if (i == entries) break;
    }
}

inline bool commutes(const Rep& x, const Rep& y, const std::vector<FpMatrix>& f) {
    const auto& arrows = x.quiver()->arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        if (!(y.map(a) * f[s] == f[t] * x.map(a))) return false;
    }
    return true;
}

inline bool raw_isomorphic(const Rep& x, const Rep& y) {
    if (x.dims() != y.dims()) return false;
    bool found = false;
    for_each_linear_family(x, y, [&](const std::vector<FpMatrix>& f) {
        if (found) return;
        for (const auto& m : f)
            if (dhall::rank(m) != m.rows()) return;
        if (commutes(x, y, f)) found = true;
    });
    return found;
}

inline std::uint64_t raw_aut(const Rep& x) {
    std::uint64_t n = 0;
    for_each_linear_family(x, x, [&](const std::vector<FpMatrix>& f) {
        for (const auto& m : f)
            if (dhall::rank(m) != m.rows()) return;
        if (commutes(x, x, f)) ++n;
    });
    return n;
}

// Cokernel of an injective intertwiner f: x -> l, built on the standard basis
// vectors of l that complete the image.
inline Rep raw_cokernel(const Rep& x, const Rep& l, const std::vector<FpMatrix>& f) {
    const Fp p = x.prime();
    std::size_t nv = l.dims().size();
    std::vector<FpMatrix> basis(nv);          // columns: image, then complement
    std::vector<std::size_t> img_dim(nv), cdim(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<dhall::FpVec> cols;
        for (std::size_t c = 0; c < x.dim(v); ++c) cols.push_back(f[v].column(c));
        img_dim[v] = cols.size();
        for (std::size_t e = 0; e < l.dim(v); ++e) {
            dhall::FpVec unit(l.dim(v), 0);
            unit[e] = 1;
            auto trial = cols;
            trial.push_back(unit);
            if (dhall::rank(FpMatrix::from_columns(trial, l.dim(v), p)) == trial.size()) cols = trial;
        }
        cdim[v] = cols.size() - img_dim[v];
        basis[v] = FpMatrix::from_columns(cols, l.dim(v), p);
    }
    std::vector<FpMatrix> maps;
    const auto& arrows = l.quiver()->arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        FpMatrix m(cdim[t], cdim[s], p);
        for (std::size_t c = 0; c < cdim[s]; ++c) {
            dhall::FpVec image = l.map(a) * basis[s].column(img_dim[s] + c);
            auto coords = dhall::solve(basis[t], image);
            for (std::size_t r = 0; r < cdim[t]; ++r) m.set(r, c, (*coords)[img_dim[t] + r]);
        }
        maps.push_back(m);
    }
    return Rep(l.quiver(), p, cdim, maps);
}

// Injective intertwiners x -> l with cokernel isomorphic to y, over |Aut x|.
inline dhall::Rat raw_toen(const Rep& x, const Rep& y, const Rep& l) {
    std::uint64_t count = 0;
    for_each_linear_family(x, l, [&](const std::vector<FpMatrix>& f) {
        for (const auto& m : f)
            if (dhall::rank(m) != m.cols()) return;
        if (!commutes(x, l, f)) return;
        if (raw_isomorphic(raw_cokernel(x, l, f), y)) ++count;
    });
    dhall::Rat r(static_cast<unsigned long>(count), static_cast<unsigned long>(raw_aut(x)));
    r.canonicalize();
    return r;
}

}  // namespace oracle
