#include "dhall/dercat.hpp"

#include <stdexcept>

#include "dhall/errors.hpp"

namespace dhall {

// ---------------------------------------------------------------- complexes

Rep RepComplex::term(int i) const {
    auto it = terms.find(i);
    return it == terms.end() ? Rep::zero(quiver, p) : it->second;
}

Intertwiner RepComplex::differential(int i) const {
    auto it = diffs.find(i);
    if (it != diffs.end()) return it->second;
    return zero_map(term(i), term(i + 1));
}

int RepComplex::lo() const { return terms.empty() ? 0 : terms.begin()->first; }
int RepComplex::hi() const { return terms.empty() ? 0 : terms.rbegin()->first; }

// ---------------------------------------------------------------- objects

DerivedObject::DerivedObject(QuiverPtr quiver, Fp p) : quiver_(std::move(quiver)), p_(p) {}

DerivedObject DerivedObject::module(const Rep& m, int shift) {
    DerivedObject x(m.quiver(), m.prime());
    x.add(shift, m);
    return x;
}

void DerivedObject::add(int shift, const Rep& m) {
    if (!same_context(Rep::zero(quiver_, p_), m)) throw ContextMismatch("module from another quiver or field");
    if (m.is_zero()) return;
    auto it = parts_.find(shift);
    if (it == parts_.end())
        parts_.emplace(shift, m);
    else
        it->second = dhall::direct_sum(it->second, m);
}

DerivedObject DerivedObject::shifted(int k) const {
    DerivedObject r(quiver_, p_);
    for (const auto& [n, m] : parts_) r.parts_.emplace(n + k, m);
    return r;
}

DerivedObject DerivedObject::direct_sum(const DerivedObject& o) const {
    DerivedObject r = *this;
    for (const auto& [n, m] : o.parts_) r.add(n, m);
    return r;
}

DimVector DerivedObject::k0_class() const {
    DimVector c(quiver_->num_vertices(), 0);
    for (const auto& [n, m] : parts_) {
        long long sign = (n % 2 == 0) ? 1 : -1;
        for (VertexId v = 0; v < c.size(); ++v) c[v] += sign * static_cast<long long>(m.dim(v));
    }
    return c;
}

RepComplex stalk_complex(const DerivedObject& x) {
    RepComplex c{x.quiver(), x.prime(), {}, {}};
    for (const auto& [n, m] : x.parts()) c.terms.emplace(-n, m);
    return c;
}

namespace {

FpVec gen_column(const Intertwiner& f, const ProjSum& ps, std::size_t k) {
    VertexId g = ps.gens[k];
    return f.comps[g].column(ps.offset[k][g]);
}

}  // namespace

ProjComplex projective_complex(const DerivedObject& x) {
    const QuiverPtr& q = x.quiver();
    const Fp p = x.prime();
    struct Block {
        const Resolution* res;
        bool first_term;  // P1 rather than P0
    };
    std::map<int, Resolution> resolutions;
    for (const auto& [n, m] : x.parts()) resolutions.emplace(n, minimal_resolution(m));
    std::map<int, std::vector<Block>> blocks;
    for (const auto& [n, res] : resolutions) {
        blocks[-n].push_back({&res, false});
        if (!res.p1.gens.empty()) blocks[-n - 1].push_back({&res, true});
    }
    ProjComplex out;
    out.cx = RepComplex{q, p, {}, {}};
    // first generator index of each block within its degree
    std::map<int, std::vector<std::size_t>> first_gen;
    for (const auto& [deg, bl] : blocks) {
        std::vector<VertexId> gens;
        for (const auto& b : bl) {
            first_gen[deg].push_back(gens.size());
            const auto& g = b.first_term ? b.res->p1.gens : b.res->p0.gens;
            gens.insert(gens.end(), g.begin(), g.end());
        }
        ProjSum ps = proj_sum(q, p, gens);
        out.cx.terms.emplace(deg, ps.rep);
        out.proj.emplace(deg, std::move(ps));
    }
    for (const auto& [deg, bl] : blocks) {
        if (!out.proj.count(deg + 1)) continue;
        const ProjSum& src = out.proj.at(deg);
        const ProjSum& dst = out.proj.at(deg + 1);
        std::vector<FpVec> images;
        for (std::size_t bi = 0; bi < bl.size(); ++bi) {
            const auto& b = bl[bi];
            const auto& gens = b.first_term ? b.res->p1.gens : b.res->p0.gens;
            std::size_t dst_first = 0;
            if (b.first_term) {
                // the matching P0 block lives in degree deg + 1
                const auto& nb = blocks.at(deg + 1);
                for (std::size_t j = 0; j < nb.size(); ++j)
                    if (nb[j].res == b.res && !nb[j].first_term) dst_first = first_gen.at(deg + 1)[j];
            }
            for (std::size_t k = 0; k < gens.size(); ++k) {
                VertexId g = gens[k];
                FpVec img(dst.rep.dim(g), 0);
                if (b.first_term) {
                    FpVec local = gen_column(b.res->d, b.res->p1, k);
                    std::size_t base = dst.offset[dst_first][g];
                    for (std::size_t r = 0; r < local.size(); ++r) img[base + r] = local[r];
                }
                images.push_back(std::move(img));
            }
        }
        out.cx.diffs.emplace(deg, map_from_generators(src, dst.rep, images));
    }
    return out;
}

// ---------------------------------------------------------------- morphisms

ChainMap DerivedHom::combination(const FpVec& coeffs, Fp p) const {
    if (coeffs.size() != basis.size()) throw DimensionMismatch("one coefficient per basis map expected");
    ChainMap out;
    if (basis.empty()) return out;
    for (const auto& [deg, f] : basis[0].comps) {
        Intertwiner acc;
        for (const auto& c : f.comps) acc.comps.emplace_back(c.rows(), c.cols(), p);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!coeffs[j]) continue;
            const auto& g = basis[j].comps.at(deg);
            for (std::size_t v = 0; v < acc.comps.size(); ++v) acc.comps[v] = acc.comps[v] + g.comps[v].scaled(coeffs[j]);
        }
        out.comps.emplace(deg, std::move(acc));
    }
    return out;
}

DerivedHom derived_hom_basis(const ProjComplex& source, const RepComplex& target) {
    const Fp p = source.cx.p;
    // unknowns: image of each source generator in the target term of equal degree
    struct Slot {
        int deg;
        std::size_t gen;
        std::size_t start;
        std::size_t len;
    };
    std::vector<Slot> slots;
    std::map<std::pair<int, std::size_t>, std::size_t> slot_of;
    std::size_t n = 0;
    for (const auto& [deg, ps] : source.proj) {
        Rep y = target.term(deg);
        for (std::size_t k = 0; k < ps.gens.size(); ++k) {
            std::size_t len = y.dim(ps.gens[k]);
            slot_of[{deg, k}] = slots.size();
            slots.push_back({deg, k, n, len});
            n += len;
        }
    }
    DerivedHom out;
    if (n == 0) return out;

    auto unit_images = [&](const ProjSum& ps, std::size_t k, std::size_t r, const Rep& dst) {
        std::vector<FpVec> images;
        for (std::size_t j = 0; j < ps.gens.size(); ++j) images.emplace_back(dst.dim(ps.gens[j]), 0);
        images[k][r] = 1;
        return map_from_generators(ps, dst, images);
    };
    // residual rows: for each degree and source generator, a vector in target^{deg+1}
    std::map<std::pair<int, std::size_t>, std::size_t> row_of;
    std::size_t nrows = 0;
    for (const auto& [deg, ps] : source.proj) {
        Rep y1 = target.term(deg + 1);
        for (std::size_t k = 0; k < ps.gens.size(); ++k) {
            row_of[{deg, k}] = nrows;
            nrows += y1.dim(ps.gens[k]);
        }
    }
    // coordinates of a map source^deg -> target^deg read off at the generators
    auto add_coords = [&](FpVec& v, int deg, const Intertwiner& f, Fp scale) {
        const ProjSum& ps = source.proj.at(deg);
        for (std::size_t k = 0; k < ps.gens.size(); ++k) {
            const Slot& s = slots[slot_of.at({deg, k})];
            FpVec col = gen_column(f, ps, k);
            for (std::size_t r = 0; r < s.len; ++r) v[s.start + r] = static_cast<Fp>((v[s.start + r] + std::uint64_t{scale} * col[r]) % p);
        }
    };
    auto add_rows = [&](FpMatrix& m, std::size_t column, int deg, const Intertwiner& f, Fp scale) {
        const ProjSum& ps = source.proj.at(deg);
        for (std::size_t k = 0; k < ps.gens.size(); ++k) {
            std::size_t base = row_of.at({deg, k});
            FpVec col = gen_column(f, ps, k);
            for (std::size_t r = 0; r < col.size(); ++r) m.at(base + r, column) = static_cast<Fp>((m(base + r, column) + std::uint64_t{scale} * col[r]) % p);
        }
    };

    FpMatrix residual(nrows, n, p);
    for (const auto& s : slots) {
        const ProjSum& ps = source.proj.at(s.deg);
        Rep y = target.term(s.deg);
        for (std::size_t r = 0; r < s.len; ++r) {
            Intertwiner f = unit_images(ps, s.gen, r, y);
            add_rows(residual, s.start + r, s.deg, compose(target.differential(s.deg), f), 1);
            if (source.proj.count(s.deg - 1))
                add_rows(residual, s.start + r, s.deg - 1, compose(f, source.cx.differential(s.deg - 1)), p - 1);
        }
    }
    std::vector<FpVec> cycles;
    if (nrows == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            FpVec e(n, 0);
            e[i] = 1;
            cycles.push_back(std::move(e));
        }
    } else {
        cycles = kernel_basis(residual);
    }

    std::vector<FpVec> boundaries;
    for (const auto& [deg, ps] : source.proj) {
        Rep y = target.term(deg - 1);
        for (std::size_t k = 0; k < ps.gens.size(); ++k) {
            for (std::size_t r = 0; r < y.dim(ps.gens[k]); ++r) {
                Intertwiner h = unit_images(ps, k, r, y);
                FpVec v(n, 0);
                add_coords(v, deg, compose(target.differential(deg - 1), h), 1);
                if (source.proj.count(deg - 1)) add_coords(v, deg - 1, compose(h, source.cx.differential(deg - 1)), 1);
                boundaries.push_back(std::move(v));
            }
        }
    }
    for (auto idx : extend_basis(boundaries, cycles, n, p)) {
        const FpVec& c = cycles[idx];
        ChainMap f;
        for (const auto& [deg, ps] : source.proj) {
            std::vector<FpVec> images;
            for (std::size_t k = 0; k < ps.gens.size(); ++k) {
                const Slot& s = slots[slot_of.at({deg, k})];
                images.emplace_back(c.begin() + static_cast<long>(s.start), c.begin() + static_cast<long>(s.start + s.len));
            }
            f.comps.emplace(deg, map_from_generators(ps, target.term(deg), images));
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

DerivedHom derived_hom_basis(const DerivedObject& source, const DerivedObject& target) {
    return derived_hom_basis(projective_complex(source), stalk_complex(target));
}

// ---------------------------------------------------------------- cones, homology

RepComplex cone(const ProjComplex& source, const RepComplex& target, const ChainMap& f) {
    const QuiverPtr& q = source.cx.quiver;
    const Fp p = source.cx.p;
    RepComplex c{q, p, {}, {}};
    std::vector<int> degrees;
    for (const auto& [d, t] : source.cx.terms) degrees.push_back(d - 1);
    for (const auto& [d, t] : target.terms) degrees.push_back(d);
    for (int d : degrees) c.terms.emplace(d, direct_sum(source.cx.term(d + 1), target.term(d)));
    for (const auto& [d, t] : c.terms) {
        if (!c.terms.count(d + 1)) continue;
        const Rep& nxt = c.terms.at(d + 1);
        Rep x1 = source.cx.term(d + 1), x2 = source.cx.term(d + 2), y0 = target.term(d), y1 = target.term(d + 1);
        Intertwiner dx = source.cx.differential(d + 1);
        Intertwiner dy = target.differential(d);
        auto fit = f.comps.find(d + 1);
        Intertwiner fm = fit != f.comps.end() ? fit->second : zero_map(x1, y1);
        Intertwiner dc;
        for (VertexId w = 0; w < q->num_vertices(); ++w) {
            FpMatrix m(nxt.dim(w), t.dim(w), p);
            for (std::size_t r = 0; r < x2.dim(w); ++r)
                for (std::size_t s = 0; s < x1.dim(w); ++s) m.at(r, s) = (p - dx.comps[w](r, s)) % p;
            for (std::size_t r = 0; r < y1.dim(w); ++r) {
                for (std::size_t s = 0; s < x1.dim(w); ++s) m.at(x2.dim(w) + r, s) = fm.comps[w](r, s);
                for (std::size_t s = 0; s < y0.dim(w); ++s) m.at(x2.dim(w) + r, x1.dim(w) + s) = dy.comps[w](r, s);
            }
            dc.comps.push_back(std::move(m));
        }
        c.diffs.emplace(d, std::move(dc));
    }
    return c;
}

std::map<int, std::vector<std::size_t>> homology_dims(const RepComplex& c) {
    std::map<int, std::vector<std::size_t>> out;
    const std::size_t nv = c.quiver->num_vertices();
    std::map<int, std::vector<std::size_t>> ranks;
    for (const auto& [d, t] : c.terms) {
        auto it = c.diffs.find(d);
        std::vector<std::size_t> rk(nv, 0);
        if (it != c.diffs.end())
            for (VertexId w = 0; w < nv; ++w) rk[w] = rank(it->second.comps[w]);
        ranks.emplace(d, rk);
    }
    for (const auto& [d, t] : c.terms) {
        std::vector<std::size_t> h(nv, 0);
        bool any = false;
        auto prev = ranks.find(d - 1);
        for (VertexId w = 0; w < nv; ++w) {
            std::size_t in = prev != ranks.end() ? prev->second[w] : 0;
            h[w] = t.dim(w) - ranks.at(d)[w] - in;
            any = any || h[w];
        }
        if (any) out.emplace(d, h);
    }
    return out;
}

std::map<int, Rep> homology(const RepComplex& c) {
    const Quiver& q = *c.quiver;
    const Fp p = c.p;
    std::map<int, Rep> out;
    for (const auto& [d, t] : c.terms) {
        Intertwiner dout = c.differential(d);
        Intertwiner din = c.differential(d - 1);
        std::vector<std::vector<FpVec>> img(q.num_vertices()), hb(q.num_vertices());
        std::vector<std::size_t> dims(q.num_vertices());
        bool any = false;
        for (VertexId w = 0; w < q.num_vertices(); ++w) {
            auto ker = kernel_basis(dout.comps[w]);
            std::vector<FpVec> cols;
            for (std::size_t j = 0; j < din.comps[w].cols(); ++j) cols.push_back(din.comps[w].column(j));
            img[w] = row_space_basis(cols, t.dim(w), p);
            for (auto i : extend_basis(img[w], ker, t.dim(w), p)) hb[w].push_back(ker[i]);
            dims[w] = hb[w].size();
            any = any || dims[w];
        }
        if (!any) continue;
        std::vector<FpMatrix> maps;
        for (ArrowId a = 0; a < q.num_arrows(); ++a) {
            const auto& arr = q.arrow(a);
            FpMatrix m(dims[arr.dst], dims[arr.src], p);
            if (m.rows() && m.cols()) {
                std::vector<FpVec> cols = img[arr.dst];
                cols.insert(cols.end(), hb[arr.dst].begin(), hb[arr.dst].end());
                FpMatrix basis = FpMatrix::from_columns(cols, t.dim(arr.dst), p);
                for (std::size_t j = 0; j < hb[arr.src].size(); ++j) {
                    auto sol = solve(basis, t.map(a) * hb[arr.src][j]);
                    if (!sol) throw std::logic_error("arrow does not preserve cycles");
                    for (std::size_t r = 0; r < dims[arr.dst]; ++r) m.at(r, j) = (*sol)[img[arr.dst].size() + r];
                }
            }
            maps.push_back(std::move(m));
        }
        out.emplace(d, Rep(c.quiver, p, dims, maps));
    }
    return out;
}

DerivedObject canonical_form(const RepComplex& c) {
    DerivedObject x(c.quiver, c.p);
    for (const auto& [d, h] : homology(c)) x.add(-d, h);
    return x;
}

bool is_quasi_iso(const ProjComplex& source, const RepComplex& target, const ChainMap& f) {
    return homology_dims(cone(source, target, f)).empty();
}

std::map<int, std::size_t> ext_dims(const DerivedObject& x, const DerivedObject& y, int lo, int hi) {
    ProjComplex px = projective_complex(x);
    std::map<int, std::size_t> out;
    for (int n = lo; n <= hi; ++n) out[n] = derived_hom_basis(px, stalk_complex(y.shifted(n))).dim();
    return out;
}

std::size_t derived_hom_dim_by_modules(const DerivedObject& x, const DerivedObject& y) {
    const Quiver& q = *x.quiver();
    long long total = 0;
    for (const auto& [a, m] : x.parts()) {
        for (const auto& [b, nmod] : y.parts()) {
            if (b != a && b != a + 1) continue;
            long long hom = static_cast<long long>(hom_space(m, nmod).size());
            total += b == a ? hom : hom - q.euler_form(m.dim_vector(), nmod.dim_vector());
        }
    }
    return static_cast<std::size_t>(total);
}

std::uint64_t aut_count(const DerivedObject& x, std::uint64_t cap) {
    ProjComplex px = projective_complex(x);
    RepComplex sx = stalk_complex(x);
    DerivedHom end = derived_hom_basis(px, sx);
    std::uint64_t count = 0;
    enumerate_coefficients(end.dim(), x.prime(), cap, [&](const FpVec& c) {
        if (is_quasi_iso(px, sx, end.combination(c, x.prime()))) ++count;
    });
    return count;
}

}  // namespace dhall
