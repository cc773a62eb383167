#include "dhall/rep.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "dhall/errors.hpp"

namespace dhall {

Rep::Rep(QuiverPtr quiver, Fp p, std::vector<std::size_t> dims, std::vector<FpMatrix> maps)
    : quiver_(std::move(quiver)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!quiver_) throw InputError("representation without quiver");
    if (dims_.size() != quiver_->num_vertices()) throw DimensionMismatch("one dimension per vertex expected");
    if (maps_.size() != quiver_->num_arrows()) throw DimensionMismatch("one matrix per arrow expected");
    for (ArrowId a = 0; a < maps_.size(); ++a) {
        const auto& arr = quiver_->arrow(a);
        if (maps_[a].rows() != dims_[arr.dst] || maps_[a].cols() != dims_[arr.src])
            throw DimensionMismatch("arrow matrix " + std::to_string(a) + " has the wrong shape");
        if (maps_[a].prime() != p_) throw ContextMismatch("arrow matrix over a different field");
    }
}

Rep Rep::zero(QuiverPtr quiver, Fp p) {
    std::vector<std::size_t> dims(quiver->num_vertices(), 0);
    std::vector<FpMatrix> maps;
    for (std::size_t a = 0; a < quiver->num_arrows(); ++a) maps.emplace_back(0, 0, p);
    return Rep(std::move(quiver), p, dims, maps);
}

Rep Rep::simple(QuiverPtr quiver, Fp p, VertexId v) {
    std::vector<std::size_t> dims(quiver->num_vertices(), 0);
    dims.at(v) = 1;
    std::vector<FpMatrix> maps;
    for (const auto& a : quiver->arrows()) maps.emplace_back(dims[a.dst], dims[a.src], p);
    return Rep(std::move(quiver), p, dims, maps);
}

DimVector Rep::dim_vector() const { return DimVector(dims_.begin(), dims_.end()); }

std::size_t Rep::total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
}

FpMatrix Rep::path_action(const Path& path) const {
    FpMatrix m = FpMatrix::identity(dims_.at(path.start), p_);
    for (ArrowId a : path.arrows) m = maps_.at(a) * m;
    return m;
}

std::string Rep::exact_key() const {
    std::string key;
    for (auto d : dims_) key += std::to_string(d) + ",";
    key += "|";
    for (const auto& m : maps_)
        key.append(reinterpret_cast<const char*>(m.raw().data()), m.raw().size() * sizeof(Fp));
    return key;
}

bool same_context(const Rep& a, const Rep& b) {
    return a.prime() == b.prime() && (a.quiver() == b.quiver() || *a.quiver() == *b.quiver());
}

void require_same_context(const Rep& a, const Rep& b) {
    if (!same_context(a, b)) throw ContextMismatch("representations over different quivers or fields");
}

bool is_intertwiner(const Rep& x, const Rep& y, const Intertwiner& f) {
    const Quiver& q = *x.quiver();
    if (f.comps.size() != q.num_vertices()) return false;
    for (VertexId v = 0; v < q.num_vertices(); ++v)
        if (f.comps[v].rows() != y.dim(v) || f.comps[v].cols() != x.dim(v)) return false;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrow(a);
        if (f.comps[arr.dst] * x.map(a) != y.map(a) * f.comps[arr.src]) return false;
    }
    return true;
}

Intertwiner compose(const Intertwiner& g, const Intertwiner& f) {
    if (g.comps.size() != f.comps.size()) throw DimensionMismatch("composing maps over different quivers");
    Intertwiner r;
    for (std::size_t v = 0; v < f.comps.size(); ++v) r.comps.push_back(g.comps[v] * f.comps[v]);
    return r;
}

Intertwiner zero_map(const Rep& x, const Rep& y) {
    Intertwiner r;
    for (VertexId v = 0; v < x.dims().size(); ++v) r.comps.emplace_back(y.dim(v), x.dim(v), x.prime());
    return r;
}

Intertwiner identity_map(const Rep& x) {
    Intertwiner r;
    for (auto d : x.dims()) r.comps.push_back(FpMatrix::identity(d, x.prime()));
    return r;
}

Intertwiner linear_combination(const std::vector<Intertwiner>& basis, const FpVec& coeffs, Fp p) {
    if (basis.empty()) throw InputError("linear combination of an empty basis needs explicit shapes");
    Intertwiner r;
    for (const auto& c : basis[0].comps) r.comps.emplace_back(c.rows(), c.cols(), p);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!coeffs[i]) continue;
        for (std::size_t v = 0; v < r.comps.size(); ++v) r.comps[v] = r.comps[v] + basis[i].comps[v].scaled(coeffs[i]);
    }
    return r;
}

bool is_iso(const Intertwiner& f) {
    for (const auto& c : f.comps)
        if (!is_invertible(c)) return false;
    return true;
}

std::vector<Intertwiner> hom_space(const Rep& x, const Rep& y) {
    require_same_context(x, y);
    const Quiver& q = *x.quiver();
    const Fp p = x.prime();
    std::vector<std::size_t> off(q.num_vertices() + 1, 0);
    for (VertexId v = 0; v < q.num_vertices(); ++v) off[v + 1] = off[v] + y.dim(v) * x.dim(v);
    const std::size_t nvars = off.back();
    auto var = [&](VertexId v, std::size_t r, std::size_t c) { return off[v] + r * x.dim(v) + c; };

    std::size_t neq = 0;
    for (const auto& a : q.arrows()) neq += y.dim(a.dst) * x.dim(a.src);
    FpMatrix eq(neq, nvars, p);
    std::size_t row = 0;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrow(a);
        const FpMatrix& xa = x.map(a);
        const FpMatrix& ya = y.map(a);
        for (std::size_t r = 0; r < y.dim(arr.dst); ++r) {
            for (std::size_t c = 0; c < x.dim(arr.src); ++c, ++row) {
                // (phi_dst * X_a)[r,c] - (Y_a * phi_src)[r,c]
                for (std::size_t k = 0; k < x.dim(arr.dst); ++k)
                    if (xa(k, c)) eq.at(row, var(arr.dst, r, k)) = (eq(row, var(arr.dst, r, k)) + xa(k, c)) % p;
                for (std::size_t k = 0; k < y.dim(arr.src); ++k)
                    if (ya(r, k)) eq.at(row, var(arr.src, k, c)) = (eq(row, var(arr.src, k, c)) + p - ya(r, k)) % p;
            }
        }
    }
    std::vector<Intertwiner> basis;
    for (const auto& sol : kernel_basis(eq)) {
        Intertwiner f;
        for (VertexId v = 0; v < q.num_vertices(); ++v) {
            FpMatrix m(y.dim(v), x.dim(v), p);
            for (std::size_t r = 0; r < y.dim(v); ++r)
                for (std::size_t c = 0; c < x.dim(v); ++c) m.at(r, c) = sol[var(v, r, c)];
            f.comps.push_back(std::move(m));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

Rep direct_sum(const Rep& x, const Rep& y) {
    require_same_context(x, y);
    const Quiver& q = *x.quiver();
    std::vector<std::size_t> dims(q.num_vertices());
    for (VertexId v = 0; v < dims.size(); ++v) dims[v] = x.dim(v) + y.dim(v);
    std::vector<FpMatrix> maps;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrow(a);
        FpMatrix m(dims[arr.dst], dims[arr.src], x.prime());
        for (std::size_t r = 0; r < x.dim(arr.dst); ++r)
            for (std::size_t c = 0; c < x.dim(arr.src); ++c) m.at(r, c) = x.map(a)(r, c);
        for (std::size_t r = 0; r < y.dim(arr.dst); ++r)
            for (std::size_t c = 0; c < y.dim(arr.src); ++c)
                m.at(x.dim(arr.dst) + r, x.dim(arr.src) + c) = y.map(a)(r, c);
        maps.push_back(std::move(m));
    }
    return Rep(x.quiver(), x.prime(), dims, maps);
}

ProjSum proj_sum(const QuiverPtr& quiver, Fp p, const std::vector<VertexId>& gens) {
    const Quiver& q = *quiver;
    const std::size_t nv = q.num_vertices();
    ProjSum out;
    out.gens = gens;
    std::vector<std::size_t> dims(nv, 0);
    // per generator: paths, and for each path its (end vertex, local index)
    std::vector<std::vector<Path>> paths;
    for (VertexId g : gens) {
        paths.push_back(q.paths_from(g));
        std::vector<std::size_t> off(nv);
        for (VertexId w = 0; w < nv; ++w) off[w] = dims[w];
        for (const auto& path : paths.back()) ++dims[path.end];
        out.offset.push_back(off);
    }
    std::vector<FpMatrix> maps;
    for (const auto& arr : q.arrows()) maps.emplace_back(dims[arr.dst], dims[arr.src], p);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<std::size_t> local(nv, 0);
        std::map<std::vector<ArrowId>, std::size_t> index;  // arrow sequence -> basis index at its end
        for (const auto& path : paths[k]) index[path.arrows] = out.offset[k][path.end] + local[path.end]++;
        for (const auto& path : paths[k]) {
            for (ArrowId a = 0; a < q.num_arrows(); ++a) {
                if (q.arrow(a).src != path.end) continue;
                auto ext = path.arrows;
                ext.push_back(a);
                maps[a].at(index.at(ext), index.at(path.arrows)) = 1;
            }
        }
    }
    out.rep = Rep(quiver, p, dims, maps);
    return out;
}

Rep projective(const QuiverPtr& quiver, Fp p, VertexId v) { return proj_sum(quiver, p, {v}).rep; }

Intertwiner map_from_generators(const ProjSum& src, const Rep& dst, const std::vector<FpVec>& images) {
    const Quiver& q = *dst.quiver();
    const Fp p = dst.prime();
    if (images.size() != src.gens.size()) throw DimensionMismatch("one image per generator expected");
    Intertwiner f;
    for (VertexId w = 0; w < q.num_vertices(); ++w) f.comps.emplace_back(dst.dim(w), src.rep.dim(w), p);
    for (std::size_t k = 0; k < src.gens.size(); ++k) {
        if (images[k].size() != dst.dim(src.gens[k])) throw DimensionMismatch("generator image has wrong length");
        std::vector<std::size_t> local(q.num_vertices(), 0);
        for (const auto& path : q.paths_from(src.gens[k])) {
            FpVec img = dst.path_action(path) * images[k];
            std::size_t col = src.offset[k][path.end] + local[path.end]++;
            for (std::size_t r = 0; r < img.size(); ++r) f.comps[path.end].at(r, col) = img[r];
        }
    }
    return f;
}

std::vector<std::vector<FpVec>> radical_basis(const Rep& x) {
    const Quiver& q = *x.quiver();
    std::vector<std::vector<FpVec>> rad(q.num_vertices());
    for (VertexId w = 0; w < q.num_vertices(); ++w) {
        std::vector<FpVec> span;
        for (ArrowId a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(a).dst != w) continue;
            for (std::size_t c = 0; c < x.map(a).cols(); ++c) span.push_back(x.map(a).column(c));
        }
        rad[w] = row_space_basis(span, x.dim(w), x.prime());
    }
    return rad;
}

namespace {

std::vector<FpVec> unit_vectors(std::size_t n) {
    std::vector<FpVec> out;
    for (std::size_t i = 0; i < n; ++i) {
        FpVec e(n, 0);
        e[i] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<std::vector<FpVec>> top_generators(const Rep& x) {
    auto rad = radical_basis(x);
    std::vector<std::vector<FpVec>> tops(rad.size());
    for (VertexId w = 0; w < rad.size(); ++w) {
        auto units = unit_vectors(x.dim(w));
        for (auto i : extend_basis(rad[w], units, x.dim(w), x.prime())) tops[w].push_back(units[i]);
    }
    return tops;
}

Resolution standard_resolution(const Rep& x) {
    const QuiverPtr& qp = x.quiver();
    const Quiver& q = *qp;
    const Fp p = x.prime();
    std::vector<VertexId> g0, g1;
    std::vector<FpVec> eps_images;
    std::vector<std::size_t> first0(q.num_vertices());
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        first0[v] = g0.size();
        for (std::size_t b = 0; b < x.dim(v); ++b) {
            g0.push_back(v);
            FpVec e(x.dim(v), 0);
            e[b] = 1;
            eps_images.push_back(e);
        }
    }
    ProjSum p0 = proj_sum(qp, p, g0);
    std::vector<FpVec> d_images;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrow(a);
        for (std::size_t b = 0; b < x.dim(arr.src); ++b) {
            g1.push_back(arr.dst);
            // a * e_(src,b) - e_(dst, X_a b), both in P0 at vertex dst
            FpVec img(p0.rep.dim(arr.dst), 0);
            std::size_t k_src = first0[arr.src] + b;
            std::size_t local = 0;
            for (const auto& path : q.paths_from(arr.src)) {
                if (path.end != arr.dst) continue;
                if (path.arrows.size() == 1 && path.arrows[0] == a) img[p0.offset[k_src][arr.dst] + local] = 1;
                ++local;
            }
            FpVec xb(x.dim(arr.src), 0);
            xb[b] = 1;
            FpVec image = x.map(a) * xb;
            for (std::size_t c = 0; c < image.size(); ++c) {
                std::size_t k_dst = first0[arr.dst] + c;
                std::size_t idx = p0.offset[k_dst][arr.dst];
                img[idx] = (img[idx] + p - image[c]) % p;
            }
            d_images.push_back(std::move(img));
        }
    }
    ProjSum p1 = proj_sum(qp, p, g1);
    Resolution r{p1, p0, map_from_generators(p1, p0.rep, d_images), map_from_generators(p0, x, eps_images)};
    return r;
}

Resolution minimal_resolution(const Rep& x) {
    const QuiverPtr& qp = x.quiver();
    const Quiver& q = *qp;
    const Fp p = x.prime();
    auto tops = top_generators(x);
    std::vector<VertexId> g0;
    std::vector<FpVec> eps_images;
    for (VertexId w = 0; w < q.num_vertices(); ++w)
        for (const auto& v : tops[w]) {
            g0.push_back(w);
            eps_images.push_back(v);
        }
    ProjSum p0 = proj_sum(qp, p, g0);
    Intertwiner eps = map_from_generators(p0, x, eps_images);

    // Kernel of eps, vertex by vertex, then generators of its top.
    std::vector<std::vector<FpVec>> ker(q.num_vertices());
    for (VertexId w = 0; w < q.num_vertices(); ++w) ker[w] = kernel_basis(eps.comps[w]);
    std::vector<VertexId> g1;
    std::vector<FpVec> d_images;
    for (VertexId w = 0; w < q.num_vertices(); ++w) {
        std::vector<FpVec> rad;
        for (ArrowId a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(a).dst != w) continue;
            for (const auto& k : ker[q.arrow(a).src]) rad.push_back(p0.rep.map(a) * k);
        }
        for (auto i : extend_basis(rad, ker[w], p0.rep.dim(w), p)) {
            g1.push_back(w);
            d_images.push_back(ker[w][i]);
        }
    }
    ProjSum p1 = proj_sum(qp, p, g1);
    Intertwiner d = map_from_generators(p1, p0.rep, d_images);
    for (VertexId w = 0; w < q.num_vertices(); ++w)
        if (p1.rep.dim(w) != ker[w].size() || rank(d.comps[w]) != ker[w].size())
            throw std::logic_error("kernel of projective cover is not projective");
    return Resolution{p1, p0, d, eps};
}

std::vector<long long> fingerprint(const Rep& x) {
    const Quiver& q = *x.quiver();
    std::vector<long long> fp;
    for (auto d : x.dims()) fp.push_back(static_cast<long long>(d));
    std::vector<Path> paths;
    for (VertexId v = 0; v < q.num_vertices(); ++v)
        for (auto& path : q.paths_from(v))
            if (!path.arrows.empty()) paths.push_back(std::move(path));
    std::vector<FpMatrix> acts;
    for (const auto& path : paths) {
        acts.push_back(x.path_action(path));
        fp.push_back(static_cast<long long>(rank(acts.back())));
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const FpMatrix& a = acts[i];
            const FpMatrix& b = acts[j];
            if (paths[i].start == paths[j].start) {
                FpMatrix st(a.rows() + b.rows(), a.cols(), x.prime());
                for (std::size_t c = 0; c < a.cols(); ++c) {
                    for (std::size_t r = 0; r < a.rows(); ++r) st.at(r, c) = a(r, c);
                    for (std::size_t r = 0; r < b.rows(); ++r) st.at(a.rows() + r, c) = b(r, c);
                }
                fp.push_back(static_cast<long long>(rank(st)));
            }
            if (paths[i].end == paths[j].end) {
                FpMatrix cat(a.rows(), a.cols() + b.cols(), x.prime());
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    for (std::size_t c = 0; c < a.cols(); ++c) cat.at(r, c) = a(r, c);
                    for (std::size_t c = 0; c < b.cols(); ++c) cat.at(r, a.cols() + c) = b(r, c);
                }
                fp.push_back(static_cast<long long>(rank(cat)));
            }
        }
    }
    return fp;
}

bool is_isomorphic(const Rep& x, const Rep& y, std::uint64_t cap) {
    require_same_context(x, y);
    if (x.dims() != y.dims()) return false;
    if (x.exact_key() == y.exact_key()) return true;
    if (fingerprint(x) != fingerprint(y)) return false;
    auto basis = hom_space(x, y);
    if (basis.empty()) return x.is_zero();
    const Fp p = x.prime();
    std::mt19937_64 rng(0x5eedULL + basis.size());
    std::uniform_int_distribution<Fp> coef(0, p - 1);
    FpVec c(basis.size());
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& ci : c) ci = coef(rng);
        if (is_iso(linear_combination(basis, c, p))) return true;
    }
    return search_coefficients(basis.size(), p, cap,
                               [&](const FpVec& cc) { return is_iso(linear_combination(basis, cc, p)); });
}

std::vector<Rep> enumerate_reps(const QuiverPtr& quiver, Fp p, const std::vector<std::size_t>& dmax,
                                std::uint64_t cap) {
    const Quiver& q = *quiver;
    if (dmax.size() != q.num_vertices()) throw DimensionMismatch("dmax needs one entry per vertex");
    std::vector<Rep> classes;
    std::map<std::vector<long long>, std::vector<std::size_t>> buckets;
    std::vector<std::size_t> d(q.num_vertices(), 0);
    while (true) {
        std::size_t total = 0, entries = 0;
        for (auto x : d) total += x;
        for (const auto& a : q.arrows()) entries += d[a.dst] * d[a.src];
        if (total > 0) {
            enumerate_coefficients(entries, p, cap, [&](const FpVec& c) {
                std::vector<FpMatrix> maps;
                std::size_t pos = 0;
                for (const auto& a : q.arrows()) {
                    FpMatrix m(d[a.dst], d[a.src], p);
                    for (std::size_t r = 0; r < m.rows(); ++r)
                        for (std::size_t cc = 0; cc < m.cols(); ++cc) m.at(r, cc) = c[pos++];
                    maps.push_back(std::move(m));
                }
                Rep rep(quiver, p, d, maps);
                auto& bucket = buckets[fingerprint(rep)];
                for (auto idx : bucket)
                    if (is_isomorphic(classes[idx], rep, cap)) return;
                bucket.push_back(classes.size());
                classes.push_back(std::move(rep));
            });
        }
        std::size_t i = 0;
        while (i < d.size() && d[i] == dmax[i]) d[i++] = 0;
        if (i == d.size()) break;
        ++d[i];
    }
    return classes;
}

nlohmann::json rep_to_json(const Rep& x) {
    const Quiver& q = *x.quiver();
    nlohmann::json j;
    j["p"] = x.prime();
    j["dim"] = nlohmann::json::object();
    for (VertexId v = 0; v < q.num_vertices(); ++v) j["dim"][q.name(v)] = x.dim(v);
    j["maps"] = nlohmann::json::object();
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < x.map(a).rows(); ++r) rows.push_back(x.map(a).row(r));
        j["maps"][std::to_string(a)] = rows;
    }
    return j;
}

Rep rep_from_json(const QuiverPtr& quiver, const nlohmann::json& j) {
    const Quiver& q = *quiver;
    try {
        Fp p = j.at("p").get<Fp>();
        std::vector<std::size_t> dims(q.num_vertices(), 0);
        for (auto it = j.at("dim").begin(); it != j.at("dim").end(); ++it) dims[q.vertex(it.key())] = it.value().get<std::size_t>();
        std::vector<FpMatrix> maps;
        for (ArrowId a = 0; a < q.num_arrows(); ++a) {
            const auto& arr = q.arrow(a);
            FpMatrix m(dims[arr.dst], dims[arr.src], p);
            const auto key = std::to_string(a);
            if (j.at("maps").contains(key)) {
                const auto& rows = j.at("maps").at(key);
                if (rows.size() != m.rows()) throw DimensionMismatch("matrix for arrow " + key + " has wrong row count");
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (rows[r].size() != m.cols()) throw DimensionMismatch("matrix for arrow " + key + " has wrong column count");
                    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c].get<long long>());
                }
            } else if (m.rows() * m.cols() != 0) {
                throw InputError("missing matrix for arrow " + key);
            }
            maps.push_back(std::move(m));
        }
        return Rep(quiver, p, dims, maps);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed representation JSON: ") + e.what());
    }
}

}  // namespace dhall
