#include "dhall/freealg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dhall/errors.hpp"

namespace dhall {

// ---------------------------------------------------------------- expressions

std::string Generator::to_string() const {
    if (susp == 0) return name;
    return "s^" + std::to_string(susp) + "(" + name + ")";
}

FreeExpr FreeExpr::scalar(const QRat& c) {
    FreeExpr e;
    e.add_term({}, c);
    return e;
}

FreeExpr FreeExpr::gen(const std::string& name, int susp) { return gen(Generator{name, susp}); }

FreeExpr FreeExpr::gen(const Generator& g) {
    FreeExpr e;
    e.add_term({g}, QRat(Rat(1)));
    return e;
}

void FreeExpr::add_term(const Word& w, const QRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeExpr FreeExpr::operator+(const FreeExpr& o) const {
    FreeExpr r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreeExpr FreeExpr::operator-() const {
    FreeExpr r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreeExpr FreeExpr::operator-(const FreeExpr& o) const { return *this + (-o); }

FreeExpr FreeExpr::operator*(const FreeExpr& o) const {
    FreeExpr r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

FreeExpr FreeExpr::scaled(const QRat& c) const {
    FreeExpr r;
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    return r;
}

FreeExpr FreeExpr::suspended(int k) const {
    FreeExpr r;
    for (const auto& [w, c] : terms_) {
        Word s;
        for (const auto& g : w) s.push_back(g.suspended(k));
        r.add_term(s, c);
    }
    return r;
}

std::set<std::string> FreeExpr::generator_names() const {
    std::set<std::string> out;
    for (const auto& [w, c] : terms_)
        for (const auto& g : w) out.insert(g.name);
    return out;
}

std::string FreeExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string word;
        for (const auto& g : w) word += (word.empty() ? "" : "*") + g.to_string();
        if (w.empty()) {
            out << "(" << c.to_string() << ")";
        } else if (c == QRat(Rat(1))) {
            out << word;
        } else {
            out << "(" << c.to_string() << ")*" << word;
        }
    }
    return out.str();
}

FreeExpr qbracket(const FreeExpr& x, const FreeExpr& y, int k) {
    return x * y - (y * x).scaled(QRat::q_pow(k));
}

FreeExpr substitute(const FreeExpr& e, const std::string& name, const FreeExpr& replacement) {
    FreeExpr out;
    for (const auto& [w, c] : e.terms()) {
        FreeExpr term = FreeExpr::scalar(c);
        for (const auto& g : w)
            term = term * (g.name == name ? replacement.suspended(g.susp) : FreeExpr::gen(g));
        out = out + term;
    }
    return out;
}

QRat self_extension_constant() {
    return QRat(QPoly::monomial(-1), QPoly::monomial(2) - QPoly(Rat(1)));
}

// ---------------------------------------------------------------- presentations

std::string family_name(RelationFamily f) {
    switch (f) {
        case RelationFamily::R1: return "R1";
        case RelationFamily::R2: return "R2";
        case RelationFamily::G1: return "G1";
        case RelationFamily::G3: return "G3";
        case RelationFamily::K0: return "K0";
        case RelationFamily::K1: return "K1";
        case RelationFamily::K2: return "K2";
        case RelationFamily::DDP: return "DDP";
        case RelationFamily::NAIVE: return "NAIVE";
    }
    return "?";
}

bool Presentation::declares(const std::string& name) const {
    return std::find(generators.begin(), generators.end(), name) != generators.end();
}

void Presentation::add(RelationFamily family, FreeExpr lhs, FreeExpr rhs, std::string source) {
    relations.push_back({family, std::move(lhs), std::move(rhs), std::move(source)});
}

void Presentation::validate() const {
    for (const auto& r : relations)
        for (const auto& e : {r.lhs, r.rhs})
            for (const auto& name : e.generator_names())
                if (!declares(name)) throw UnknownGenerator("relation uses undeclared generator " + name);
}

nlohmann::json Presentation::to_json() const {
    nlohmann::json j;
    j["generators"] = generators;
    if (!boundary.empty()) j["boundary"] = boundary;
    j["relations"] = nlohmann::json::array();
    for (const auto& r : relations)
        j["relations"].push_back({{"tag", family_name(r.family)},
                                  {"lhs", r.lhs.to_string()},
                                  {"rhs", r.rhs.to_string()},
                                  {"source", r.source}});
    return j;
}

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

FreeExpr g(const std::string& name, int susp = 0) { return FreeExpr::gen(name, susp); }

FreeExpr commutator(const FreeExpr& x, const FreeExpr& y) { return qbracket(x, y, 0); }

// drop relations whose sides repeat an earlier one
void dedupe(Presentation& p) {
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<Relation> kept;
    for (auto& r : p.relations)
        if (seen.emplace(r.lhs.to_string(), r.rhs.to_string()).second) kept.push_back(std::move(r));
    p.relations = std::move(kept);
}

void add_commutations(Presentation& p, const std::string& x, const std::string& y, int window,
                      RelationFamily family, const std::string& source) {
    for (int l = -window; l <= window; ++l) p.add(family, commutator(g(x), g(y, l)), FreeExpr(), source);
}

}  // namespace

Presentation triangle_presentation(const std::array<std::string, 3>& names, const std::array<int, 3>& h,
                                   int window) {
    if (h[0] + h[1] + h[2] != 1) throw InvalidFoliation("triangle corner degrees must sum to 1");
    if (window < 0) throw InputError("window must be non-negative");
    Presentation p;
    p.generators.assign(names.begin(), names.end());
    p.boundary = p.generators;
    for (int i = 0; i < 3; ++i)
        for (int k = 1; k <= window + 1; ++k) {
            int e = k % 2 == 0 ? 2 : -2;
            FreeExpr rhs = k == 1 ? FreeExpr::scalar(self_extension_constant()) : FreeExpr();
            p.add(RelationFamily::R1, qbracket(g(names[i]), g(names[i], k), e), rhs,
                  "self-extension of " + names[i] + ", k=" + std::to_string(k));
        }
    for (int i = 0; i < 3; ++i) {
        const std::string& cur = names[i];
        const std::string& next = names[mod(i + 1, 3)];
        const std::string& third = names[mod(i + 2, 3)];
        for (int k = -window; k <= window + 1; ++k) {
            std::string source = "adjacent " + next + "," + cur + ", k=" + std::to_string(k);
            if (k >= 1) {
                int e = k % 2 == 0 ? -1 : 1;
                FreeExpr rhs = k == 1 ? g(third, 1 - h[mod(i + 1, 3)]) : FreeExpr();
                p.add(RelationFamily::R2, qbracket(g(next, k), g(cur, h[i]), e), rhs, source);
            } else {
                int e = k % 2 == 0 ? 1 : -1;
                p.add(RelationFamily::R2, qbracket(g(next, k), g(cur, h[i]), e), FreeExpr(), source);
            }
        }
    }
    return p;
}

Presentation triangle_presentation(const std::array<int, 3>& h, int window) {
    return triangle_presentation({"E1", "E2", "E3"}, h, window);
}

std::vector<int> fan_foliation(int m) {
    std::vector<int> h(static_cast<std::size_t>(m), 1);
    h[0] = 0;
    h[1] = 0;
    return h;
}

std::vector<int> regrading_offsets(const std::vector<int>& h) {
    auto fan = fan_foliation(static_cast<int>(h.size()));
    std::vector<int> a(h.size(), 0);
    for (std::size_t k = 1; k < h.size(); ++k) a[k] = a[k - 1] + h[k - 1] - fan[k - 1];
    return a;
}

std::set<std::pair<int, int>> gluing_near_pairs(int i, int j, int n1, int n2) {
    if (i < 1 || i > n1 || j < 1 || j > n2) throw IndexOutOfRange("gluing arc index out of range");
    auto wrap = [](int x, int n) { return mod(x - 1, n) + 1; };
    std::set<std::pair<int, int>> out;
    for (auto [di, dj] : std::vector<std::pair<int, int>>{{1, -1}, {0, -1}, {0, 1}, {-1, 0}, {-1, 1}, {1, 0}})
        out.emplace(wrap(i + di, n1), wrap(j + dj, n2));
    return out;
}

Presentation glue_presentations(const Presentation& a, const Presentation& b, int i, int j,
                                const std::set<std::pair<int, int>>& near, int window) {
    int n1 = static_cast<int>(a.boundary.size());
    int n2 = static_cast<int>(b.boundary.size());
    if (i < 1 || i > n1 || j < 1 || j > n2) throw IndexOutOfRange("gluing arc index out of range");
    Presentation out;
    out.generators = a.generators;
    for (const auto& name : b.generators)
        if (!out.declares(name)) out.generators.push_back(name);
    out.relations = a.relations;
    out.relations.insert(out.relations.end(), b.relations.begin(), b.relations.end());

    const std::string& ea = a.boundary[static_cast<std::size_t>(i - 1)];
    const std::string& fb = b.boundary[static_cast<std::size_t>(j - 1)];
    if (ea != fb)
        for (int s = -window; s <= window; ++s)
            out.add(RelationFamily::G1, g(fb, s), g(ea, s), "gluing " + ea + "=" + fb);
    for (int k = 1; k <= n1; ++k) {
        if (k == i) continue;
        for (int l = 1; l <= n2; ++l) {
            if (l == j || near.count({k, l})) continue;
            add_commutations(out, a.boundary[static_cast<std::size_t>(k - 1)],
                             b.boundary[static_cast<std::size_t>(l - 1)], window, RelationFamily::G3,
                             "far pair " + a.boundary[static_cast<std::size_t>(k - 1)] + "," +
                                 b.boundary[static_cast<std::size_t>(l - 1)]);
        }
    }
    for (int k = i + 1; k < i + n1; ++k) out.boundary.push_back(a.boundary[static_cast<std::size_t>(mod(k - 1, n1))]);
    for (int l = j + 1; l < j + n2; ++l) out.boundary.push_back(b.boundary[static_cast<std::size_t>(mod(l - 1, n2))]);
    return out;
}

Presentation disk_presentation(int m, const std::vector<int>& h, int window) {
    if (m < 3) throw InputError("a disk needs at least three boundary arcs");
    if (static_cast<int>(h.size()) != m) throw InvalidFoliation("need one corner degree per boundary arc");
    if (std::accumulate(h.begin(), h.end(), 0) != m - 2)
        throw InvalidFoliation("corner degrees must sum to m - 2");
    if (m == 3) return triangle_presentation({h[0], h[1], h[2]}, window);

    auto d = [](int k) { return "d" + std::to_string(k); };
    auto gg = [](int k) { return "g" + std::to_string(k); };
    Presentation p = triangle_presentation({d(1), d(2), gg(2)}, {0, 0, 1}, window);
    for (int k = 2; k <= m - 2; ++k) {
        Presentation t = triangle_presentation({d(k), d(k + 1), gg(k + 1)}, {0, 0, 1}, window);
        int i = static_cast<int>(std::find(p.boundary.begin(), p.boundary.end(), d(k)) - p.boundary.begin()) + 1;
        auto near = gluing_near_pairs(i, 1, static_cast<int>(p.boundary.size()), 3);
        p = glue_presentations(p, t, i, 1, near, window);
        // the glued arc is internal now; its key relation in t expresses it
        FreeExpr expr = qbracket(g(gg(k + 1), 1), g(d(k + 1)), 1);
        for (auto& r : p.relations) {
            r.lhs = substitute(r.lhs, d(k), expr);
            r.rhs = substitute(r.rhs, d(k), expr);
        }
        p.generators.erase(std::find(p.generators.begin(), p.generators.end(), d(k)));
    }
    // rotate so the boundary starts at d1, then rename to E1..Em with regrading
    auto start = std::find(p.boundary.begin(), p.boundary.end(), d(1));
    std::rotate(p.boundary.begin(), start, p.boundary.end());
    auto offsets = regrading_offsets(h);
    Presentation out;
    for (int k = 1; k <= m; ++k) out.generators.push_back("E" + std::to_string(k));
    out.boundary = out.generators;
    for (auto r : p.relations) {
        for (int k = 1; k <= m; ++k) {
            FreeExpr image = g("E" + std::to_string(k), -offsets[static_cast<std::size_t>(k - 1)]);
            r.lhs = substitute(r.lhs, p.boundary[static_cast<std::size_t>(k - 1)], image);
            r.rhs = substitute(r.rhs, p.boundary[static_cast<std::size_t>(k - 1)], image);
        }
        if (r.lhs == r.rhs) continue;
        out.relations.push_back(std::move(r));
    }
    dedupe(out);
    return out;
}

Presentation naive_annulus_presentation(int m, int n, int window) {
    if (m < 2 || n < 2)
        throw NotEnoughMarkedIntervals("the annulus needs at least two marked intervals on each boundary circle");
    auto P = [&](int i) { return i == 0 ? std::string("S") : i == m ? std::string("T") : "P" + std::to_string(i); };
    auto Q = [&](int j) { return j == 0 ? std::string("S") : j == n ? std::string("T") : "Q" + std::to_string(j); };
    auto E = [](int i) { return "E" + std::to_string(i); };
    auto F = [](int j) { return "F" + std::to_string(j); };

    Presentation p;
    p.generators = {"S", "T"};
    for (int i = 1; i < m; ++i) p.generators.push_back(P(i));
    for (int j = 1; j < n; ++j) p.generators.push_back(Q(j));
    for (int i = 1; i <= m; ++i) p.generators.push_back(E(i));
    for (int j = 1; j <= n; ++j) p.generators.push_back(F(j));

    auto add_disk = [&](const std::array<std::string, 3>& arcs) {
        auto t = triangle_presentation(arcs, {0, 0, 1}, window);
        for (auto& r : t.relations) r.source = "disk " + arcs[0] + "," + arcs[1] + "," + arcs[2] + ": " + r.source;
        p.relations.insert(p.relations.end(), t.relations.begin(), t.relations.end());
    };
    for (int j = 0; j < m; ++j) add_disk({P(j), P(j + 1), E(j + 1)});
    for (int i = 0; i < n; ++i) add_disk({Q(i), Q(i + 1), F(i + 1)});

    auto commute = [&](const std::string& x, const std::string& y, const std::string& why) {
        add_commutations(p, x, y, window, RelationFamily::NAIVE, why);
    };
    for (int k = 2; k < m; ++k) {
        commute("S", E(k), "S far from " + E(k));
        commute("T", E(k), "T far from " + E(k));
    }
    for (int k = 2; k < n; ++k) {
        commute("S", F(k), "S far from " + F(k));
        commute("T", F(k), "T far from " + F(k));
    }
    for (int i = 1; i < m; ++i) {
        for (int k = 1; k <= m; ++k)
            if (k != i && k != i + 1) commute(P(i), E(k), P(i) + " far from " + E(k));
        for (int k = 1; k <= n; ++k)
            if (k != 1 && k != n) commute(P(i), F(k), P(i) + " far from " + F(k));
        for (int k = 1; k < n; ++k) commute(P(i), Q(k), P(i) + " far from " + Q(k));
    }
    for (int i = 1; i < n; ++i) {
        for (int k = 1; k <= n; ++k)
            if (k != i && k != i + 1) commute(Q(i), F(k), Q(i) + " far from " + F(k));
        for (int k = 1; k <= m; ++k)
            if (k != 1 && k != m) commute(Q(i), E(k), Q(i) + " far from " + E(k));
    }
    // boundary arcs on one circle commute unless they share a marked interval
    auto cyclic_far = [](int i, int j, int len) {
        int d = mod(j - i, len);
        return d != 0 && d != 1 && d != len - 1;
    };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (cyclic_far(i, j, m)) commute(E(i), E(j), E(i) + " far from " + E(j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (cyclic_far(i, j, n)) commute(F(i), F(j), F(i) + " far from " + F(j));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) commute(E(i), F(j), E(i) + " far from " + F(j));
    dedupe(p);
    return p;
}

Presentation ddp_relations(int m, int n) {
    if (m < 2 || n < 2)
        throw NotEnoughMarkedIntervals("the annulus needs at least two marked intervals on each boundary circle");
    std::string pm = "P" + std::to_string(m - 1), qn = "Q" + std::to_string(n - 1);
    std::string em = "E" + std::to_string(m), fn = "F" + std::to_string(n);
    Presentation p;
    p.generators = {"T", "N", pm, qn, em, fn};
    auto add = [&](const FreeExpr& lhs, const FreeExpr& rhs, const std::string& disk) {
        p.add(RelationFamily::DDP, lhs, rhs, "disk " + disk);
    };
    // disks around T
    add(g("T"), qbracket(g(pm), g(em), 1), pm + "," + "T," + em);
    add(g(em), qbracket(g("T"), g(pm, -1), 1), pm + "," + "T," + em);
    add(g(pm), qbracket(g(em, 1), g("T"), 1), pm + "," + "T," + em);
    add(g("T"), qbracket(g(qn), g(fn), 1), qn + "," + "T," + fn);
    add(g(fn), qbracket(g("T"), g(qn, -1), 1), qn + "," + "T," + fn);
    add(g(qn), qbracket(g(fn, 1), g("T"), 1), qn + "," + "T," + fn);
    // disks around N
    add(g(em), qbracket(g(qn), g("N"), 1), qn + "," + em + ",N");
    add(g("N"), qbracket(g(em), g(qn, -1), 1), qn + "," + em + ",N");
    add(g(qn), qbracket(g("N", 1), g(em), 1), qn + "," + em + ",N");
    add(g(fn), qbracket(g(pm), g("N"), 1), pm + "," + fn + ",N");
    add(g("N"), qbracket(g(fn), g(pm, -1), 1), pm + "," + fn + ",N");
    add(g(pm), qbracket(g("N", 1), g(fn), 1), pm + "," + fn + ",N");
    return p;
}

Presentation k_presentation(const Quiver& quiver, int window) {
    if (window < 0) throw InputError("window must be non-negative");
    Presentation p;
    p.generators = quiver.names();
    QRat c = self_extension_constant();
    for (VertexId i = 0; i < quiver.num_vertices(); ++i) {
        const std::string& zi = quiver.name(i);
        for (VertexId j = 0; j < quiver.num_vertices(); ++j) {
            const std::string& zj = quiver.name(j);
            long long pairing = quiver.symmetrized(i, j);
            if (i == j) {
                for (int k = 1; k <= window + 1; ++k)
                    p.add(RelationFamily::K2, qbracket(g(zi), g(zi, k), k % 2 == 0 ? 2 : -2),
                          k == 1 ? FreeExpr::scalar(c) : FreeExpr(), zi + " with itself, k=" + std::to_string(k));
            } else if (pairing == 0) {
                if (i > j) continue;
                for (int k = -window; k <= window; ++k)
                    p.add(RelationFamily::K0, commutator(g(zi), g(zj, k)), FreeExpr(),
                          zi + "," + zj + " orthogonal, k=" + std::to_string(k));
            } else if (pairing == -1) {
                for (int sign : {1, -1})
                    p.add(RelationFamily::K1, qbracket(g(zi), qbracket(g(zi), g(zj), -sign), sign), FreeExpr(),
                          zi + "," + zj + " cubic");
                for (int k = 1; k <= window + 1; ++k)
                    p.add(RelationFamily::K1, qbracket(g(zi), g(zj, k), k % 2 == 0 ? -1 : 1), FreeExpr(),
                          zi + "," + zj + " adjacent, k=" + std::to_string(k));
            } else {
                throw NotImplemented("symmetrized pairing outside {0, -1, 2}");
            }
        }
    }
    return p;
}

// ---------------------------------------------------------------- evaluation

void HallAssignment::set(const std::string& name, const HallElement& image) {
    if (image.context() != ctx_) throw ContextMismatch("assignment image lives in another Hall context");
    base_[name] = image;
    for (auto it = cache_.begin(); it != cache_.end();)
        it = it->first.name == name ? cache_.erase(it) : std::next(it);
}

const HallElement& HallAssignment::image(const Generator& gen) {
    auto it = cache_.find(gen);
    if (it != cache_.end()) return it->second;
    auto b = base_.find(gen.name);
    if (b == base_.end()) throw UnassignedGenerator("no image for generator " + gen.name);
    return cache_.emplace(gen, ctx_->suspend(b->second, gen.susp)).first->second;
}

void assign_disk(HallAssignment& assign, const std::vector<int>& h) {
    HallContext& ctx = assign.context();
    const int m = static_cast<int>(h.size());
    if (m < 3) throw InvalidParams("a disk needs at least three boundary arcs");
    if (!(*ctx.quiver() == linear_quiver(static_cast<std::size_t>(m - 1)).opposite()))
        throw ContextMismatch("disk assignment needs the opposite linear quiver on m - 1 vertices");
    auto offsets = regrading_offsets(h);
    std::vector<HallElement> z;
    for (int k = 0; k < m - 1; ++k) z.push_back(ctx.simple_class(static_cast<VertexId>(k)));
    HallElement fan = z[0];
    for (int k = 1; k < m - 1; ++k) fan = ctx.qbracket(fan, z[k], 1);
    std::vector<HallElement> arcs{z[0], fan};
    for (int k = 3; k <= m; ++k) arcs.push_back(z[m + 1 - k]);
    for (int k = 0; k < m; ++k) assign.set("E" + std::to_string(k + 1), ctx.suspend(arcs[k], offsets[k]));
}

HallElement evaluate(const FreeExpr& e, HallAssignment& assign) {
    HallContext& ctx = assign.context();
    const long s = ctx.sqrt_context();
    // words arrive in lexicographic order, so consecutive words share prefixes
    std::vector<HallElement> prefix{ctx.unit()};
    Word last;
    HallElement out = ctx.zero();
    for (const auto& [w, c] : e.terms()) {
        std::size_t common = 0;
        while (common < w.size() && common < last.size() && w[common] == last[common]) ++common;
        prefix.resize(common + 1);
        for (std::size_t k = common; k < w.size(); ++k) prefix.push_back(prefix.back() * assign.image(w[k]));
        last = w;
        out = out + prefix.back().scaled(qrat_eval(c, s));
    }
    return out;
}

bool RelationReport::all_passed() const { return failures() == 0; }

std::size_t RelationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.passed; }));
}

nlohmann::json RelationReport::to_json() const {
    nlohmann::json j;
    j["checked"] = checks.size();
    j["failed"] = failures();
    j["failures"] = nlohmann::json::array();
    for (const auto& c : checks)
        if (!c.passed)
            j["failures"].push_back({{"relation", c.index},
                                     {"tag", family_name(c.family)},
                                     {"source", c.source},
                                     {"shift", c.shift},
                                     {"residual", c.residual}});
    return j;
}

RelationReport check_relations(const Presentation& pres, HallAssignment& assign, int window) {
    if (window < 0) throw InputError("window must be non-negative");
    pres.validate();
    RelationReport report;
    for (std::size_t idx = 0; idx < pres.relations.size(); ++idx) {
        const Relation& r = pres.relations[idx];
        FreeExpr diff = r.lhs - r.rhs;
        for (int s = -window; s <= window; ++s) {
            HallElement value = evaluate(diff.suspended(s), assign);
            report.checks.push_back({idx, r.family, r.source, s, value.is_zero(), value.to_string()});
        }
    }
    return report;
}

}  // namespace dhall
