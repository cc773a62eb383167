#include "dhall/surface.hpp"

#include <algorithm>
#include <functional>

#include "dhall/errors.hpp"

namespace dhall {

// ---------------------------------------------------------------- ribbon graphs

std::size_t RibbonGraph::edge_of(HalfEdge h) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (std::find(edges[e].begin(), edges[e].end(), h) != edges[e].end()) return e;
    throw InputError("half-edge " + std::to_string(h) + " is in no edge");
}

std::size_t RibbonGraph::vertex_of(HalfEdge h) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (std::find(vertices[v].begin(), vertices[v].end(), h) != vertices[v].end()) return v;
    throw InputError("half-edge " + std::to_string(h) + " is in no vertex");
}

HalfEdge RibbonGraph::next(HalfEdge h) const {
    const auto& cyc = vertices[vertex_of(h)];
    auto it = std::find(cyc.begin(), cyc.end(), h);
    return ++it == cyc.end() ? cyc.front() : *it;
}

HalfEdge RibbonGraph::prev(HalfEdge h) const {
    const auto& cyc = vertices[vertex_of(h)];
    auto it = std::find(cyc.begin(), cyc.end(), h);
    return it == cyc.begin() ? cyc.back() : *--it;
}

std::optional<HalfEdge> RibbonGraph::partner(HalfEdge h) const {
    const auto& e = edges[edge_of(h)];
    if (e.size() == 1) return std::nullopt;
    return e[0] == h ? e[1] : e[0];
}

std::size_t RibbonGraph::edge_named(const std::string& name) const {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw InputError("no edge named " + name);
    return static_cast<std::size_t>(it - labels.begin());
}

HalfEdge RibbonGraph::half_edge_at(std::size_t vertex, const std::string& name) const {
    for (HalfEdge h : vertices.at(vertex))
        if (label_of(h) == name) return h;
    throw InputError("vertex " + std::to_string(vertex) + " has no half-edge on " + name);
}

void RibbonGraph::validate() const {
    std::set<HalfEdge> all(half_edges.begin(), half_edges.end());
    if (all.size() != half_edges.size()) throw InputError("repeated half-edge id");
    if (labels.size() != edges.size()) throw InputError("need one label per edge");
    auto check_partition = [&](const std::vector<std::vector<HalfEdge>>& blocks, const char* what) {
        std::multiset<HalfEdge> seen;
        for (const auto& b : blocks) seen.insert(b.begin(), b.end());
        if (seen.size() != all.size() || std::set<HalfEdge>(seen.begin(), seen.end()) != all)
            throw InputError(std::string(what) + " do not partition the half-edges");
    };
    check_partition(edges, "edges");
    check_partition(vertices, "vertices");
    for (const auto& e : edges)
        if (e.size() != 1 && e.size() != 2) throw InputError("edges have one or two half-edges");
    for (const auto& v : vertices)
        if (v.size() < 3) throw InputError("vertices need valence at least three");
}

bool validate_foliation(const RibbonGraph& g, const Foliation& f) {
    for (const auto& v : g.vertices) {
        long long sum = 0;
        for (HalfEdge h : v) {
            auto it = f.find(h);
            if (it == f.end()) return false;
            sum += it->second;
        }
        if (sum != static_cast<long long>(v.size()) - 2) return false;
    }
    return true;
}

Collapsed collapse_edge(const RibbonGraph& g, const Foliation& f, std::size_t edge) {
    if (edge >= g.edges.size()) throw IndexOutOfRange("no such edge");
    if (!g.is_internal(edge)) throw NotInternal("edge " + g.labels[edge] + " is a boundary edge");
    HalfEdge hi = g.edges[edge][0], hj = g.edges[edge][1];
    std::size_t v = g.vertex_of(hi), w = g.vertex_of(hj);
    if (v == w) throw LoopEdge("edge " + g.labels[edge] + " joins a vertex to itself");

    HalfEdge before_i = g.prev(hi), before_j = g.prev(hj);
    std::vector<HalfEdge> merged;
    for (HalfEdge h = g.next(hi); h != hi; h = g.next(h)) merged.push_back(h);
    for (HalfEdge h = g.next(hj); h != hj; h = g.next(h)) merged.push_back(h);

    Collapsed out;
    out.graph = g;
    auto& r = out.graph;
    r.half_edges.erase(std::remove_if(r.half_edges.begin(), r.half_edges.end(),
                                      [&](HalfEdge h) { return h == hi || h == hj; }),
                       r.half_edges.end());
    r.edges.erase(r.edges.begin() + static_cast<long>(edge));
    r.labels.erase(r.labels.begin() + static_cast<long>(edge));
    r.vertices[std::min(v, w)] = merged;
    r.vertices.erase(r.vertices.begin() + static_cast<long>(std::max(v, w)));

    out.foliation = f;
    out.foliation[before_i] = f.at(before_i) + f.at(hj);
    out.foliation[before_j] = f.at(before_j) + f.at(hi);
    out.foliation.erase(hi);
    out.foliation.erase(hj);
    return out;
}

std::vector<std::vector<HalfEdge>> marked_intervals(const RibbonGraph& g) {
    std::vector<std::vector<HalfEdge>> out;
    for (HalfEdge start : g.half_edges) {
        if (g.partner(start)) continue;
        std::vector<HalfEdge> chain;
        HalfEdge cur = start;
        while (true) {
            chain.push_back(cur);
            if (chain.size() > g.half_edges.size()) throw InputError("marked interval does not terminate");
            auto across = g.partner(g.next(cur));
            if (!across) break;
            cur = *across;
        }
        out.push_back(chain);
    }
    return out;
}

namespace {

// arcs met along an interval: the start of each corner, then the final end
std::vector<std::string> interval_arcs(const RibbonGraph& g, const std::vector<HalfEdge>& chain) {
    std::vector<std::string> arcs;
    for (HalfEdge h : chain) arcs.push_back(g.label_of(h));
    arcs.push_back(g.label_of(g.next(chain.back())));
    return arcs;
}

}  // namespace

FukayaData fukaya_data(const RibbonGraph& g, const Foliation& f) {
    if (!validate_foliation(g, f)) throw InvalidFoliation("foliation data violates the vertex condition");
    FukayaData out;
    out.objects = g.labels;
    auto intervals = marked_intervals(g);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
    std::map<HalfEdge, std::size_t> corner_path;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        const auto& chain = intervals[k];
        auto arcs = interval_arcs(g, chain);
        for (std::size_t a = 0; a < chain.size(); ++a) {
            int degree = 0;
            for (std::size_t b = a; b < chain.size(); ++b) {
                degree += f.at(chain[b]);
                index[{k, a, b}] = out.paths.size();
                if (a == b) corner_path[chain[a]] = out.paths.size();
                out.paths.push_back({k, a, b, arcs[a], arcs[b + 1], degree});
            }
        }
    }
    for (std::size_t i = 0; i < out.paths.size(); ++i)
        for (std::size_t j = 0; j < out.paths.size(); ++j) {
            const auto& a = out.paths[i];
            const auto& b = out.paths[j];
            if (a.interval != b.interval || b.first != a.last + 1) continue;
            int sign = a.degree % 2 == 0 ? 1 : -1;
            out.compositions.push_back({i, j, index.at({a.interval, a.first, b.last}), sign});
        }
    for (const auto& v : g.vertices) {
        std::vector<std::size_t> seq;
        for (HalfEdge h : v) seq.push_back(corner_path.at(h));
        out.disk_sequences.push_back(seq);
    }
    return out;
}

nlohmann::json FukayaData::to_json() const {
    nlohmann::json j;
    j["objects"] = objects;
    j["paths"] = nlohmann::json::array();
    for (const auto& p : paths)
        j["paths"].push_back({{"interval", p.interval},
                              {"corners", {p.first, p.last}},
                              {"from", p.from},
                              {"to", p.to},
                              {"degree", p.degree}});
    j["compositions"] = nlohmann::json::array();
    for (const auto& c : compositions)
        j["compositions"].push_back({{"a", c.right}, {"b", c.left}, {"result", c.result}, {"sign", c.sign}});
    j["disk_sequences"] = disk_sequences;
    return j;
}

bool is_balanced(const RibbonGraph& g, const Foliation& f) {
    if (!validate_foliation(g, f)) throw InvalidFoliation("foliation data violates the vertex condition");
    std::map<std::pair<std::string, std::string>, std::set<int>> degrees;
    for (const auto& p : fukaya_data(g, f).paths) degrees[{p.from, p.to}].insert(p.degree);
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

std::set<std::pair<std::string, std::string>> far_arc_pairs(const RibbonGraph& g) {
    std::vector<std::set<std::string>> groups;
    for (const auto& v : g.vertices) {
        std::set<std::string> s;
        for (HalfEdge h : v) s.insert(g.label_of(h));
        groups.push_back(s);
    }
    for (const auto& chain : marked_intervals(g)) {
        auto arcs = interval_arcs(g, chain);
        groups.emplace_back(arcs.begin(), arcs.end());
    }
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& x : g.labels)
        for (const auto& y : g.labels) {
            if (!(x < y)) continue;
            bool near = std::any_of(groups.begin(), groups.end(),
                                    [&](const auto& s) { return s.count(x) && s.count(y); });
            if (!near) out.emplace(x, y);
        }
    return out;
}

bool enough_marked_intervals(const RibbonGraph& g) {
    std::map<HalfEdge, std::size_t> interval_of;
    auto intervals = marked_intervals(g);
    for (std::size_t k = 0; k < intervals.size(); ++k)
        for (HalfEdge h : intervals[k]) interval_of[h] = k;
    for (const auto& v : g.vertices) {
        std::set<std::size_t> seen;
        for (HalfEdge h : v) {
            auto it = interval_of.find(h);
            // a corner on an unmarked boundary circle meets no interval
            if (it == interval_of.end() || !seen.insert(it->second).second) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- annuli

namespace {

std::string p_arc(int i, int m) { return i == 0 ? "S" : i == m ? "T" : "P" + std::to_string(i); }
std::string q_arc(int j, int n) { return j == 0 ? "S" : j == n ? "T" : "Q" + std::to_string(j); }

RibbonGraph graph_from_disks(const std::vector<std::vector<std::string>>& disks,
                             const std::vector<std::string>& edge_order) {
    RibbonGraph g;
    std::map<std::string, std::vector<HalfEdge>> by_label;
    HalfEdge next_id = 0;
    for (const auto& disk : disks) {
        std::vector<HalfEdge> cyc;
        for (const auto& arc : disk) {
            g.half_edges.push_back(next_id);
            by_label[arc].push_back(next_id);
            cyc.push_back(next_id++);
        }
        g.vertices.push_back(cyc);
    }
    for (const auto& label : edge_order) {
        g.edges.push_back(by_label.at(label));
        g.labels.push_back(label);
    }
    g.validate();
    return g;
}

Foliation standard_foliation(const RibbonGraph& g) {
    Foliation f;
    for (HalfEdge h : g.half_edges) f[h] = g.partner(h) ? 0 : 1;
    return f;
}

}  // namespace

SurfaceModel annulus(int m, int n) {
    if (m < 1 || n < 1) throw InvalidParams("annulus needs m, n >= 1");
    std::vector<std::vector<std::string>> disks;
    for (int j = 0; j < m; ++j) disks.push_back({p_arc(j, m), p_arc(j + 1, m), "E" + std::to_string(j + 1)});
    for (int i = 0; i < n; ++i) disks.push_back({q_arc(i, n), q_arc(i + 1, n), "F" + std::to_string(i + 1)});
    std::vector<std::string> order{"S", "T"};
    for (int i = 1; i < m; ++i) order.push_back(p_arc(i, m));
    for (int j = 1; j < n; ++j) order.push_back(q_arc(j, n));
    for (int i = 1; i <= m; ++i) order.push_back("E" + std::to_string(i));
    for (int j = 1; j <= n; ++j) order.push_back("F" + std::to_string(j));
    SurfaceModel model;
    model.m = m;
    model.n = n;
    model.graph = graph_from_disks(disks, order);
    model.foliation = standard_foliation(model.graph);
    for (const auto& l : order) model.transport[l] = l;
    return model;
}

Foliation perturbed_foliation(const SurfaceModel& model, int w) {
    const auto& g = model.graph;
    Foliation f = model.foliation;
    auto c_last = static_cast<std::size_t>(model.m - 1);
    auto d_last = static_cast<std::size_t>(model.m + model.n - 1);
    f[g.half_edge_at(c_last, "T")] += w;
    f[g.half_edge_at(c_last, p_arc(model.m - 1, model.m))] -= w;
    f[g.half_edge_at(d_last, "T")] -= w;
    f[g.half_edge_at(d_last, q_arc(model.n - 1, model.n))] += w;
    return f;
}

bool balanced_check_annulus(int m, int n, const Foliation& f) {
    SurfaceModel model = annulus(m, n);
    if (!validate_foliation(model.graph, f)) throw InvalidFoliation("foliation data violates the vertex condition");
    return is_balanced(model.graph, f);
}

SurfaceModel pachner_replace_T_with_N(int m, int n) {
    if (m < 2 || n < 2) throw InvalidParams("the replacement needs m, n >= 2");
    std::vector<std::vector<std::string>> disks;
    for (int j = 0; j + 1 < m; ++j) disks.push_back({p_arc(j, m), p_arc(j + 1, m), "E" + std::to_string(j + 1)});
    for (int i = 0; i + 1 < n; ++i) disks.push_back({q_arc(i, n), q_arc(i + 1, n), "F" + std::to_string(i + 1)});
    std::string pm = p_arc(m - 1, m), qn = q_arc(n - 1, n);
    std::string em = "E" + std::to_string(m), fn = "F" + std::to_string(n);
    disks.push_back({qn, em, "N"});
    disks.push_back({pm, fn, "N"});
    std::vector<std::string> order{"S", "N"};
    for (int i = 1; i < m; ++i) order.push_back(p_arc(i, m));
    for (int j = 1; j < n; ++j) order.push_back(q_arc(j, n));
    for (int i = 1; i <= m; ++i) order.push_back("E" + std::to_string(i));
    for (int j = 1; j <= n; ++j) order.push_back("F" + std::to_string(j));
    SurfaceModel model;
    model.m = m;
    model.n = n;
    model.graph = graph_from_disks(disks, order);
    model.foliation = standard_foliation(model.graph);
    for (const auto& l : order)
        if (l != "N") model.transport[l] = l;
    return model;
}

bool enough_marked_intervals(const SurfaceModel& model) { return enough_marked_intervals(model.graph); }

Quiver build_quiver_V(int m, int n) {
    if (m < 1 || n < 1) throw InvalidParams("the quiver needs m, n >= 1");
    return annulus_quiver(m, n);
}

// ---------------------------------------------------------------- generator dictionary

BracketTree BracketTree::bracket(BracketTree a, BracketTree b) {
    BracketTree t;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
}

FreeExpr BracketTree::expr() const {
    if (is_leaf()) return FreeExpr::gen(leaf);
    return qbracket(kids[0].expr(), kids[1].expr(), 1);
}

std::string BracketTree::to_string() const {
    if (is_leaf()) return leaf.to_string();
    return "[" + kids[0].to_string() + ", " + kids[1].to_string() + "]_q";
}

std::string simple_generator(const std::string& vertex) { return "z_" + vertex; }

namespace {

HallElement evaluate_tree(const BracketTree& t, HallContext& ctx,
                          const std::function<HallElement(const Generator&)>& leaf) {
    if (t.is_leaf()) return leaf(t.leaf);
    return ctx.qbracket(evaluate_tree(t.kids[0], ctx, leaf), evaluate_tree(t.kids[1], ctx, leaf), 1);
}

}  // namespace

PhiData phi_assignment(HallContext& ctx, int m, int n) {
    Quiver expected = build_quiver_V(m, n).opposite();
    if (!(*ctx.quiver() == expected)) throw ContextMismatch("Hall context is not over the opposite two-path quiver");
    auto z = [](const std::string& v) { return BracketTree::make_leaf(simple_generator(v)); };
    PhiData out;
    auto& d = out.dictionary;
    d["S"] = z("S");
    BracketTree p = z("S"), q = z("S");
    for (int i = 1; i < m; ++i) {
        std::string v = p_arc(i, m);
        d["E" + std::to_string(i)] = z(v);
        p = BracketTree::bracket(p, z(v));
        d[v] = p;
    }
    for (int j = 1; j < n; ++j) {
        std::string v = q_arc(j, n);
        d["F" + std::to_string(j)] = z(v);
        q = BracketTree::bracket(q, z(v));
        d[v] = q;
    }
    d["N"] = z("T");
    d["E" + std::to_string(m)] = BracketTree::bracket(q, z("T"));
    d["F" + std::to_string(n)] = BracketTree::bracket(p, z("T"));
    d["T"] = BracketTree::bracket(p, d["E" + std::to_string(m)]);

    const Quiver& quiver = *ctx.quiver();
    std::map<std::string, HallElement> simples;
    for (VertexId v = 0; v < quiver.num_vertices(); ++v)
        simples.emplace(simple_generator(quiver.name(v)), ctx.simple_class(v));
    for (const auto& [arc, tree] : d)
        out.images.emplace(arc, evaluate_tree(tree, ctx, [&](const Generator& g) {
                               return ctx.suspend(simples.at(g.name), g.susp);
                           }));
    return out;
}

void assign_arcs(HallAssignment& assign, const PhiData& phi) {
    for (const auto& [arc, image] : phi.images) assign.set(arc, image);
}

void assign_simples(HallAssignment& assign) {
    HallContext& ctx = assign.context();
    const Quiver& quiver = *ctx.quiver();
    for (VertexId v = 0; v < quiver.num_vertices(); ++v)
        assign.set(simple_generator(quiver.name(v)), ctx.simple_class(v));
}

bool RoundtripReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const RoundtripEntry& e) { return e.symbolic_ok && e.numeric_ok; });
}

nlohmann::json RoundtripReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries)
        j.push_back({{"generator", e.generator},
                     {"steps", e.steps},
                     {"symbolic", e.symbolic_ok},
                     {"numeric", e.numeric_ok}});
    return j;
}

namespace {

// x = [a, b]_q read off a relation whose sides are a generator and a q-bracket
// of two generators; keyed by names and relative suspension.
struct Rule {
    std::string result;
    int result_shift;  // relative to a
    std::string source;
};
using RuleKey = std::tuple<std::string, std::string, int>;

std::optional<std::pair<Generator, Generator>> as_bracket(const FreeExpr& e) {
    if (e.terms().size() != 2) return std::nullopt;
    for (const auto& [w, c] : e.terms()) {
        if (w.size() != 2 || c != QRat(Rat(1))) continue;
        Word swapped{w[1], w[0]};
        auto it = e.terms().find(swapped);
        if (it != e.terms().end() && it->second == -QRat::q_pow(1)) return std::make_pair(w[0], w[1]);
    }
    return std::nullopt;
}

std::optional<Generator> as_generator(const FreeExpr& e) {
    if (e.terms().size() != 1) return std::nullopt;
    const auto& [w, c] = *e.terms().begin();
    if (w.size() != 1 || c != QRat(Rat(1))) return std::nullopt;
    return w[0];
}

void add_rules(std::map<RuleKey, Rule>& rules, const Presentation& p) {
    for (const auto& r : p.relations) {
        auto x = as_generator(r.lhs);
        auto ab = as_bracket(r.rhs);
        if (!x || !ab) {
            x = as_generator(r.rhs);
            ab = as_bracket(r.lhs);
        }
        if (!x || !ab) continue;
        const auto& [a, b] = *ab;
        rules.emplace(RuleKey{a.name, b.name, b.susp - a.susp}, Rule{x->name, x->susp - a.susp, r.source});
    }
}

}  // namespace

RoundtripReport psi_phi_roundtrip(HallContext& ctx, int m, int n) {
    if (m < 2 || n < 2)
        throw NotEnoughMarkedIntervals("the annulus needs at least two marked intervals on each boundary circle");
    PhiData phi = phi_assignment(ctx, m, n);

    std::map<RuleKey, Rule> rules;
    add_rules(rules, ddp_relations(m, n));
    for (int j = 0; j < m; ++j) {
        Presentation t = triangle_presentation({p_arc(j, m), p_arc(j + 1, m), "E" + std::to_string(j + 1)}, {0, 0, 1}, 0);
        for (auto& r : t.relations) r.source = "disk " + t.generators[0] + "," + t.generators[1] + "," + t.generators[2];
        add_rules(rules, t);
    }
    for (int i = 0; i < n; ++i) {
        Presentation t = triangle_presentation({q_arc(i, n), q_arc(i + 1, n), "F" + std::to_string(i + 1)}, {0, 0, 1}, 0);
        for (auto& r : t.relations) r.source = "disk " + t.generators[0] + "," + t.generators[1] + "," + t.generators[2];
        add_rules(rules, t);
    }

    // inverse on simple generators
    std::map<std::string, std::string> back{{simple_generator("S"), "S"}, {simple_generator("T"), "N"}};
    for (int i = 1; i < m; ++i) back[simple_generator(p_arc(i, m))] = "E" + std::to_string(i);
    for (int j = 1; j < n; ++j) back[simple_generator(q_arc(j, n))] = "F" + std::to_string(j);
    std::function<BracketTree(const BracketTree&)> pull = [&](const BracketTree& t) {
        if (t.is_leaf()) return BracketTree{{back.at(t.leaf.name), t.leaf.susp}, {}};
        return BracketTree::bracket(pull(t.kids[0]), pull(t.kids[1]));
    };

    HallAssignment arcs(ctx);
    assign_arcs(arcs, phi);

    RoundtripReport report;
    std::vector<std::string> order{"S", "T"};
    for (int i = 1; i < m; ++i) order.push_back(p_arc(i, m));
    for (int j = 1; j < n; ++j) order.push_back(q_arc(j, n));
    for (int i = 1; i <= m; ++i) order.push_back("E" + std::to_string(i));
    for (int j = 1; j <= n; ++j) order.push_back("F" + std::to_string(j));
    for (const auto& gname : order) {
        RoundtripEntry entry;
        entry.generator = gname;
        BracketTree image = pull(phi.dictionary.at(gname));
        entry.steps.push_back(gname + " -> " + image.to_string());
        std::function<std::optional<Generator>(const BracketTree&)> reduce =
            [&](const BracketTree& t) -> std::optional<Generator> {
            if (t.is_leaf()) return t.leaf;
            auto a = reduce(t.kids[0]);
            auto b = reduce(t.kids[1]);
            if (!a || !b) return std::nullopt;
            auto it = rules.find(RuleKey{a->name, b->name, b->susp - a->susp});
            if (it == rules.end()) {
                entry.steps.push_back("no identity for [" + a->to_string() + ", " + b->to_string() + "]_q");
                return std::nullopt;
            }
            Generator x{it->second.result, a->susp + it->second.result_shift};
            entry.steps.push_back("[" + a->to_string() + ", " + b->to_string() + "]_q = " + x.to_string() + "  (" +
                                  it->second.source + ")");
            return x;
        };
        auto reduced = reduce(image);
        entry.symbolic_ok = reduced && *reduced == Generator{gname, 0};
        entry.numeric_ok = evaluate(image.expr(), arcs) == phi.images.at(gname);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

// ---------------------------------------------------------------- json

nlohmann::json surface_to_json(const RibbonGraph& g, const Foliation& f) {
    nlohmann::json j;
    j["half_edges"] = g.half_edges;
    j["edges"] = g.edges;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back({{"cyclic", v}});
    j["foliation"] = nlohmann::json::object();
    for (const auto& [h, x] : f) j["foliation"][std::to_string(h)] = x;
    j["labels"] = nlohmann::json::object();
    for (std::size_t e = 0; e < g.labels.size(); ++e) j["labels"][std::to_string(e)] = g.labels[e];
    return j;
}

Collapsed surface_from_json(const nlohmann::json& j) {
    Collapsed out;
    try {
        auto& g = out.graph;
        g.half_edges = j.at("half_edges").get<std::vector<HalfEdge>>();
        g.edges = j.at("edges").get<std::vector<std::vector<HalfEdge>>>();
        for (const auto& v : j.at("vertices")) g.vertices.push_back(v.at("cyclic").get<std::vector<HalfEdge>>());
        g.labels.resize(g.edges.size());
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            auto key = std::to_string(e);
            g.labels[e] = j.contains("labels") && j["labels"].contains(key) ? j["labels"][key].get<std::string>()
                                                                          : "e" + key;
        }
        if (j.contains("foliation"))
            for (const auto& [k, v] : j.at("foliation").items()) out.foliation[std::stoi(k)] = v.get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed surface json: ") + e.what());
    }
    out.graph.validate();
    return out;
}

}  // namespace dhall
