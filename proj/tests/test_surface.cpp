#include <algorithm>

#include "doctest.h"
#include "dhall/errors.hpp"
#include "dhall/surface.hpp"

using namespace dhall;

namespace {

std::vector<std::string> cyclic_labels(const RibbonGraph& g, std::size_t v) {
    std::vector<std::string> out;
    for (HalfEdge h : g.vertices[v]) out.push_back(g.label_of(h));
    return out;
}

// rotate so the lexicographically least label comes first
std::vector<std::pair<std::string, int>> normalized_corners(const RibbonGraph& g, const Foliation& f,
                                                           std::size_t v) {
    std::vector<std::pair<std::string, int>> out;
    for (HalfEdge h : g.vertices[v]) out.emplace_back(g.label_of(h), f.at(h));
    std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
    return out;
}

std::set<std::pair<std::string, std::string>> naive_pairs(int m, int n) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& r : naive_annulus_presentation(m, n, 0).relations) {
        if (r.family != RelationFamily::NAIVE) continue;
        auto names = r.lhs.generator_names();
        REQUIRE(names.size() == 2);
        out.emplace(*names.begin(), *names.rbegin());
    }
    return out;
}

}  // namespace

TEST_CASE("annulus model has the expected shape") {
    auto model = annulus(3, 2);
    CHECK_NOTHROW(model.graph.validate());
    CHECK(model.graph.vertices.size() == 5);
    CHECK(model.graph.edges.size() == 10);
    CHECK(validate_foliation(model.graph, model.foliation));
    CHECK(cyclic_labels(model.graph, 2) == std::vector<std::string>{"P2", "T", "E3"});
    CHECK_THROWS_AS(annulus(0, 2), InvalidParams);
}

TEST_CASE("marked intervals of the annulus") {
    auto model = annulus(3, 2);
    const auto& g = model.graph;
    auto chains = marked_intervals(g);
    CHECK(chains.size() == 5);
    std::set<std::vector<std::string>> walks;
    for (const auto& c : chains) {
        std::vector<std::string> arcs;
        for (HalfEdge h : c) arcs.push_back(g.label_of(h));
        arcs.push_back(g.label_of(g.next(c.back())));
        walks.insert(arcs);
    }
    CHECK(walks.count({"E1", "S", "Q1", "T", "E3"}) == 1);
    CHECK(walks.count({"F1", "S", "P1", "P2", "T", "F2"}) == 1);
    CHECK(walks.count({"E2", "P1", "E1"}) == 1);
    CHECK(walks.count({"F2", "Q1", "F1"}) == 1);
}

TEST_CASE("far arc pairs are exactly the naive commutations") {
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}, {4, 4}}) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(far_arc_pairs(annulus(m, n).graph) == naive_pairs(m, n));
    }
}

TEST_CASE("enough marked intervals exactly when both circles carry two") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) CHECK(enough_marked_intervals(annulus(m, n)) == (m >= 2 && n >= 2));
}

TEST_CASE("collapsing internal edges preserves foliation data") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto model = annulus(m, n);
            for (std::size_t e = 0; e < model.graph.edges.size(); ++e) {
                if (!model.graph.is_internal(e)) continue;
                auto c = collapse_edge(model.graph, model.foliation, e);
                CHECK_NOTHROW(c.graph.validate());
                CHECK(validate_foliation(c.graph, c.foliation));
            }
            // collapse down to a single vertex
            Collapsed cur{model.graph, model.foliation};
            while (cur.graph.vertices.size() > 1) {
                std::size_t e = 0;
                while (!cur.graph.is_internal(e) ||
                       cur.graph.vertex_of(cur.graph.edges[e][0]) == cur.graph.vertex_of(cur.graph.edges[e][1]))
                    ++e;
                cur = collapse_edge(cur.graph, cur.foliation, e);
                CHECK(validate_foliation(cur.graph, cur.foliation));
            }
        }
}

TEST_CASE("collapse errors") {
    auto model = annulus(2, 2);
    CHECK_THROWS_AS(collapse_edge(model.graph, model.foliation, model.graph.edge_named("E1")), NotInternal);
    auto c = collapse_edge(model.graph, model.foliation, model.graph.edge_named("P1"));
    c = collapse_edge(c.graph, c.foliation, c.graph.edge_named("S"));
    c = collapse_edge(c.graph, c.foliation, c.graph.edge_named("Q1"));
    CHECK_THROWS_AS(collapse_edge(c.graph, c.foliation, c.graph.edge_named("T")), LoopEdge);
}

TEST_CASE("collapsing T leaves the square with alternating degrees") {
    auto model = annulus(2, 2);
    auto c = collapse_edge(model.graph, model.foliation, model.graph.edge_named("T"));
    auto quad = c.graph.vertex_of(c.graph.edges[c.graph.edge_named("E2")][0]);
    std::vector<std::pair<std::string, int>> expected{{"E2", 1}, {"P1", 0}, {"F2", 1}, {"Q1", 0}};
    CHECK(normalized_corners(c.graph, c.foliation, quad) == expected);
}

TEST_CASE("only the unperturbed foliation is balanced") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto model = annulus(m, n);
            for (int w = -3; w <= 3; ++w) {
                auto f = perturbed_foliation(model, w);
                CHECK(validate_foliation(model.graph, f));
                CHECK(balanced_check_annulus(m, n, f) == (w == 0));
            }
        }
    Foliation bad = annulus(2, 2).foliation;
    bad.begin()->second += 1;
    CHECK_THROWS_AS(balanced_check_annulus(2, 2, bad), InvalidFoliation);
}

TEST_CASE("Pachner replacement agrees with the annulus after collapsing") {
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {3, 4}}) {
        auto model = annulus(m, n);
        auto moved = pachner_replace_T_with_N(m, n);
        CHECK_NOTHROW(moved.graph.validate());
        CHECK(validate_foliation(moved.graph, moved.foliation));
        CHECK(moved.transport.count("T") == 0);
        CHECK(moved.transport.at("S") == "S");
        auto a = collapse_edge(model.graph, model.foliation, model.graph.edge_named("T"));
        auto b = collapse_edge(moved.graph, moved.foliation, moved.graph.edge_named("N"));
        std::multiset<std::vector<std::pair<std::string, int>>> va, vb;
        for (std::size_t v = 0; v < a.graph.vertices.size(); ++v) va.insert(normalized_corners(a.graph, a.foliation, v));
        for (std::size_t v = 0; v < b.graph.vertices.size(); ++v) vb.insert(normalized_corners(b.graph, b.foliation, v));
        CHECK(va == vb);
    }
    CHECK_THROWS_AS(pachner_replace_T_with_N(1, 3), InvalidParams);
}

TEST_CASE("Fukaya data of the annulus") {
    auto model = annulus(2, 2);
    auto data = fukaya_data(model.graph, model.foliation);
    CHECK(data.objects.size() == 8);
    CHECK(data.disk_sequences.size() == 4);
    for (const auto& seq : data.disk_sequences) {
        CHECK(seq.size() == 3);
        int total = 0;
        for (auto i : seq) total += data.paths[i].degree;
        CHECK(total == 1);
    }
    // chains of lengths 2, 2, 4, 4 give 3 + 3 + 10 + 10 paths
    CHECK(data.paths.size() == 26);
    for (const auto& c : data.compositions) {
        const auto& a = data.paths[c.right];
        const auto& b = data.paths[c.left];
        const auto& r = data.paths[c.result];
        CHECK(a.to == b.from);
        CHECK(r.from == a.from);
        CHECK(r.to == b.to);
        CHECK(r.degree == a.degree + b.degree);
        CHECK(c.sign == (a.degree % 2 == 0 ? 1 : -1));
    }
    CHECK(data.to_json()["paths"].size() == 26);
}

TEST_CASE("surface json round trip") {
    auto model = annulus(3, 2);
    auto j = surface_to_json(model.graph, model.foliation);
    auto back = surface_from_json(j);
    CHECK(back.graph.vertices == model.graph.vertices);
    CHECK(back.graph.edges == model.graph.edges);
    CHECK(back.graph.labels == model.graph.labels);
    CHECK(back.foliation == model.foliation);
    CHECK(surface_to_json(back.graph, back.foliation) == j);
    j["vertices"][0]["cyclic"] = nlohmann::json::array({0, 1});
    CHECK_THROWS_AS(surface_from_json(j), InputError);
    CHECK_THROWS_AS(surface_from_json(nlohmann::json::object()), InputError);
}

TEST_CASE("image of T is a single module with coefficient one") {
    auto q = std::make_shared<Quiver>(build_quiver_V(2, 2).opposite());
    HallContext ctx(q, 2);
    auto phi = phi_assignment(ctx, 2, 2);
    const auto& t = phi.images.at("T");
    REQUIRE(t.terms().size() == 1);
    auto [id, c] = *t.terms().begin();
    CHECK(c == SqrtNum::rational(Rat(1), 2));
    const auto& parts = ctx.object(id).parts();
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == 0);
    std::vector<std::size_t> dims(q->num_vertices());
    dims[q->vertex("S")] = 2;
    dims[q->vertex("P1")] = 1;
    dims[q->vertex("Q1")] = 1;
    dims[q->vertex("T")] = 1;
    CHECK(parts.begin()->second.dims() == dims);
}

TEST_CASE("round trip through the Hall algebra") {
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}}) {
        auto q = std::make_shared<Quiver>(build_quiver_V(m, n).opposite());
        HallContext ctx(q, 2);
        auto report = psi_phi_roundtrip(ctx, m, n);
        CHECK(report.entries.size() == static_cast<std::size_t>(2 * (m + n)));
        CHECK(report.all_passed());
    }
    HallContext wrong(std::make_shared<Quiver>(build_quiver_V(2, 2)), 2);
    CHECK_THROWS_AS(phi_assignment(wrong, 2, 2), ContextMismatch);
    CHECK_THROWS_AS(psi_phi_roundtrip(wrong, 1, 2), NotEnoughMarkedIntervals);
}

TEST_CASE("naive relations hold under the arc images") {
    auto q = std::make_shared<Quiver>(build_quiver_V(2, 2).opposite());
    HallContext ctx(q, 3);
    HallAssignment a(ctx);
    assign_arcs(a, phi_assignment(ctx, 2, 2));
    CHECK(check_relations(naive_annulus_presentation(2, 2, 1), a, 1).all_passed());
    CHECK(check_relations(ddp_relations(2, 2), a, 1).all_passed());
}
