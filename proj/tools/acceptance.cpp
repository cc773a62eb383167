#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "dhall/dercat.hpp"
#include "dhall/errors.hpp"
#include "dhall/freealg.hpp"
#include "dhall/surface.hpp"
#include "oracle.hpp"

namespace dhall {

namespace {

QuiverPtr shared(Quiver q) { return std::make_shared<Quiver>(std::move(q)); }

void assign_vertices(HallAssignment& a) {
    const Quiver& q = *a.context().quiver();
    for (VertexId v = 0; v < q.num_vertices(); ++v) a.set(q.name(v), a.context().simple_class(v));
}

struct Outcome {
    std::vector<std::string> failures;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string primes_text(const std::vector<Fp>& primes) {
    std::string s;
    for (Fp p : primes) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
}

std::string relation_summary(const RelationReport& r) {
    return std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size());
}

// ---------------------------------------------------------------- criteria

void self_extension(const AcceptanceOptions& opt, Outcome& out) {
    for (Fp p : opt.primes) {
        HallContext ctx(shared(linear_quiver(1)), p, opt.convention);
        HallAssignment a(ctx);
        assign_vertices(a);
        Presentation pres = k_presentation(*ctx.quiver(), 2);
        auto report = check_relations(pres, a, 0);
        out.require(report.all_passed(), "s=" + std::to_string(p) + ": " + relation_summary(report) + " hold");
        out.detail << "s=" << p << " " << relation_summary(report) << " ";
    }
}

void composition_relations(const AcceptanceOptions& opt, Outcome& out) {
    for (Fp p : opt.primes)
        for (auto [label, q] : {std::pair<std::string, Quiver>{"A2", linear_quiver(2)},
                                {"V22op", annulus_quiver(2, 2).opposite()}}) {
            HallContext ctx(shared(q), p, opt.convention);
            HallAssignment a(ctx);
            assign_vertices(a);
            auto report = check_relations(k_presentation(q, 2), a, 2);
            out.require(report.all_passed(), label + " s=" + std::to_string(p) + ": " + relation_summary(report));
            out.detail << label << " s=" << p << " " << relation_summary(report) << " ";
        }
}

void triangle_keys(const AcceptanceOptions& opt, Outcome& out) {
    auto g = [](const char* name, int susp = 0) { return FreeExpr::gen(name, susp); };
    Presentation keys;
    keys.generators = {"E1", "E2", "E3"};
    keys.add(RelationFamily::R2, g("E2"), qbracket(g("E1"), g("E3"), 1), "E2 = [E1, E3]_q");
    keys.add(RelationFamily::R2, g("E1"), qbracket(g("E3", 1), g("E2"), 1), "E1 = [sE3, E2]_q");
    keys.add(RelationFamily::R2, g("E3"), qbracket(g("E2"), g("E1", -1), 1), "E3 = [E2, s^-1 E1]_q");
    for (Fp p : opt.primes) {
        HallContext ctx(shared(linear_quiver(2).opposite()), p, opt.convention);
        HallAssignment a(ctx);
        assign_disk(a, {0, 0, 1});
        auto report = check_relations(keys, a, 0);
        for (const auto& c : report.checks)
            out.require(c.passed, "s=" + std::to_string(p) + ": " + c.source + " fails");
        auto full = check_relations(disk_presentation(3, {0, 0, 1}, 1), a, 1);
        out.require(full.all_passed(), "s=" + std::to_string(p) + ": disk relations " + relation_summary(full));
        out.detail << "s=" << p << " keys " << relation_summary(report) << " disk " << relation_summary(full) << " ";
    }
}

void image_of_t(const AcceptanceOptions& opt, Outcome& out) {
    auto q = shared(annulus_quiver(2, 2).opposite());
    HallContext ctx(q, 2, opt.convention);
    auto phi = phi_assignment(ctx, 2, 2);
    auto z = [](const char* v) { return BracketTree::make_leaf(simple_generator(v)); };
    auto p1 = BracketTree::bracket(z("S"), z("P1"));
    auto q1 = BracketTree::bracket(z("S"), z("Q1"));
    HallAssignment simples(ctx);
    assign_simples(simples);
    HallElement first = phi.images.at("T");
    HallElement second = evaluate(BracketTree::bracket(q1, BracketTree::bracket(p1, z("T"))).expr(), simples);

    std::vector<std::size_t> dims(q->num_vertices());
    dims[q->vertex("S")] = 2;
    dims[q->vertex("P1")] = 1;
    dims[q->vertex("Q1")] = 1;
    dims[q->vertex("T")] = 1;
    out.require(first.terms().size() == 1, "T has " + std::to_string(first.terms().size()) + " terms");
    if (first.terms().size() == 1) {
        auto [id, c] = *first.terms().begin();
        out.require(c == SqrtNum::rational(Rat(1), 2), "coefficient " + c.to_string());
        const auto& parts = ctx.object(id).parts();
        out.require(parts.size() == 1 && parts.begin()->first == 0 && parts.begin()->second.dims() == dims,
                    "class is " + ctx.describe(id));
        out.detail << "T -> 1 * " << ctx.describe(id) << " ";
    }
    out.require(first == second, "the two bracket orders differ");
}

void naive_soundness(const AcceptanceOptions& opt, Outcome& out) {
    std::vector<std::tuple<int, int, Fp>> runs;
    for (Fp p : opt.primes) runs.emplace_back(2, 2, p);
    runs.emplace_back(3, 2, opt.primes.front());
    for (auto [m, n, p] : runs) {
        HallContext ctx(shared(annulus_quiver(m, n).opposite()), p, opt.convention);
        HallAssignment a(ctx);
        assign_arcs(a, phi_assignment(ctx, m, n));
        auto report = check_relations(naive_annulus_presentation(m, n, 1), a, 1);
        std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ") s=" + std::to_string(p);
        out.require(report.all_passed(), tag + ": " + relation_summary(report));
        out.detail << tag << " " << relation_summary(report) << " ";
    }
}

void roundtrip(const AcceptanceOptions& opt, Outcome& out) {
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}}) {
        HallContext ctx(shared(annulus_quiver(m, n).opposite()), opt.primes.front(), opt.convention);
        auto report = psi_phi_roundtrip(ctx, m, n);
        std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        for (const auto& e : report.entries) {
            out.require(e.symbolic_ok, tag + " " + e.generator + " symbolic");
            out.require(e.numeric_ok, tag + " " + e.generator + " numeric");
        }
        out.detail << tag << " " << report.entries.size() << " generators ";
    }
}

void euler_values(const AcceptanceOptions&, Outcome& out) {
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {4, 3}}) {
        Quiver q = build_quiver_V(m, n);
        std::vector<std::string> left{"S"}, right{"S"};
        for (int i = 1; i < m; ++i) left.push_back("P" + std::to_string(i));
        for (int j = 1; j < n; ++j) right.push_back("Q" + std::to_string(j));
        left.push_back("T");
        right.push_back("T");
        std::set<std::pair<std::string, std::string>> adjacent;
        for (const auto* chain : {&left, &right})
            for (std::size_t k = 0; k + 1 < chain->size(); ++k) {
                adjacent.emplace((*chain)[k], (*chain)[k + 1]);
                adjacent.emplace((*chain)[k + 1], (*chain)[k]);
            }
        for (VertexId i = 0; i < q.num_vertices(); ++i)
            for (VertexId j = 0; j < q.num_vertices(); ++j) {
                long long expected = i == j ? 2 : adjacent.count({q.name(i), q.name(j)}) ? -1 : 0;
                out.require(q.symmetrized(i, j) == expected,
                            "V" + std::to_string(m) + std::to_string(n) + " " + q.name(i) + "." + q.name(j));
            }
    }
    auto q = shared(annulus_quiver(2, 2).opposite());
    for (VertexId i = 0; i < q->num_vertices(); ++i)
        for (VertexId j = 0; j < q->num_vertices(); ++j) {
            auto x = DerivedObject::module(Rep::simple(q, 2, i));
            auto y = DerivedObject::module(Rep::simple(q, 2, j));
            long long alternating = 0;
            for (auto [k, d] : ext_dims(x, y, -2, 2)) alternating += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
            out.require(alternating == q->euler_form(q->simple_dim(i), q->simple_dim(j)),
                        "alternating sum " + q->name(i) + "," + q->name(j));
        }
    for (VertexId i = 0; i < q->num_vertices(); ++i)
        for (VertexId j = 0; j < q->num_vertices(); ++j) {
            long long both = q->euler_form(q->simple_dim(i), q->simple_dim(j)) +
                             q->euler_form(q->simple_dim(j), q->simple_dim(i));
            out.require(both == q->symmetrized(i, j), "symmetrized " + q->name(i) + "," + q->name(j));
        }
    out.detail << "pairings on V22, V32, V43; Hom/Ext sums on V22op";
}

void oracle_equivalence(const AcceptanceOptions& opt, Outcome& out) {
    std::size_t triples = 0;
    for (int which : {0, 1}) {
        auto q = shared(which == 0 ? linear_quiver(2) : annulus_quiver(2, 2).opposite());
        HallContext ctx(q, 2, opt.convention);
        auto reps = enumerate_reps(q, 2, std::vector<std::size_t>(q->num_vertices(), 1));
        reps.push_back(Rep::zero(q, 2));
        if (which == 1) {
            auto phi = phi_assignment(ctx, 2, 2);
            reps.push_back(ctx.object(phi.images.at("T").terms().begin()->first).parts().at(0));
        }
        std::vector<ObjectId> ids;
        for (const auto& r : reps) ids.push_back(ctx.classify(DerivedObject::module(r)));
        for (std::size_t x = 0; x < reps.size(); ++x)
            for (std::size_t y = 0; y < reps.size(); ++y)
                for (std::size_t l = 0; l < reps.size(); ++l) {
                    ++triples;
                    Rat fast = ctx.toen_constant(ids[x], ids[y], ids[l]);
                    Rat slow = oracle::raw_toen(reps[x], reps[y], reps[l]);
                    if (fast != slow)
                        out.require(false, ctx.describe(ids[x]) + "," + ctx.describe(ids[y]) + " -> " +
                                               ctx.describe(ids[l]) + ": " + fast.get_str() + " vs " + slow.get_str());
                }
    }
    out.detail << triples << " triples";
}

void combinatorial_layer(const AcceptanceOptions&, Outcome& out) {
    std::size_t collapses = 0;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto model = annulus(m, n);
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            out.require(validate_foliation(model.graph, model.foliation), tag + " standard foliation invalid");
            for (std::size_t e = 0; e < model.graph.edges.size(); ++e) {
                if (!model.graph.is_internal(e)) continue;
                auto r = collapse_edge(model.graph, model.foliation, e);
                ++collapses;
                out.require(validate_foliation(r.graph, r.foliation), tag + " collapse of " + model.graph.labels[e]);
            }
            // and successively down to one vertex
            Collapsed cur{model.graph, model.foliation};
            while (cur.graph.vertices.size() > 1) {
                std::size_t e = 0;
                while (!cur.graph.is_internal(e) ||
                       cur.graph.vertex_of(cur.graph.edges[e][0]) == cur.graph.vertex_of(cur.graph.edges[e][1]))
                    ++e;
                std::string label = cur.graph.labels[e];
                cur = collapse_edge(cur.graph, cur.foliation, e);
                ++collapses;
                out.require(validate_foliation(cur.graph, cur.foliation), tag + " successive collapse of " + label);
            }
            for (int w = -2; w <= 2; ++w)
                out.require(balanced_check_annulus(m, n, perturbed_foliation(model, w)) == (w == 0),
                            tag + " balance at w=" + std::to_string(w));
        }
    out.detail << collapses << " collapses, balance checked for w in [-2,2]";
}

void associativity(const AcceptanceOptions& opt, Outcome& out) {
    HallContext ctx(shared(annulus_quiver(2, 2).opposite()), 2, opt.convention);
    std::mt19937 rng(20261015);
    auto random_element = [&]() {
        HallElement e = ctx.zero();
        int terms = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < terms; ++t) {
            auto v = static_cast<VertexId>(rng() % 4);
            int shift = static_cast<int>(rng() % 3) - 1;
            Rat c(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3));
            c.canonicalize();
            e = e + ctx.simple_class(v, shift).scaled(SqrtNum::rational(c, 2));
        }
        return e;
    };
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        auto a = random_element(), b = random_element(), c = random_element();
        if ((a * b) * c != a * (b * c)) ++bad;
    }
    out.require(bad == 0, std::to_string(bad) + " of 200 triples not associative");
    out.detail << "200 triples";
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(const AcceptanceOptions&, Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "self-extension bracket on A1", self_extension},
        {2, "composition algebra relations on A2 and V22op", composition_relations},
        {3, "triangle key relations", triangle_keys},
        {4, "image of T over V22op", image_of_t},
        {5, "naive annulus relations under the arc images", naive_soundness},
        {6, "generator round trip", roundtrip},
        {7, "Euler form values", euler_values},
        {8, "structure constants against brute force", oracle_equivalence},
        {9, "foliations, collapses and balance", combinatorial_layer},
        {10, "associativity of the twisted product", associativity},
    };
    return all;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    if (options.primes.empty()) throw InvalidParams("need at least one prime");
    std::vector<CriterionResult> results;
    for (const auto& c : criteria()) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
            continue;
        CriterionResult r{c.id, c.title};
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(options, out);
        } catch (const std::exception& e) {
            out.require(false, std::string("error: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.passed = out.failures.empty();
        if (r.passed) {
            r.detail = out.detail.str();
            while (!r.detail.empty() && r.detail.back() == ' ') r.detail.pop_back();
        } else {
            for (const auto& f : out.failures) r.detail += (r.detail.empty() ? "" : "; ") + f;
        }
        results.push_back(r);
    }
    return results;
}

std::string format_result(const CriterionResult& r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s [%d] %s (%.2f s)", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                  r.seconds);
    return std::string(head) + ": " + r.detail;
}

nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results, const AcceptanceOptions& options) {
    nlohmann::json j;
    j["primes"] = options.primes;
    j["convention"] = {{"first_factor_is_cone", options.convention.first_factor_is_cone},
                       {"suspension_shift", options.convention.suspension_shift}};
    bool all = true;
    j["criteria"] = nlohmann::json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        j["criteria"].push_back(
            {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    }
    j["passed"] = all;
    if (options.primes.size() < 2)
        j["note"] = "only one specialization of q checked (" + primes_text(options.primes) + "); reduced confidence";
    return j;
}

}  // namespace dhall
