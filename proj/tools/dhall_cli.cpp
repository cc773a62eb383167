// dhall: command-line front end.
//
// Exit codes: 0 success, 1 input or schema error, 2 enumeration cap exceeded,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "dhall/errors.hpp"
#include "dhall/freealg.hpp"
#include "dhall/surface.hpp"

using namespace dhall;
using nlohmann::json;

namespace {

struct Common {
    std::vector<Fp> primes{2, 3};
    int window = 2;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::string out;
    bool as_json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_primes = true) {
    if (with_primes) cmd->add_option("--primes", c.primes, "field sizes, comma separated")->delimiter(',');
    cmd->add_option("--window", c.window, "suspension window");
    cmd->add_option("--cap", c.cap, "enumeration cap");
    cmd->add_option("--out", c.out, "write JSON here");
    cmd->add_flag("--json", c.as_json, "print JSON instead of a summary");
}

void check_config(const Common& c) {
    if (c.window < 0) throw InvalidParams("window must be non-negative");
    if (c.primes.empty()) throw InvalidParams("need at least one prime");
    for (Fp p : c.primes) {
        bool prime = p >= 2;
        for (Fp d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
        if (!prime) throw InvalidParams(std::to_string(p) + " is not prime");
    }
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

// JSON goes to --out if given, and to stdout when asked for or when there is
// no text summary.
void emit(const Common& c, const json& j, const std::string& summary = "") {
    if (!c.out.empty()) std::ofstream(c.out) << j.dump(2) << "\n";
    if (c.as_json || summary.empty())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << summary;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("not an integer: " + item);
        }
    }
    return out;
}

// ---------------------------------------------------------------- commands

int quiver_hall(const Common& c, const std::string& quiver_path, const std::vector<std::string>& factors) {
    auto quiver = std::make_shared<Quiver>(quiver_from_json(read_json(quiver_path)));
    HallContext ctx(quiver, c.primes.front(), {}, c.cap);
    HallElement product = ctx.unit();
    for (const auto& f : factors) {
        auto colon = f.find(':');
        std::string vertex = f.substr(0, colon);
        int shift = colon == std::string::npos ? 0 : parse_ints(f.substr(colon + 1)).at(0);
        product = product * ctx.simple_class(quiver->vertex(vertex), shift);
    }
    emit(c, {{"prime", c.primes.front()},
             {"element", ctx.element_to_json(product)},
             {"registry", ctx.registry_to_json()}});
    return 0;
}

int verify_naive(const Common& c, int m, int n) {
    json report{{"m", m}, {"n", n}, {"window", c.window}, {"runs", json::array()}};
    bool all = true;
    std::ostringstream text;
    auto pres = naive_annulus_presentation(m, n, c.window);
    for (Fp p : c.primes) {
        HallContext ctx(std::make_shared<Quiver>(build_quiver_V(m, n).opposite()), p, {}, c.cap);
        HallAssignment assign(ctx);
        assign_arcs(assign, phi_assignment(ctx, m, n));
        auto relations = check_relations(pres, assign, c.window);
        auto roundtrip = psi_phi_roundtrip(ctx, m, n);
        bool ok = relations.all_passed() && roundtrip.all_passed();
        all = all && ok;
        report["runs"].push_back(
            {{"prime", p}, {"relations", relations.to_json()}, {"roundtrip", roundtrip.to_json()}, {"passed", ok}});
        text << "s=" << p << ": " << relations.checks.size() - relations.failures() << "/" << relations.checks.size()
             << " relation instances, round trip " << (roundtrip.all_passed() ? "ok" : "FAILED") << "\n";
    }
    report["passed"] = all;
    emit(c, report, text.str());
    return all ? 0 : 3;
}

int disk(const Common& c, int m, const std::string& h_text) {
    std::vector<int> h = h_text.empty() ? fan_foliation(m) : parse_ints(h_text);
    auto pres = disk_presentation(m, h, c.window);
    json report{{"m", m}, {"h", h}, {"window", c.window}, {"presentation", pres.to_json()}, {"runs", json::array()}};
    bool all = true;
    std::ostringstream text;
    for (Fp p : c.primes) {
        HallContext ctx(std::make_shared<Quiver>(linear_quiver(static_cast<std::size_t>(m - 1)).opposite()), p, {},
                        c.cap);
        HallAssignment assign(ctx);
        assign_disk(assign, h);
        auto r = check_relations(pres, assign, c.window);
        all = all && r.all_passed();
        report["runs"].push_back({{"prime", p}, {"report", r.to_json()}});
        text << "s=" << p << ": " << r.checks.size() - r.failures() << "/" << r.checks.size()
             << " relation instances hold\n";
    }
    report["passed"] = all;
    emit(c, report, text.str());
    return all ? 0 : 3;
}

int surface(const Common& c, const std::string& action, const std::string& in, const std::string& annulus_text,
            int perturb, const std::string& edge) {
    Collapsed s;
    if (!in.empty()) {
        s = surface_from_json(read_json(in));
    } else if (!annulus_text.empty()) {
        auto mn = parse_ints(annulus_text);
        if (mn.size() != 2) throw InputError("--annulus expects m,n");
        auto model = annulus(mn[0], mn[1]);
        s = {model.graph, perturbed_foliation(model, perturb)};
    } else {
        throw InputError("give --in or --annulus");
    }
    if (action == "export") {
        emit(c, surface_to_json(s.graph, s.foliation));
    } else if (action == "validate") {
        emit(c, {{"valid", validate_foliation(s.graph, s.foliation)}});
    } else if (action == "collapse") {
        auto r = collapse_edge(s.graph, s.foliation, s.graph.edge_named(edge));
        emit(c, surface_to_json(r.graph, r.foliation));
    } else if (action == "fukaya") {
        emit(c, fukaya_data(s.graph, s.foliation).to_json());
    } else if (action == "balance") {
        emit(c, {{"balanced", is_balanced(s.graph, s.foliation)}});
    } else {
        throw InputError("unknown action " + action);
    }
    return 0;
}

int acceptance(const Common& c, const std::vector<int>& only, bool flip) {
    AcceptanceOptions options;
    options.primes = c.primes;
    options.only = only;
    if (flip) options.convention.suspension_shift = -options.convention.suspension_shift;
    auto results = run_acceptance(options);
    std::ostringstream text;
    bool all = true;
    for (const auto& r : results) {
        text << format_result(r) << "\n";
        all = all && r.passed;
    }
    if (options.primes.size() < 2) text << "note: one specialization only, reduced confidence\n";
    emit(c, acceptance_to_json(results, options), text.str());
    return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derived Hall algebras of quivers and arc algebras of annuli"};
    app.require_subcommand(1);
    Common common;

    auto* qh = app.add_subcommand("quiver-hall", "product of shifted simples in the derived Hall algebra");
    std::string quiver_path;
    std::vector<std::string> factors;
    qh->add_option("--quiver", quiver_path, "quiver JSON")->required();
    qh->add_option("--factor", factors, "vertex or vertex:shift, left to right");
    add_common(qh, common);

    auto* vn = app.add_subcommand("verify-naive", "check the naive annulus relations and the round trip");
    int m = 2, n = 2;
    vn->add_option("--m", m, "marked intervals on the first boundary circle");
    vn->add_option("--n", n, "marked intervals on the second boundary circle");
    add_common(vn, common);

    auto* dk = app.add_subcommand("disk", "check a disk presentation");
    int disk_m = 3;
    std::string h_text;
    dk->add_option("--m", disk_m, "number of boundary arcs");
    dk->add_option("--corners", h_text, "corner degrees h, comma separated (default: fan)");
    add_common(dk, common);

    auto* sf = app.add_subcommand("surface", "ribbon graph operations");
    std::string action = "validate", in, annulus_text, edge;
    int perturb = 0;
    sf->add_option("action", action, "validate | collapse | fukaya | balance | export");
    sf->add_option("--in", in, "surface JSON");
    sf->add_option("--annulus", annulus_text, "use the annulus m,n instead of --in");
    sf->add_option("--perturb", perturb, "shift the annulus foliation by w around T");
    sf->add_option("--edge", edge, "edge label to collapse");
    add_common(sf, common, false);

    auto* ac = app.add_subcommand("acceptance", "run the acceptance suite");
    std::vector<int> only;
    bool flip = false;
    ac->add_option("--only", only, "criterion ids")->delimiter(',');
    ac->add_flag("--flip-suspension", flip, "negative control");
    add_common(ac, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        check_config(common);
        if (*qh) return quiver_hall(common, quiver_path, factors);
        if (*vn) return verify_naive(common, m, n);
        if (*dk) return disk(common, disk_m, h_text);
        if (*sf) return surface(common, action, in, annulus_text, perturb, edge);
        if (*ac) return acceptance(common, only, flip);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
