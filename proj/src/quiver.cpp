#include "dhall/quiver.hpp"

#include <deque>

#include "dhall/errors.hpp"

namespace dhall {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names_[i] == names_[j]) throw InputError("duplicate vertex name '" + names_[i] + "'");
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& a : arrows_) {
        if (a.src >= n || a.dst >= n) throw InputError("arrow endpoint out of range");
        ++indeg[a.dst];
    }
    std::deque<VertexId> ready;
    for (VertexId v = 0; v < n; ++v)
        if (!indeg[v]) ready.push_back(v);
    while (!ready.empty()) {
        VertexId v = ready.front();
        ready.pop_front();
        topo_.push_back(v);
        for (const auto& a : arrows_)
            if (a.src == v && --indeg[a.dst] == 0) ready.push_back(a.dst);
    }
    if (topo_.size() != n) throw NotHereditary("quiver has an oriented cycle");
}

VertexId Quiver::vertex(const std::string& name) const {
    for (VertexId v = 0; v < names_.size(); ++v)
        if (names_[v] == name) return v;
    throw InputError("unknown vertex '" + name + "'");
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev;
    rev.reserve(arrows_.size());
    for (const auto& a : arrows_) rev.push_back({a.dst, a.src});
    return Quiver(names_, rev);
}

std::vector<Path> Quiver::paths_from(VertexId v) const {
    std::vector<Path> out{{v, v, {}}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (ArrowId a = 0; a < arrows_.size(); ++a) {
            if (arrows_[a].src != out[i].end) continue;
            Path next = out[i];
            next.arrows.push_back(a);
            next.end = arrows_[a].dst;
            out.push_back(std::move(next));
        }
    }
    return out;
}

long long Quiver::euler_form(const DimVector& d, const DimVector& e) const {
    if (d.size() != names_.size() || e.size() != names_.size())
        throw DimensionMismatch("dimension vector length differs from vertex count");
    long long r = 0;
    for (std::size_t i = 0; i < d.size(); ++i) r += d[i] * e[i];
    for (const auto& a : arrows_) r -= d[a.src] * e[a.dst];
    return r;
}

long long Quiver::symmetrized(VertexId i, VertexId j) const {
    DimVector a = simple_dim(i), b = simple_dim(j);
    return euler_form(a, b) + euler_form(b, a);
}

DimVector Quiver::simple_dim(VertexId v) const {
    DimVector d(names_.size(), 0);
    d.at(v) = 1;
    return d;
}

bool Quiver::operator==(const Quiver& o) const {
    if (names_ != o.names_ || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].src != o.arrows_[i].src || arrows_[i].dst != o.arrows_[i].dst) return false;
    return true;
}

nlohmann::json quiver_to_json(const Quiver& q) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (VertexId v = 0; v < q.num_vertices(); ++v) j["vertices"].push_back({{"id", v}, {"name", q.name(v)}});
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : q.arrows()) j["arrows"].push_back({{"src", a.src}, {"dst", a.dst}});
    return j;
}

Quiver quiver_from_json(const nlohmann::json& j) {
    try {
        const auto& vs = j.at("vertices");
        std::vector<std::string> names(vs.size());
        std::vector<bool> seen(vs.size(), false);
        for (const auto& v : vs) {
            auto id = v.at("id").get<std::size_t>();
            if (id >= vs.size() || seen[id]) throw InputError("vertex ids must be 0..n-1 without repeats");
            seen[id] = true;
            names[id] = v.contains("name") ? v.at("name").get<std::string>() : std::to_string(id);
        }
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows")) arrows.push_back({a.at("src").get<std::size_t>(), a.at("dst").get<std::size_t>()});
        return Quiver(names, arrows);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed quiver JSON: ") + e.what());
    }
}

Quiver linear_quiver(std::size_t n) {
    std::vector<std::string> names;
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    return Quiver(names, arrows);
}

Quiver annulus_quiver(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw InputError("annulus quiver needs m, n >= 1");
    std::vector<std::string> names{"S"};
    for (std::size_t i = 1; i < m; ++i) names.push_back("P" + std::to_string(i));
    for (std::size_t j = 1; j < n; ++j) names.push_back("Q" + std::to_string(j));
    names.push_back("T");
    const VertexId s = 0, t = names.size() - 1;
    auto p = [&](std::size_t i) -> VertexId { return i == 0 ? s : i == m ? t : i; };
    auto q = [&](std::size_t j) -> VertexId { return j == 0 ? s : j == n ? t : m - 1 + j; };
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < m; ++i) arrows.push_back({p(i), p(i + 1)});
    for (std::size_t j = 0; j < n; ++j) arrows.push_back({q(j), q(j + 1)});
    return Quiver(names, arrows);
}

}  // namespace dhall
