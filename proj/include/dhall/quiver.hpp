#pragma once

// Finite acyclic quivers and the Euler form on dimension vectors.

#include "json.hpp"

#include <string>
#include <vector>

namespace dhall {

using VertexId = std::size_t;
using ArrowId = std::size_t;
using DimVector = std::vector<long long>;  // indexed by VertexId

struct Arrow {
    VertexId src;
    VertexId dst;
};

// A path is a start vertex plus a sequence of composable arrows.
struct Path {
    VertexId start;
    VertexId end;
    std::vector<ArrowId> arrows;
};

class Quiver {
public:
    Quiver() = default;
    // Throws NotHereditary if the arrows contain an oriented cycle.
    Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

    std::size_t num_vertices() const { return names_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::string& name(VertexId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    VertexId vertex(const std::string& name) const;  // throws InputError if absent
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    Quiver opposite() const;
    const std::vector<VertexId>& topological_order() const { return topo_; }

    // All paths starting at v, trivial path first, in breadth-first order.
    std::vector<Path> paths_from(VertexId v) const;

    long long euler_form(const DimVector& d, const DimVector& e) const;
    long long symmetrized(VertexId i, VertexId j) const;  // (S_i, S_j) + (S_j, S_i)

    DimVector simple_dim(VertexId v) const;

    bool operator==(const Quiver& o) const;

private:
    std::vector<std::string> names_;
    std::vector<Arrow> arrows_;
    std::vector<VertexId> topo_;
};

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

// Small named quivers used throughout: linear A_n (1 -> 2 -> ... -> n),
// and the annulus quiver V_{m,n}: two paths S -> ... -> T of lengths m and n.
Quiver linear_quiver(std::size_t n);
Quiver annulus_quiver(std::size_t m, std::size_t n);

}  // namespace dhall
