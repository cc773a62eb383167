#pragma once

// Ribbon graphs dual to marked surfaces with full arc systems, foliation
// data, the annuli with their standard arc decomposition, and the generator
// dictionary into the Hall algebra of the two-path quiver.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dhall/freealg.hpp"
#include "dhall/hall.hpp"
#include "dhall/quiver.hpp"
#include "json.hpp"

namespace dhall {

using HalfEdge = int;
// value at a half-edge h: degree of the corner from h to the next half-edge
using Foliation = std::map<HalfEdge, int>;

struct RibbonGraph {
    std::vector<HalfEdge> half_edges;
    std::vector<std::vector<HalfEdge>> edges;     // one (boundary) or two (internal) half-edges
    std::vector<std::vector<HalfEdge>> vertices;  // cyclic order
    std::vector<std::string> labels;              // one per edge

    std::size_t edge_of(HalfEdge h) const;
    std::size_t vertex_of(HalfEdge h) const;
    HalfEdge next(HalfEdge h) const;
    HalfEdge prev(HalfEdge h) const;
    std::optional<HalfEdge> partner(HalfEdge h) const;
    const std::string& label_of(HalfEdge h) const { return labels.at(edge_of(h)); }
    std::size_t edge_named(const std::string& name) const;
    // half-edge of the named edge at the given vertex
    HalfEdge half_edge_at(std::size_t vertex, const std::string& name) const;
    bool is_internal(std::size_t edge) const { return edges.at(edge).size() == 2; }

    // Throws InputError unless both partitions cover the half-edges exactly
    // once and every vertex has valence at least three.
    void validate() const;
};

bool validate_foliation(const RibbonGraph& g, const Foliation& f);

struct Collapsed {
    RibbonGraph graph;
    Foliation foliation;
};
// Merge the two vertices of an internal edge, splicing cyclic orders and
// moving the corner degrees that ran into the removed half-edges.
Collapsed collapse_edge(const RibbonGraph& g, const Foliation& f, std::size_t edge);

// Marked intervals as chains of corners, each corner named by its starting
// half-edge. A chain starts at a boundary half-edge and crosses internal
// edges until it reaches another boundary half-edge.
std::vector<std::vector<HalfEdge>> marked_intervals(const RibbonGraph& g);

struct BoundaryPath {
    std::size_t interval;
    std::size_t first;  // corner positions [first, last] within the interval
    std::size_t last;
    std::string from;
    std::string to;
    int degree;
};

struct Composition {
    std::size_t right;  // a
    std::size_t left;   // b
    std::size_t result;
    int sign;           // mu2(b, a) = sign * (a.b)
};

struct FukayaData {
    std::vector<std::string> objects;
    std::vector<BoundaryPath> paths;  // every non-trivial boundary path
    std::vector<Composition> compositions;
    std::vector<std::vector<std::size_t>> disk_sequences;  // per vertex, indices into paths
    nlohmann::json to_json() const;
};
FukayaData fukaya_data(const RibbonGraph& g, const Foliation& f);

// Every pair of boundary paths with the same ends has the same degree.
bool is_balanced(const RibbonGraph& g, const Foliation& f);

// Pairs of distinct arcs that bound no common disk and meet no common marked
// interval; these commute in the naive algebra.
std::set<std::pair<std::string, std::string>> far_arc_pairs(const RibbonGraph& g);

// True when the corners of each disk lie on pairwise distinct marked intervals.
bool enough_marked_intervals(const RibbonGraph& g);

struct SurfaceModel {
    int m = 0;
    int n = 0;
    RibbonGraph graph;
    Foliation foliation;
    // arc names carried over from the model this one was derived from
    std::map<std::string, std::string> transport;
};

// Annulus with m marked intervals on one boundary circle and n on the other,
// disks C_j = (P_j, P_j+1, E_j+1) and D_i = (Q_i, Q_i+1, F_i+1), and the
// standard foliation (1 on boundary half-edges, 0 elsewhere).
SurfaceModel annulus(int m, int n);

// Standard foliation shifted by +w / -w on the two corners that end at T.
Foliation perturbed_foliation(const SurfaceModel& model, int w);

bool balanced_check_annulus(int m, int n, const Foliation& f);

// Replace T by the arc N cutting the square left after removing T into
// (Q_n-1, E_m, N) and (P_m-1, F_n, N).
SurfaceModel pachner_replace_T_with_N(int m, int n);

bool enough_marked_intervals(const SurfaceModel& model);

// S -> P1 -> ... -> P_m-1 -> T and S -> Q1 -> ... -> Q_n-1 -> T.
Quiver build_quiver_V(int m, int n);

// Nested q-brackets [a, b]_q over named leaves.
struct BracketTree {
    Generator leaf;
    std::vector<BracketTree> kids;  // empty for a leaf, else left and right

    static BracketTree make_leaf(const std::string& name) { return {{name, 0}, {}}; }
    static BracketTree bracket(BracketTree a, BracketTree b);
    bool is_leaf() const { return kids.empty(); }
    FreeExpr expr() const;
    std::string to_string() const;
};

std::string simple_generator(const std::string& vertex);  // "z_" + vertex

struct PhiData {
    // arc (and N) -> bracket of simple generators z_<vertex>
    std::map<std::string, BracketTree> dictionary;
    std::map<std::string, HallElement> images;
};

// Images of the arcs of the annulus in the Hall algebra of the opposite of
// build_quiver_V(m, n). ctx must live over that quiver.
PhiData phi_assignment(HallContext& ctx, int m, int n);
void assign_arcs(HallAssignment& assign, const PhiData& phi);
void assign_simples(HallAssignment& assign);  // z_<vertex> -> simple class

struct RoundtripEntry {
    std::string generator;
    std::vector<std::string> steps;  // symbolic rewriting, one line each
    bool symbolic_ok = false;
    bool numeric_ok = false;
};

struct RoundtripReport {
    std::vector<RoundtripEntry> entries;
    bool all_passed() const;
    nlohmann::json to_json() const;
};

// Send each generator to the Hall algebra by the dictionary and back by
// z_S -> S, z_Pi -> Ei, z_Qj -> Fj, z_T -> N, then reduce the result with the
// disk identities; also compare both sides numerically.
RoundtripReport psi_phi_roundtrip(HallContext& ctx, int m, int n);

nlohmann::json surface_to_json(const RibbonGraph& g, const Foliation& f);
Collapsed surface_from_json(const nlohmann::json& j);

}  // namespace dhall
