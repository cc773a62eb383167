#pragma once

// Free algebra over Q(q) on suspended generators, the relation families that
// present disk, glued and annulus algebras and composition algebras of
// quivers, and checking of relations by evaluation in a Hall context.

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dhall/coeff.hpp"
#include "dhall/hall.hpp"
#include "dhall/quiver.hpp"
#include "json.hpp"

namespace dhall {

struct Generator {
    std::string name;
    int susp = 0;

    Generator suspended(int k) const { return {name, susp + k}; }
    std::string to_string() const;
    auto operator<=>(const Generator&) const = default;
};

using Word = std::vector<Generator>;

class FreeExpr {
public:
    FreeExpr() = default;
    static FreeExpr scalar(const QRat& c);
    static FreeExpr gen(const std::string& name, int susp = 0);
    static FreeExpr gen(const Generator& g);

    const std::map<Word, QRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const QRat& c);

    FreeExpr operator+(const FreeExpr& o) const;
    FreeExpr operator-(const FreeExpr& o) const;
    FreeExpr operator-() const;
    FreeExpr operator*(const FreeExpr& o) const;
    FreeExpr scaled(const QRat& c) const;
    FreeExpr suspended(int k) const;

    bool operator==(const FreeExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeExpr& o) const { return !(*this == o); }

    std::set<std::string> generator_names() const;
    std::string to_string() const;

private:
    std::map<Word, QRat> terms_;
};

// x*y - q^k y*x
FreeExpr qbracket(const FreeExpr& x, const FreeExpr& y, int k);

// Replace every occurrence of sigma^s(name) by sigma^s(replacement).
FreeExpr substitute(const FreeExpr& e, const std::string& name, const FreeExpr& replacement);

// q^-1 / (q^2 - 1)
QRat self_extension_constant();

enum class RelationFamily { R1, R2, G1, G3, K0, K1, K2, DDP, NAIVE };
std::string family_name(RelationFamily f);

struct Relation {
    RelationFamily family;
    FreeExpr lhs;
    FreeExpr rhs;
    std::string source;
};

struct Presentation {
    std::vector<std::string> generators;
    // cyclic order of boundary arcs, for presentations of disks
    std::vector<std::string> boundary;
    std::vector<Relation> relations;

    bool declares(const std::string& name) const;
    void add(RelationFamily family, FreeExpr lhs, FreeExpr rhs, std::string source);
    // Throws UnknownGenerator if a relation uses an undeclared generator.
    void validate() const;
    nlohmann::json to_json() const;
};

// Relations (R1) and (R2) of a triangle with boundary arcs in cyclic order and
// corner degrees h[i] for the corner from arc i to arc i+1. The k-indexed
// families are instantiated for k in [-window, window + 1].
Presentation triangle_presentation(const std::array<std::string, 3>& names, const std::array<int, 3>& h,
                                   int window);
Presentation triangle_presentation(const std::array<int, 3>& h, int window);  // arcs E1, E2, E3

// Corner degrees of the disk built by the triangle fan below.
std::vector<int> fan_foliation(int m);
// Suspension offsets a_k with E_k(h) = sigma^{a_k} E_k(fan); a_1 = 0.
std::vector<int> regrading_offsets(const std::vector<int>& h);

// Disk with m boundary arcs E1..Em and corner degrees h (sum m - 2).
// For m >= 4 it is glued from a fan of triangles and internal arcs are
// eliminated.
Presentation disk_presentation(int m, const std::vector<int>& h, int window);

class HallAssignment;
// Images of E1..Em in the Hall algebra of the opposite linear quiver on m - 1
// vertices: the fan arcs are nested brackets of simples, regraded by h.
void assign_disk(HallAssignment& assign, const std::vector<int>& h);

// Pairs (k, l) of boundary positions (1-based, cyclic) that meet a common
// marked interval after gluing arc i of the first disk to arc j of the second.
std::set<std::pair<int, int>> gluing_near_pairs(int i, int j, int n1, int n2);

// Free product modulo identification of arc i of a with arc j of b (G1) and
// commutation of arcs away from the pairs in near (G3). Positions are 1-based.
Presentation glue_presentations(const Presentation& a, const Presentation& b, int i, int j,
                                const std::set<std::pair<int, int>>& near, int window);

// Relations of the naive algebra of the annulus with m and n marked
// intervals on its boundary circles.
Presentation naive_annulus_presentation(int m, int n, int window);

// The twelve disk identities around arcs T and N.
Presentation ddp_relations(int m, int n);

// Composition algebra of an acyclic quiver, generators named by vertices.
Presentation k_presentation(const Quiver& quiver, int window);

// Images of generators in a Hall context, suspended on demand.
class HallAssignment {
public:
    explicit HallAssignment(HallContext& ctx) : ctx_(&ctx) {}
    HallContext& context() const { return *ctx_; }
    void set(const std::string& name, const HallElement& image);
    bool has(const std::string& name) const { return base_.count(name) > 0; }
    const HallElement& image(const Generator& g);

private:
    HallContext* ctx_;
    std::map<std::string, HallElement> base_;
    std::map<Generator, HallElement> cache_;
};

HallElement evaluate(const FreeExpr& e, HallAssignment& assign);

struct RelationCheck {
    std::size_t index;
    RelationFamily family;
    std::string source;
    int shift;
    bool passed;
    std::string residual;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_passed() const;
    std::size_t failures() const;
    nlohmann::json to_json() const;
};

// Evaluate sigma^s(lhs - rhs) for every relation and every s in [-window, window].
RelationReport check_relations(const Presentation& pres, HallAssignment& assign, int window);

}  // namespace dhall
