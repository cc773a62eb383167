#pragma once

// Derived Hall algebra of a hereditary quiver algebra over F_p, with
// structure constants computed by enumerating morphisms and classifying cones.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "dhall/coeff.hpp"
#include "dhall/dercat.hpp"
#include "json.hpp"

namespace dhall {

using ObjectId = std::size_t;
using ModuleId = std::size_t;

// Which triangle X*Y sums over, and how generator suspension acts on objects.
struct HallConvention {
    // true: X*Y = q^<X,Y> sum_L F^L_{Y,X} L, i.e. X is the cone of Y -> L.
    // false: X*Y = q^<Y,X> sum_L F^L_{X,Y} L, i.e. X is the sub-object.
    bool first_factor_is_cone = true;
    // suspension sigma^n sends an object to its shift by n * suspension_shift
    int suspension_shift = -1;
};

class HallContext;

// Finite combination of iso classes with coefficients in Q(sqrt(p)).
class HallElement {
public:
    HallElement() = default;
    explicit HallElement(HallContext* ctx);

    HallContext* context() const { return ctx_; }
    const std::map<ObjectId, SqrtNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    SqrtNum coeff(ObjectId id) const;
    void add_term(ObjectId id, const SqrtNum& c);

    HallElement operator+(const HallElement& o) const;
    HallElement operator-(const HallElement& o) const;
    HallElement operator-() const;
    HallElement scaled(const SqrtNum& c) const;
    HallElement operator*(const HallElement& o) const;  // twisted product

    bool operator==(const HallElement& o) const;
    bool operator!=(const HallElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check(const HallElement& o) const;
    HallContext* ctx_ = nullptr;
    std::map<ObjectId, SqrtNum> terms_;
};

class HallContext {
public:
    HallContext(QuiverPtr quiver, Fp p, HallConvention convention = {},
                std::uint64_t cap = kDefaultEnumerationCap);
    HallContext(const HallContext&) = delete;
    HallContext& operator=(const HallContext&) = delete;

    const QuiverPtr& quiver() const { return quiver_; }
    Fp prime() const { return p_; }
    long sqrt_context() const { return static_cast<long>(p_); }
    const HallConvention& convention() const { return convention_; }
    std::uint64_t cap() const { return cap_; }

    // Registry of iso classes; ids are assigned in order of first appearance.
    ModuleId classify_module(const Rep& m);
    ObjectId classify(const DerivedObject& x);
    const DerivedObject& object(ObjectId id) const { return objects_.at(id); }
    std::size_t num_objects() const { return objects_.size(); }
    ObjectId zero_object() const { return 0; }
    ObjectId shift_id(ObjectId id, int k);
    std::string describe(ObjectId id) const;

    HallElement unit();
    HallElement zero() { return HallElement(this); }
    HallElement basis(ObjectId id);
    HallElement basis(const DerivedObject& x) { return basis(classify(x)); }
    HallElement simple_class(VertexId v, int shift = 0);
    HallElement shift(const HallElement& x, int k);
    HallElement suspend(const HallElement& x, int n) { return shift(x, n * convention_.suspension_shift); }

    long long euler(ObjectId x, ObjectId y) const;

    // F^L_{X,Y}: morphisms X -> L whose cone is Y, over |Aut X|, corrected by
    // the negative self-extensions of X and negative extensions from X to L.
    Rat toen_constant(ObjectId x, ObjectId y, ObjectId l);
    // sum_L F^L_{X,Y} L over cones L of morphisms Y[-1] -> X
    std::map<ObjectId, Rat> untwisted_product(ObjectId x, ObjectId y);
    HallElement twisted_product(const HallElement& a, const HallElement& b);
    // a*b - q^k b*a
    HallElement qbracket(const HallElement& a, const HallElement& b, int k);

    std::uint64_t aut(ObjectId x);

    nlohmann::json element_to_json(const HallElement& e) const;
    nlohmann::json registry_to_json() const;

private:
    struct Realized {
        ProjComplex proj;
        RepComplex stalk;
    };
    const Realized& realized(ObjectId id);
    std::map<ObjectId, Rat> untwisted_product_raw(ObjectId x, ObjectId y);
    Rat toen_constant_raw(ObjectId x, ObjectId y, ObjectId l);
    bool cone_matches(const RepComplex& c, ObjectId target);

    QuiverPtr quiver_;
    Fp p_;
    HallConvention convention_;
    std::uint64_t cap_;

    std::vector<Rep> modules_;
    std::unordered_map<std::string, ModuleId> module_exact_;
    std::map<std::vector<long long>, std::vector<ModuleId>> module_buckets_;

    using ObjectKey = std::vector<std::pair<int, ModuleId>>;
    std::vector<DerivedObject> objects_;
    std::vector<ObjectKey> object_keys_;
    std::map<ObjectKey, ObjectId> object_ids_;

    std::map<ObjectId, std::unique_ptr<Realized>> realized_;
    std::map<std::tuple<ObjectId, ObjectId, ObjectId>, Rat> toen_cache_;
    std::map<std::pair<ObjectId, ObjectId>, std::map<ObjectId, Rat>> product_cache_;
    std::map<ObjectId, std::uint64_t> aut_cache_;
};

}  // namespace dhall
