#include "dhall/hall.hpp"

#include <algorithm>
#include <sstream>

#include "dhall/errors.hpp"

namespace dhall {

// ---------------------------------------------------------------- elements

HallElement::HallElement(HallContext* ctx) : ctx_(ctx) {}

SqrtNum HallElement::coeff(ObjectId id) const {
    auto it = terms_.find(id);
    long s = ctx_ ? ctx_->sqrt_context() : 0;
    return it == terms_.end() ? SqrtNum::rational(Rat(0), s) : it->second;
}

void HallElement::add_term(ObjectId id, const SqrtNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(id);
    if (it == terms_.end()) {
        terms_.emplace(id, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void HallElement::check(const HallElement& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw ContextMismatch("Hall elements from different contexts");
}

HallElement HallElement::operator+(const HallElement& o) const {
    check(o);
    HallElement r = *this;
    if (!r.ctx_) r.ctx_ = o.ctx_;
    for (const auto& [id, c] : o.terms_) r.add_term(id, c);
    return r;
}

HallElement HallElement::operator-() const {
    HallElement r(ctx_);
    for (const auto& [id, c] : terms_) r.terms_.emplace(id, -c);
    return r;
}

HallElement HallElement::operator-(const HallElement& o) const { return *this + (-o); }

HallElement HallElement::scaled(const SqrtNum& c) const {
    HallElement r(ctx_);
    for (const auto& [id, v] : terms_) r.add_term(id, v * c);
    return r;
}

HallElement HallElement::operator*(const HallElement& o) const {
    check(o);
    HallContext* ctx = ctx_ ? ctx_ : o.ctx_;
    if (!ctx) return HallElement();
    return ctx->twisted_product(*this, o);
}

bool HallElement::operator==(const HallElement& o) const {
    check(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [id, c] : terms_) {
        auto it = o.terms_.find(id);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string HallElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [id, c] : terms_) {
        out << (first ? "" : " + ") << "(" << c.to_string() << ")*[" << (ctx_ ? ctx_->describe(id) : std::to_string(id))
            << "]";
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------- registry

HallContext::HallContext(QuiverPtr quiver, Fp p, HallConvention convention, std::uint64_t cap)
    : quiver_(std::move(quiver)), p_(p), convention_(convention), cap_(cap) {
    if (convention_.suspension_shift != 1 && convention_.suspension_shift != -1)
        throw InputError("suspension must act as a shift by +1 or -1");
    classify(DerivedObject(quiver_, p_));  // zero object gets id 0
}

ModuleId HallContext::classify_module(const Rep& m) {
    std::string key = m.exact_key();
    auto it = module_exact_.find(key);
    if (it != module_exact_.end()) return it->second;
    auto& bucket = module_buckets_[fingerprint(m)];
    for (ModuleId id : bucket) {
        if (is_isomorphic(modules_[id], m, cap_)) {
            module_exact_.emplace(key, id);
            return id;
        }
    }
    ModuleId id = modules_.size();
    modules_.push_back(m);
    bucket.push_back(id);
    module_exact_.emplace(key, id);
    return id;
}

ObjectId HallContext::classify(const DerivedObject& x) {
    if (x.quiver() != quiver_ && !(*x.quiver() == *quiver_)) throw ContextMismatch("object over another quiver");
    if (x.prime() != p_) throw ContextMismatch("object over another field");
    ObjectKey key;
    for (const auto& [n, m] : x.parts()) key.emplace_back(n, classify_module(m));
    auto it = object_ids_.find(key);
    if (it != object_ids_.end()) return it->second;
    DerivedObject rep(quiver_, p_);
    for (const auto& [n, mid] : key) rep.add(n, modules_[mid]);
    ObjectId id = objects_.size();
    objects_.push_back(std::move(rep));
    object_keys_.push_back(key);
    object_ids_.emplace(std::move(key), id);
    return id;
}

ObjectId HallContext::shift_id(ObjectId id, int k) {
    if (k == 0) return id;
    ObjectKey key = object_keys_.at(id);
    for (auto& [n, mid] : key) n += k;
    auto it = object_ids_.find(key);
    if (it != object_ids_.end()) return it->second;
    ObjectId nid = objects_.size();
    objects_.push_back(objects_.at(id).shifted(k));
    object_keys_.push_back(key);
    object_ids_.emplace(std::move(key), nid);
    return nid;
}

std::string HallContext::describe(ObjectId id) const {
    const auto& key = object_keys_.at(id);
    if (key.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        const auto& [n, mid] = key[i];
        out << (i ? " + " : "") << "M" << mid << "(";
        const Rep& m = modules_[mid];
        for (VertexId v = 0; v < quiver_->num_vertices(); ++v) out << (v ? "," : "") << m.dim(v);
        out << ")";
        if (n) out << "[" << n << "]";
    }
    return out.str();
}

HallElement HallContext::unit() { return basis(zero_object()); }

HallElement HallContext::basis(ObjectId id) {
    HallElement e(this);
    e.add_term(id, SqrtNum::rational(Rat(1), sqrt_context()));
    return e;
}

HallElement HallContext::simple_class(VertexId v, int shift) {
    return basis(classify(DerivedObject::module(Rep::simple(quiver_, p_, v), shift)));
}

HallElement HallContext::shift(const HallElement& x, int k) {
    HallElement r(this);
    for (const auto& [id, c] : x.terms()) r.add_term(shift_id(id, k), c);
    return r;
}

long long HallContext::euler(ObjectId x, ObjectId y) const {
    return quiver_->euler_form(objects_.at(x).k0_class(), objects_.at(y).k0_class());
}

const HallContext::Realized& HallContext::realized(ObjectId id) {
    auto it = realized_.find(id);
    if (it != realized_.end()) return *it->second;
    auto r = std::make_unique<Realized>();
    r->proj = projective_complex(objects_.at(id));
    r->stalk = stalk_complex(objects_.at(id));
    return *realized_.emplace(id, std::move(r)).first->second;
}

std::uint64_t HallContext::aut(ObjectId x) {
    auto it = aut_cache_.find(x);
    if (it != aut_cache_.end()) return it->second;
    const Realized& r = realized(x);
    DerivedHom end = derived_hom_basis(r.proj, r.stalk);
    std::uint64_t count = 0;
    enumerate_coefficients(end.dim(), p_, cap_, [&](const FpVec& c) {
        if (is_quasi_iso(r.proj, r.stalk, end.combination(c, p_))) ++count;
    });
    aut_cache_.emplace(x, count);
    return count;
}

bool HallContext::cone_matches(const RepComplex& c, ObjectId target) {
    const DerivedObject& t = objects_.at(target);
    auto dims = homology_dims(c);
    if (dims.size() != t.parts().size()) return false;
    for (const auto& [n, m] : t.parts()) {
        auto it = dims.find(-n);
        if (it == dims.end() || it->second != m.dims()) return false;
    }
    auto h = homology(c);
    for (const auto& [n, m] : t.parts())
        if (!is_isomorphic(h.at(-n), m, cap_)) return false;
    return true;
}

Rat HallContext::toen_constant(ObjectId x, ObjectId y, ObjectId l) {
    // invariant under a common shift: normalize so the lowest shift is 0
    int lowest = 0;
    bool any = false;
    for (ObjectId id : {x, y, l}) {
        const auto& key = object_keys_.at(id);
        if (key.empty()) continue;
        lowest = any ? std::min(lowest, key.front().first) : key.front().first;
        any = true;
    }
    ObjectId nx = shift_id(x, -lowest), ny = shift_id(y, -lowest), nl = shift_id(l, -lowest);
    auto key = std::make_tuple(nx, ny, nl);
    auto it = toen_cache_.find(key);
    if (it != toen_cache_.end()) return it->second;
    Rat value = toen_constant_raw(nx, ny, nl);
    toen_cache_.emplace(key, value);
    return value;
}

Rat HallContext::toen_constant_raw(ObjectId x, ObjectId y, ObjectId l) {
    const DerivedObject& ox = objects_.at(x);
    const DerivedObject& ol = objects_.at(l);
    {
        // no triangle X -> L -> Y unless the classes add up
        DimVector sum = ox.k0_class();
        DimVector cy = objects_.at(y).k0_class();
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += cy[i];
        if (sum != ol.k0_class()) return Rat(0);
    }
    const Realized& rx = realized(x);
    const Realized& rl = realized(l);
    DerivedHom hom = derived_hom_basis(rx.proj, rl.stalk);
    std::uint64_t count = 0;
    enumerate_coefficients(hom.dim(), p_, cap_, [&](const FpVec& c) {
        if (cone_matches(cone(rx.proj, rl.stalk, hom.combination(c, p_)), y)) ++count;
    });
    if (count == 0) return Rat(0);
    // signed exponent from Hom(X, L[-n]) and Hom(X, X[-n]), n > 0
    int span = 0;
    auto extent = [&](const DerivedObject& o) {
        for (const auto& [n, m] : o.parts()) span = std::max(span, std::abs(n));
    };
    extent(ox);
    extent(ol);
    long long exponent = 0;
    for (int n = 1; n <= 2 * span + 2; ++n) {
        long long sign = n % 2 == 0 ? 1 : -1;
        exponent += sign * static_cast<long long>(derived_hom_dim_by_modules(ox, ol.shifted(-n)));
        exponent -= sign * static_cast<long long>(derived_hom_dim_by_modules(ox, ox.shifted(-n)));
    }
    Rat value(static_cast<unsigned long>(count));
    value /= Rat(static_cast<unsigned long>(aut(x)));
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), mpz_class(p_).get_mpz_t(), static_cast<unsigned long>(std::llabs(exponent)));
    if (exponent >= 0)
        value *= Rat(pw);
    else
        value /= Rat(pw);
    value.canonicalize();
    return value;
}

std::map<ObjectId, Rat> HallContext::untwisted_product(ObjectId x, ObjectId y) {
    const auto& kx = object_keys_.at(x);
    const auto& ky = object_keys_.at(y);
    if (kx.empty()) return {{y, Rat(1)}};
    if (ky.empty()) return {{x, Rat(1)}};
    int lowest = std::min(kx.front().first, ky.front().first);
    ObjectId nx = shift_id(x, -lowest), ny = shift_id(y, -lowest);
    auto key = std::make_pair(nx, ny);
    auto it = product_cache_.find(key);
    if (it == product_cache_.end()) it = product_cache_.emplace(key, untwisted_product_raw(nx, ny)).first;
    std::map<ObjectId, Rat> out;
    for (const auto& [id, c] : it->second) out.emplace(shift_id(id, lowest), c);
    return out;
}

std::map<ObjectId, Rat> HallContext::untwisted_product_raw(ObjectId x, ObjectId y) {
    // middles of triangles X -> L -> Y are the cones of Y[-1] -> X
    ObjectId ym = shift_id(y, -1);
    const Realized& ry = realized(ym);
    const Realized& rx = realized(x);
    DerivedHom hom = derived_hom_basis(ry.proj, rx.stalk);
    std::vector<ObjectId> middles;
    enumerate_coefficients(hom.dim(), p_, cap_, [&](const FpVec& c) {
        ObjectId l = classify(canonical_form(cone(ry.proj, rx.stalk, hom.combination(c, p_))));
        if (std::find(middles.begin(), middles.end(), l) == middles.end()) middles.push_back(l);
    });
    std::map<ObjectId, Rat> out;
    for (ObjectId l : middles) {
        Rat f = toen_constant(x, y, l);
        if (f != 0) out.emplace(l, f);
    }
    return out;
}

HallElement HallContext::twisted_product(const HallElement& a, const HallElement& b) {
    HallElement out(this);
    const long s = sqrt_context();
    for (const auto& [i, ci] : a.terms()) {
        for (const auto& [j, cj] : b.terms()) {
            long long e;
            std::map<ObjectId, Rat> prod;
            if (convention_.first_factor_is_cone) {
                e = euler(i, j);
                prod = untwisted_product(j, i);
            } else {
                e = euler(j, i);
                prod = untwisted_product(i, j);
            }
            SqrtNum scale = ci * cj * SqrtNum::q_pow(static_cast<int>(e), s);
            for (const auto& [l, f] : prod) out.add_term(l, scale * SqrtNum::rational(f, s));
        }
    }
    return out;
}

HallElement HallContext::qbracket(const HallElement& a, const HallElement& b, int k) {
    return twisted_product(a, b) - twisted_product(b, a).scaled(SqrtNum::q_pow(k, sqrt_context()));
}

nlohmann::json HallContext::element_to_json(const HallElement& e) const {
    nlohmann::json j;
    j["s"] = sqrt_context();
    j["terms"] = nlohmann::json::array();
    for (const auto& [id, c] : e.terms())
        j["terms"].push_back({{"class", id}, {"object", describe(id)}, {"coeff", c.to_string()}});
    return j;
}

nlohmann::json HallContext::registry_to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["quiver"] = quiver_to_json(*quiver_);
    j["modules"] = nlohmann::json::array();
    for (const auto& m : modules_) j["modules"].push_back(rep_to_json(m));
    j["objects"] = nlohmann::json::array();
    for (ObjectId id = 0; id < objects_.size(); ++id) {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& [n, mid] : object_keys_[id]) parts.push_back({{"shift", n}, {"module", mid}});
        j["objects"].push_back({{"id", id}, {"parts", parts}});
    }
    return j;
}

}  // namespace dhall
