#include "dhall/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "dhall/errors.hpp"

namespace dhall {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
    std::string t;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    Rat r;
    if (t.empty() || r.set_str(t, 10) != 0) throw InputError("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const Rat& c) { add_term(0, c); }

QPoly QPoly::monomial(int exp, const Rat& c) {
    QPoly p;
    p.add_term(exp, c);
    return p;
}

void QPoly::add_term(int exp, const Rat& c0) {
    Rat c = c0;
    c.canonicalize();
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int QPoly::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int QPoly::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rat QPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

QPoly QPoly::scaled(const Rat& c) const {
    if (c == 0) return {};
    QPoly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

QPoly QPoly::shifted(int k) const {
    QPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        first = false;
        Rat mag = abs(c);
        if (e == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << "q";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

// ---------------------------------------------------------------- QRat

namespace {

using Dense = std::vector<Rat>;  // index = exponent, trailing entry non-zero

Dense to_dense(const QPoly& p) {
    if (p.is_zero()) return {};
    Dense d(static_cast<size_t>(p.max_exp()) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e)] = c;
    return d;
}

QPoly from_dense(const Dense& d) {
    QPoly p;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) p = p + QPoly::monomial(static_cast<int>(i), d[i]);
    return p;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// Remainder and quotient of a by b (b non-zero).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
    trim(a);
    Dense quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        Rat f = a.back() / b.back();
        quot[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    return {quot, a};
}

Dense gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

QRat::QRat(const Rat& c) : num_(c) {}
QRat::QRat(const QPoly& p) : num_(p) {}

QRat::QRat(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
    if (den.is_zero()) throw DenominatorVanishes("rational function with zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        num_ = QPoly();
        den_ = QPoly(Rat(1));
        return;
    }
    int shift = num_.min_exp() - den_.min_exp();
    Dense n = to_dense(num_.shifted(-num_.min_exp()));
    Dense d = to_dense(den_.shifted(-den_.min_exp()));
    Dense g = gcd(n, d);
    if (g.size() > 1) {
        n = divmod(n, g).first;
        d = divmod(d, g).first;
    }
    Rat lead = d.back();
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
    num_ = from_dense(n).shifted(shift);
    den_ = from_dense(d);
}

QRat QRat::operator+(const QRat& o) const {
    if (den_ == o.den_) return QRat(num_ + o.num_, den_);
    return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator*(const QRat& o) const { return QRat(num_ * o.num_, den_ * o.den_); }

QRat QRat::operator/(const QRat& o) const {
    if (o.is_zero()) throw DenominatorVanishes("division by zero rational function");
    return QRat(num_ * o.den_, den_ * o.num_);
}

std::string QRat::to_string() const {
    if (den_ == QPoly(Rat(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------- SqrtNum

SqrtNum::SqrtNum(Rat a, Rat b, long s) : a_(std::move(a)), b_(std::move(b)), s_(s) {
    if (s_ < 0) throw InputError("sqrt context must be non-negative");
    a_.canonicalize();
    b_.canonicalize();
}

SqrtNum SqrtNum::q_pow(int k, long s) {
    int half = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
    int odd = k - 2 * half;
    Rat base(1);
    mpz_class sz(s);
    if (half > 0) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), sz.get_mpz_t(), static_cast<unsigned long>(half));
        base = Rat(pw);
    } else if (half < 0) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), sz.get_mpz_t(), static_cast<unsigned long>(-half));
        base = Rat(1) / Rat(pw);
    }
    base.canonicalize();
    return odd ? SqrtNum(Rat(0), base, s) : SqrtNum(base, Rat(0), s);
}

void SqrtNum::check_context(const SqrtNum& o) const {
    if (s_ != 0 && o.s_ != 0 && s_ != o.s_)
        throw ContextMismatch("sqrt contexts differ: " + std::to_string(s_) + " vs " +
                              std::to_string(o.s_));
}

SqrtNum SqrtNum::operator+(const SqrtNum& o) const {
    check_context(o);
    return SqrtNum(a_ + o.a_, b_ + o.b_, s_ ? s_ : o.s_);
}

SqrtNum SqrtNum::operator-(const SqrtNum& o) const {
    check_context(o);
    return SqrtNum(a_ - o.a_, b_ - o.b_, s_ ? s_ : o.s_);
}

SqrtNum SqrtNum::operator-() const { return SqrtNum(-a_, -b_, s_); }

SqrtNum SqrtNum::operator*(const SqrtNum& o) const {
    check_context(o);
    long s = s_ ? s_ : o.s_;
    return SqrtNum(a_ * o.a_ + b_ * o.b_ * s, a_ * o.b_ + b_ * o.a_, s);
}

SqrtNum SqrtNum::inverse() const {
    Rat norm = a_ * a_ - b_ * b_ * s_;
    if (norm == 0) throw DenominatorVanishes("inverting zero in Q(sqrt(s))");
    return SqrtNum(a_ / norm, -b_ / norm, s_);
}

SqrtNum SqrtNum::operator/(const SqrtNum& o) const {
    check_context(o);
    SqrtNum d = o;
    if (d.s_ == 0) d.s_ = s_;
    return *this * d.inverse();
}

bool SqrtNum::operator==(const SqrtNum& o) const {
    check_context(o);
    return a_ == o.a_ && b_ == o.b_;
}

std::string SqrtNum::to_string() const {
    return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + std::to_string(s_) + ")";
}

SqrtNum SqrtNum::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto star = t.find("*sqrt(");
    if (star == std::string::npos || t.back() != ')')
        throw InputError("malformed coefficient '" + text + "'");
    std::string s_part = t.substr(star + 6, t.size() - star - 7);
    std::string head = t.substr(0, star);
    // split head "a+b" / "a-b" at the last sign that is not leading or after '/'
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) throw InputError("malformed coefficient '" + text + "'");
    Rat a = rat_from_string(head.substr(0, split));
    Rat b = rat_from_string(head.substr(split));
    char* end = nullptr;
    long s = std::strtol(s_part.c_str(), &end, 10);
    if (end == s_part.c_str() || *end != '\0') throw InputError("malformed sqrt context in '" + text + "'");
    return SqrtNum(a, b, s);
}

SqrtNum qpoly_eval(const QPoly& p, long s) {
    SqrtNum acc = SqrtNum::rational(Rat(0), s);
    for (const auto& [e, c] : p.terms()) acc += SqrtNum::q_pow(e, s) * SqrtNum::rational(c, s);
    return acc;
}

SqrtNum qrat_eval(const QRat& r, long s) {
    SqrtNum d = qpoly_eval(r.den(), s);
    if (d.is_zero())
        throw DenominatorVanishes("denominator " + r.den().to_string() + " vanishes at q=sqrt(" +
                                  std::to_string(s) + ")");
    return qpoly_eval(r.num(), s) / d;
}

}  // namespace dhall
