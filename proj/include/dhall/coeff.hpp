#pragma once

// Exact coefficients: rationals, Laurent polynomials and rational functions
// in q, and numbers a + b*sqrt(s) for evaluating at q = sqrt(s).

#include <gmpxx.h>

#include <map>
#include <string>

namespace dhall {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Laurent polynomial sum c_k q^k, zero coefficients never stored.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& c);
    static QPoly monomial(int exp, const Rat& c = Rat(1));
    static QPoly q() { return monomial(1); }

    const std::map<int, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Rat coeff(int exp) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const Rat& c) const;
    QPoly shifted(int k) const;  // multiply by q^k

    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void add_term(int exp, const Rat& c);
    std::map<int, Rat> terms_;
};

// Reduced rational function num/den. The denominator is an ordinary monic
// polynomial with non-zero constant term; powers of q live in the numerator.
class QRat {
public:
    QRat() = default;
    QRat(const Rat& c);  // NOLINT(google-explicit-constructor)
    QRat(const QPoly& p);  // NOLINT(google-explicit-constructor)
    QRat(const QPoly& num, const QPoly& den);

    static QRat q_pow(int k) { return QRat(QPoly::monomial(k)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator-() const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }

    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();
    QPoly num_;
    QPoly den_{Rat(1)};
};

// a + b*sqrt(s). Arithmetic requires equal s; s = 1 is never used.
class SqrtNum {
public:
    SqrtNum() = default;
    SqrtNum(Rat a, Rat b, long s);
    static SqrtNum rational(const Rat& a, long s) { return SqrtNum(a, Rat(0), s); }
    static SqrtNum q_pow(int k, long s);  // sqrt(s)^k

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long s() const { return s_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    SqrtNum operator+(const SqrtNum& o) const;
    SqrtNum operator-(const SqrtNum& o) const;
    SqrtNum operator-() const;
    SqrtNum operator*(const SqrtNum& o) const;
    SqrtNum operator/(const SqrtNum& o) const;
    SqrtNum inverse() const;
    SqrtNum& operator+=(const SqrtNum& o) { return *this = *this + o; }
    SqrtNum& operator-=(const SqrtNum& o) { return *this = *this - o; }
    SqrtNum& operator*=(const SqrtNum& o) { return *this = *this * o; }

    bool operator==(const SqrtNum& o) const;
    bool operator!=(const SqrtNum& o) const { return !(*this == o); }

    std::string to_string() const;  // "a + b*sqrt(s)"
    static SqrtNum parse(const std::string& text);

private:
    void check_context(const SqrtNum& o) const;
    Rat a_{0};
    Rat b_{0};
    long s_{0};  // 0 means "no context yet": adopts the partner's s
};

SqrtNum qpoly_eval(const QPoly& p, long s);
SqrtNum qrat_eval(const QRat& r, long s);

}  // namespace dhall
