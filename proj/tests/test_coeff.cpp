#include <random>

#include "dhall/coeff.hpp"
#include "dhall/errors.hpp"
#include "doctest.h"

using namespace dhall;

namespace {

QPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 3), coef(-4, 4), terms(0, 3);
    QPoly p;
    for (int i = terms(rng); i > 0; --i) p = p + QPoly::monomial(exp(rng), Rat(coef(rng), 1 + (rng() % 3)));
    return p;
}

QRat random_qrat(std::mt19937& rng) {
    QPoly den = random_poly(rng);
    if (den.is_zero()) den = QPoly(Rat(1));
    return QRat(random_poly(rng), den);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_to_string(rat_from_string("6/4")) == "3/2");
    CHECK(rat_from_string("-2") == Rat(-2));
    CHECK_THROWS_AS(rat_from_string("x"), InputError);
}

TEST_CASE("rational functions reduce to a canonical form") {
    QPoly q = QPoly::q();
    QPoly one(Rat(1));
    QRat a(q * q - one, q - one);  // q + 1
    CHECK(a == QRat(q + one));
    QRat b(QPoly::monomial(-1), q * q - one);
    CHECK(b.den() == q * q - one);
    CHECK(b.num() == QPoly::monomial(-1));
    CHECK(QRat(q.scaled(Rat(2)), q.scaled(Rat(4))) == QRat(Rat(1, 2)));
    CHECK((b - b).is_zero());
}

TEST_CASE("evaluation at sqrt(s)") {
    QRat r(QPoly::monomial(-1), QPoly::monomial(2) - QPoly(Rat(1)));
    // q^-1 / (q^2 - 1) at q = sqrt 2 is 1/sqrt 2 = (1/2) sqrt 2
    CHECK(qrat_eval(r, 2) == SqrtNum(Rat(0), Rat(1, 2), 2));
    // at q = sqrt 3: 1/(2 sqrt 3) = (1/6) sqrt 3
    CHECK(qrat_eval(r, 3) == SqrtNum(Rat(0), Rat(1, 6), 3));
    CHECK_THROWS_AS(qrat_eval(r, 1), DenominatorVanishes);
    CHECK(SqrtNum::q_pow(-3, 2) == SqrtNum(Rat(0), Rat(1, 4), 2));
    CHECK(SqrtNum::q_pow(4, 3) == SqrtNum(Rat(9), Rat(0), 3));
}

TEST_CASE("sqrt numbers: arithmetic, context, text round trip") {
    SqrtNum x(Rat(1, 2), Rat(-3), 2), y(Rat(2), Rat(1, 3), 2);
    CHECK(x * y / y == x);
    CHECK((x + y) - y == x);
    CHECK(SqrtNum::parse(x.to_string()) == x);
    CHECK(SqrtNum::parse("-1/2 + -7/3*sqrt(3)") == SqrtNum(Rat(-1, 2), Rat(-7, 3), 3));
    CHECK_THROWS_AS(x + SqrtNum(Rat(1), Rat(0), 3), ContextMismatch);
    CHECK_THROWS_AS(SqrtNum::parse("1 + 2"), InputError);
}

TEST_CASE("property: field axioms and evaluation is a ring map") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        for (long s : {2L, 3L, 5L}) {
            try {
                SqrtNum ea = qrat_eval(a, s), eb = qrat_eval(b, s);
                CHECK(qrat_eval(a * b, s) == ea * eb);
                CHECK(qrat_eval(a + b, s) == ea + eb);
            } catch (const DenominatorVanishes&) {
            }
        }
    }
}
