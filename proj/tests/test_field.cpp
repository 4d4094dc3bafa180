#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "index2/field.hpp"

#include <random>

using index2::FieldElement;
using index2::Rational;

TEST_CASE("golden ratio arithmetic") {
    FieldElement tau = FieldElement::tau();
    CHECK(tau * tau == tau + FieldElement(1));
    CHECK(tau * (tau - FieldElement(1)) == FieldElement(1));
    CHECK(tau.inverse() == tau - FieldElement(1));
    CHECK(FieldElement::sqrt5() * FieldElement::sqrt5() == FieldElement(5));
    CHECK((FieldElement(2) * tau - FieldElement(1)) == FieldElement::sqrt5());
}

TEST_CASE("exact sign with mixed rational and irrational parts") {
    FieldElement s5 = FieldElement::sqrt5();
    CHECK(FieldElement(0).sign() == 0);
    CHECK((s5 - FieldElement(2)).sign() == 1);                      // sqrt5 > 2
    CHECK((FieldElement(Rational(9, 4)) - s5).sign() == 1);         // 2.25 > sqrt5
    CHECK((s5 - FieldElement(Rational(9, 4))).sign() == -1);
    CHECK((FieldElement(3) - s5).sign() == 1);
    CHECK((-FieldElement(1) - s5).sign() == -1);
    CHECK((FieldElement(1) - s5).sign() == -1);
    CHECK(FieldElement(Rational(1, 1000000)).sign() == 1);
}

TEST_CASE("sign agrees with double evaluation on random elements") {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
    for (int i = 0; i < 500; ++i) {
        FieldElement x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        double d = x.toDouble();
        if (std::abs(d) > 1e-9) CHECK(x.sign() == (d > 0 ? 1 : -1));
    }
}

TEST_CASE("field operations") {
    FieldElement a(Rational(3, 2), Rational(-1, 7));
    FieldElement b(Rational(-2, 5), Rational(4, 3));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a * (a.inverse()) == FieldElement(1));
    CHECK(a / b * b == a);
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a * a.conjugate()).isRational());
    CHECK_THROWS_AS(FieldElement(0).inverse(), std::domain_error);
}

TEST_CASE("parsing and printing") {
    auto tau = FieldElement::parse("1/2+1/2√5");
    REQUIRE(tau.has_value());
    CHECK(*tau == FieldElement::tau());
    CHECK(FieldElement::parse("1/2 + 1/2*sqrt(5)") == FieldElement::tau());
    CHECK(FieldElement::parse("0.5+0.5s5") == FieldElement::tau());
    CHECK(FieldElement::parse("2+sqrt5") == FieldElement(2) + FieldElement::sqrt5());
    CHECK(FieldElement::parse("-√5") == -FieldElement::sqrt5());
    CHECK(FieldElement::parse("2-3/7√5") ==
          FieldElement(Rational(2), Rational(-3, 7)));
    CHECK(FieldElement::parse("3") == FieldElement(3));
    CHECK(FieldElement::parse("0.25") == FieldElement(Rational(1, 4)));
    CHECK_FALSE(FieldElement::parse("").has_value());
    CHECK_FALSE(FieldElement::parse("1/0").has_value());
    CHECK_FALSE(FieldElement::parse("x+2").has_value());
    CHECK_FALSE(FieldElement::parse("sqrt(7)").has_value());

    for (const char* text : {"1/2+1/2√5", "-2", "3/4-8√5", "0", "√5"}) {
        auto v = FieldElement::parse(text);
        REQUIRE(v.has_value());
        CHECK(FieldElement::parse(v->str()) == *v);
    }
}

TEST_CASE("root quotient comparison") {
    using index2::compareRootQuotients;
    FieldElement one(1), two(2), three(3);
    // 1/sqrt(2) vs 1/sqrt(3)
    CHECK(compareRootQuotients(one, two, one, three) == 1);
    CHECK(compareRootQuotients(one, three, one, two) == -1);
    CHECK(compareRootQuotients(one, two, one, two) == 0);
    // 2/sqrt(4a) == 1/sqrt(a)
    FieldElement a = three + FieldElement::sqrt5();
    CHECK(compareRootQuotients(two, FieldElement(4) * a, one, a) == 0);
    // signs dominate
    CHECK(compareRootQuotients(-one, two, one, three) == -1);
    CHECK(compareRootQuotients(one, two, -one, three) == 1);
    CHECK(compareRootQuotients(-one, two, -one, three) == -1);  // -0.707 < -0.577
    CHECK(compareRootQuotients(FieldElement(0), two, one, three) == -1);
    CHECK_THROWS_AS(compareRootQuotients(one, FieldElement(0), one, two), std::domain_error);
}

TEST_CASE("root quotient comparison agrees with doubles") {
    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> num(-20, 20), pos(1, 20);
    for (int i = 0; i < 300; ++i) {
        FieldElement x(num(rng)), y(num(rng));
        FieldElement ax(pos(rng)), ay(pos(rng));
        double lhs = x.toDouble() / std::sqrt(ax.toDouble());
        double rhs = y.toDouble() / std::sqrt(ay.toDouble());
        int cmp = index2::compareRootQuotients(x, ax, y, ay);
        if (std::abs(lhs - rhs) > 1e-9) CHECK(cmp == (lhs > rhs ? 1 : -1));
        else CHECK(cmp == 0);
    }
}

TEST_CASE("ordering is total and consistent") {
    FieldElement vals[] = {FieldElement(0), FieldElement::tau(), -FieldElement::tau(),
                           FieldElement(2), FieldElement::sqrt5(), FieldElement(Rational(9, 4))};
    for (const auto& x : vals)
        for (const auto& y : vals) {
            CHECK(((x < y) + (y < x) + (x == y)) == 1);
            if (x < y) CHECK(x.toDouble() < y.toDouble() + 1e-12);
        }
}
