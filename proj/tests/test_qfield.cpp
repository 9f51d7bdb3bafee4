#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsd/ratfunc.hpp"

using namespace qsd;

namespace {

Poly P(std::initializer_list<int> asc) {
    std::vector<Rational> c;
    for (int x : asc)
        c.emplace_back(x);
    return Poly(c);
}

// Deterministic LCG for the property tests.
struct Rng {
    unsigned long s = 0x9e3779b97f4a7c15UL;
    int next(int lo, int hi) {
        s = s * 6364136223846793005UL + 1442695040888963407UL;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
};

RatFunc random_ratfunc(Rng& rng) {
    auto poly = [&] {
        std::vector<Rational> c;
        int deg = rng.next(0, 3);
        for (int i = 0; i <= deg; ++i)
            c.emplace_back(rng.next(-4, 4));
        return Poly(c);
    };
    Poly den;
    while (den.is_zero())
        den = poly();
    return RatFunc(poly(), den);
}

}  // namespace

TEST_CASE("normalize: canonical representatives") {
    // (q^2-1)/(q-1) = q+1
    CHECK(RatFunc(P({-1, 0, 1}), P({-1, 1})) == RatFunc(P({1, 1})));
    // 0/q^3 = 0
    RatFunc z(P({}), Poly::monomial(3));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
    // 2q/2 = q (content and monic normalization)
    RatFunc f(P({0, 2}), P({2}));
    CHECK(f == RatFunc::q());
    CHECK(f.den().is_one());
    CHECK_THROWS_WITH_AS(RatFunc(P({1}), P({})), "division by zero polynomial",
                         std::domain_error);
}

TEST_CASE("normalize is idempotent") {
    Rng rng;
    for (int t = 0; t < 50; ++t) {
        RatFunc x = random_ratfunc(rng);
        CHECK(RatFunc(x.num(), x.den()) == x);
    }
}

TEST_CASE("q_int values") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == RatFunc(1));
    // [2] = q + q^{-1} = (q^2+1)/q
    CHECK(q_int(2) == RatFunc(P({1, 0, 1}), P({0, 1})));
    // Oracle for [3]: divide q^6-1 by q^2-1 exactly, then shift by q^2.
    auto [quo, rem] = Poly::divmod(P({-1, 0, 0, 0, 0, 0, 1}), P({-1, 0, 1}));
    REQUIRE(rem.is_zero());
    CHECK(q_int(3) == RatFunc(quo, Poly::monomial(2)));
}

TEST_CASE("q_int defining identity") {
    RatFunc lhs_den = RatFunc::q_pow(1) - RatFunc::q_pow(-1);
    for (int k = 0; k <= 8; ++k)
        CHECK(q_int(k) * lhs_den == RatFunc::q_pow(k) - RatFunc::q_pow(-k));
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0) == RatFunc(1));
    CHECK(q_factorial(2) == q_int(2));
    auto [q3, rem] = Poly::divmod(P({-1, 0, 0, 0, 0, 0, 1}), P({-1, 0, 1}));
    REQUIRE(rem.is_zero());
    CHECK(q_factorial(3) == q_int(2) * RatFunc(q3, Poly::monomial(2)));
}

TEST_CASE("specialize") {
    RatFunc f = RatFunc::q_pow(1) + RatFunc::q_pow(-1);
    CHECK(f.specialize(Rational(2)) == Rational(5, 2));
    RatFunc pole = RatFunc(P({1}), P({-1, 1}));
    CHECK_THROWS_WITH_AS(pole.specialize(Rational(1)), "specialization pole", std::domain_error);
    // q_factorial(3) at 5/7, against a direct rational computation
    Rational a(5, 7);
    Rational v2 = a + a.inverse();
    Rational v3 = a * a + Rational(1) + (a * a).inverse();
    CHECK(q_factorial(3).specialize(a) == v2 * v3);
}

TEST_CASE("specialize is a ring homomorphism where defined") {
    Rng rng;
    Rational a(3, 5);
    for (int t = 0; t < 30; ++t) {
        RatFunc f = random_ratfunc(rng);
        RatFunc g = random_ratfunc(rng);
        try {
            Rational lhs = (f * g).specialize(a);
            CHECK(lhs == f.specialize(a) * g.specialize(a));
            Rational s = (f + g).specialize(a);
            CHECK(s == f.specialize(a) + g.specialize(a));
        } catch (const std::domain_error&) {
            // pole at the sample point; nothing to compare
        }
    }
}

TEST_CASE("field axioms on random triples") {
    Rng rng;
    for (int t = 0; t < 25; ++t) {
        RatFunc a = random_ratfunc(rng);
        RatFunc b = random_ratfunc(rng);
        RatFunc c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero())
            CHECK(a * a.inverse() == RatFunc(1));
        CHECK(a + (-a) == RatFunc());
    }
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational::parse("5/-7") == Rational(-5, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(2).inverse() / Rational(0), std::domain_error);
    CHECK(factorial(4) == Rational(24));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(q_int(2).to_string() == "q^2+1/q");
    CHECK(RatFunc(3).to_string() == "3");
    CHECK(RatFunc().to_string() == "0");
    CHECK((RatFunc::q_pow(2) * RatFunc(Rational(2)) - RatFunc(1)).to_string() == "2*q^2-1");
}
