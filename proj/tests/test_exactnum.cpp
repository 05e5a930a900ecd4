#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burkhardt/arith.hpp"
#include "burkhardt/cyclo3.hpp"
#include "burkhardt/kummer.hpp"

#include <random>

using namespace burkhardt;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

Cyclo3 random_cyclo(std::mt19937_64& rng) { return {random_rational(rng), random_rational(rng)}; }

KummerCoeff random_kummer(std::mt19937_64& rng) {
    const VarList& st = KummerCoeff::ambient();
    auto comp = [&] {
        QPoly p(st);
        std::uniform_int_distribution<int> e(0, 2);
        for (int i = 0; i < 3; ++i) {
            p.add_term(Monomial({static_cast<Exponent>(e(rng)), static_cast<Exponent>(e(rng))}),
                       random_rational(rng));
        }
        return p;
    };
    return {comp(), comp(), comp(), comp()};
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational::parse("-3/2") == r);
    CHECK(Rational::parse("12/8").to_string() == "3/2");
    CHECK(Rational::parse(r.to_string()) == r);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("rational field laws on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Rational::parse(a.to_string()) == a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("cyclotomic multiplication") {
    const Cyclo3 z = Cyclo3::zeta();
    CHECK(z * z == Cyclo3(-1, -1));
    const Cyclo3 w(1, 2);
    CHECK(w * w == Cyclo3(-3));
    CHECK(Cyclo3(3) * Cyclo3(5) == Cyclo3(15));
    CHECK(z * z * z == Cyclo3(1));
}

TEST_CASE("cyclotomic conjugation") {
    CHECK(Cyclo3::zeta().conj() == Cyclo3(-1, -1));
    CHECK(Cyclo3(5).conj() == Cyclo3(5));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Cyclo3 x = random_cyclo(rng);
        const Cyclo3 y = random_cyclo(rng);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        const Cyclo3 n = x * x.conj();
        CHECK(n.is_rational());
        CHECK(n.a() == x.norm());
        if (!x.is_zero()) {
            CHECK(n.a() > Rational(0));
            CHECK(x * x.inverse() == Cyclo3(1));
        }
    }
}

TEST_CASE("cyclotomic text form") {
    CHECK(Cyclo3(1, -2).to_string() == "1-2*z");
    CHECK(Cyclo3(0, 1).to_string() == "z");
    CHECK(Cyclo3(0, -1).to_string() == "-z");
    CHECK(Cyclo3(Rational(Integer(1), Integer(3)), 0).to_string() == "1/3");
    for (const char* s : {"2+3*z", "-1/3-z", "z", "-5", "1/2*z", "0"}) {
        CHECK(Cyclo3::parse(Cyclo3::parse(s).to_string()) == Cyclo3::parse(s));
    }
    CHECK(Cyclo3::parse("2+3*z") == Cyclo3(2, 3));
    CHECK(Cyclo3::parse("-3*z-5") == Cyclo3(-5, -3));
    CHECK_THROWS(Cyclo3::parse("2+w"));
}

TEST_CASE("kummer multiplication table") {
    const VarList& st = KummerCoeff::ambient();
    const QPoly s = QPoly::variable(st, 0);
    const QPoly t = QPoly::variable(st, 1);
    const KummerCoeff rs = KummerCoeff::sqrt_s();
    const KummerCoeff rt = KummerCoeff::sqrt_t();
    const KummerCoeff rst = KummerCoeff::sqrt_st();
    CHECK(rs * rt == rst);
    CHECK(rs * rs == KummerCoeff(s, QPoly(st), QPoly(st), QPoly(st)));
    CHECK(rt * rt == KummerCoeff(t, QPoly(st), QPoly(st), QPoly(st)));
    CHECK(rst * rst == KummerCoeff(s * t, QPoly(st), QPoly(st), QPoly(st)));
    CHECK(rs * rst == KummerCoeff(QPoly(st), QPoly(st), s, QPoly(st)));
    CHECK(rt * rst == KummerCoeff(QPoly(st), t, QPoly(st), QPoly(st)));
    CHECK((rs * rs).is_rational_component_only());
    CHECK((rst * rst).is_rational_component_only());
}

TEST_CASE("kummer algebra laws on random triples") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const KummerCoeff a = random_kummer(rng);
        const KummerCoeff b = random_kummer(rng);
        const KummerCoeff c = random_kummer(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(KummerCoeff::parse(a.to_string()) == a);
    }
}

TEST_CASE("integer factorization") {
    auto f = factor(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0].prime == 2);
    CHECK(f[0].exponent == 3);
    CHECK(f[2].prime == 5);
    // a product of two primes beyond the trial-division range
    const Integer p("1000000007");
    const Integer q("998244353");
    auto g = factor(p * q * q);
    REQUIRE(g.size() == 2);
    CHECK(g[0].prime == q);
    CHECK(g[0].exponent == 2);
    CHECK(g[1].prime == p);
    CHECK(squarefree_kernel(Rational(Integer(-12), Integer(5))) == -15);
    CHECK(squarefree_kernel(Rational(49)) == 1);
    CHECK(valuation(Integer(-96), Integer(2)) == 5);
    CHECK(exact_sqrt(Integer(144)) == 12);
    CHECK(exact_sqrt(Integer(145)) == -1);
}
