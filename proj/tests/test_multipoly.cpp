#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burkhardt/cyclo3.hpp"
#include "burkhardt/matrix.hpp"
#include "burkhardt/polynomial.hpp"
#include "burkhardt/symmetric.hpp"
#include "burkhardt/upoly.hpp"

#include <random>

using namespace burkhardt;

namespace {

QPoly random_poly(std::mt19937_64& rng, const VarList& vars, int terms, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<long> c(-9, 9);
    QPoly p(vars);
    for (int i = 0; i < terms; ++i) {
        Monomial m(vars.size());
        for (std::size_t k = 0; k < vars.size(); ++k) m[k] = static_cast<Exponent>(e(rng));
        p.add_term(m, Rational(c(rng)));
    }
    return p;
}

LinearMap<Rational> random_map(std::mt19937_64& rng, const VarList& src, const VarList& dst) {
    std::uniform_int_distribution<long> c(-3, 3);
    LinearMap<Rational> m{src, dst, {}};
    m.matrix.assign(dst.size(), std::vector<Rational>(src.size()));
    for (auto& row : m.matrix) {
        for (auto& x : row) x = Rational(c(rng));
    }
    return m;
}

const VarList kY = VarList::indexed("y", 0, 5);

QPoly burkhardt_form() {
    return QPoly::parse("y0^4+y0*y1^3+y0*y2^3+y0*y3^3+y0*y4^3+3*y1*y2*y3*y4", kY);
}

}  // namespace

TEST_CASE("basic arithmetic") {
    const VarList v{"y0", "y1"};
    const QPoly a = QPoly::parse("y0+y1", v);
    CHECK(a.pow(2) == QPoly::parse("y0^2+2*y0*y1+y1^2", v));
    CHECK((a * QPoly(v)).is_zero());
    CHECK(burkhardt_form().term_count() == 6);
    CHECK(burkhardt_form().coefficient(Monomial({0, 1, 1, 1, 1})) == Rational(3));
    CHECK_THROWS_AS(a + QPoly::parse("y0", VarList{"y0", "y2"}), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    std::mt19937_64 rng(3);
    const VarList v = VarList::indexed("x", 1, 4);
    for (int i = 0; i < 100; ++i) {
        const QPoly p = random_poly(rng, v, 6, 3) * Rational(Integer(1), Integer(1 + i % 4));
        CHECK(QPoly::parse(p.to_string(), v) == p);
        CHECK(QPoly::parse(p.to_string(), v).to_string() == p.to_string());
    }
    CHECK(QPoly::parse(" 2 * x1 ^ 2 - x2 ", v).to_string() == "2*x1^2-x2");
    CHECK(scan_variable_names("x10*x2+(1-2*z)*x1") == std::vector<std::string>{"x1", "x2", "x10"});
}

TEST_CASE("parse errors carry an offset") {
    const VarList v{"x", "y"};
    try {
        (void)QPoly::parse("x+*y", v);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(QPoly::parse("x+w", v), ParseError);
    CHECK_THROWS_AS(QPoly::parse("x^", v), ParseError);
    CHECK_THROWS_AS(QPoly::parse("(1/2", v), ParseError);
}

TEST_CASE("cyclotomic coefficients in text") {
    const VarList v{"t1", "t2"};
    using CPoly = Polynomial<Cyclo3>;
    const CPoly p = CPoly::parse("(1-2*z)*t1^2+(z)*t2-3", v);
    CHECK(p.coefficient(Monomial({2, 0})) == Cyclo3(1, -2));
    CHECK(p.coefficient(Monomial({0, 1})) == Cyclo3::zeta());
    CHECK(CPoly::parse(p.to_string(), v) == p);
}

TEST_CASE("derivatives") {
    const QPoly f = burkhardt_form();
    CHECK(f.derivative("y0") == QPoly::parse("4*y0^3+y1^3+y2^3+y3^3+y4^3", kY));
    CHECK(QPoly(kY, Rational(5)).derivative(0).is_zero());
    const std::vector<Rational> pt{0, 1, -1, 0, 0};
    for (std::size_t i = 0; i < 5; ++i) CHECK(f.derivative(i).evaluate(pt).is_zero());
    CHECK_THROWS(f.derivative("w"));
}

TEST_CASE("evaluation") {
    const std::vector<Rational> pt{1, -1, 0, 0, 0};
    CHECK(burkhardt_form().evaluate(pt).is_zero());
    CHECK_THROWS(burkhardt_form().evaluate(std::vector<Rational>{1, 2}));
}

TEST_CASE("degree additivity and Leibniz rule") {
    std::mt19937_64 rng(17);
    const VarList v = VarList::indexed("x", 1, 3);
    for (int i = 0; i < 60; ++i) {
        const QPoly p = random_poly(rng, v, 4, 3);
        const QPoly q = random_poly(rng, v, 4, 3);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK((p * q).derivative(k) == p.derivative(k) * q + p * q.derivative(k));
        }
    }
}

TEST_CASE("linear substitution composes") {
    std::mt19937_64 rng(23);
    const VarList a = VarList::indexed("a", 1, 3);
    const VarList b = VarList::indexed("b", 1, 3);
    const VarList c = VarList::indexed("c", 1, 2);
    for (int i = 0; i < 40; ++i) {
        const QPoly p = random_poly(rng, a, 5, 3);
        const auto m1 = random_map(rng, b, a);
        const auto m2 = random_map(rng, c, b);
        CHECK(substitute_linear(p, compose(m1, m2)) == substitute_linear(substitute_linear(p, m1), m2));
    }
    LinearMap<Rational> id{a, a, identity_matrix<Rational>(3)};
    const QPoly p = random_poly(rng, a, 5, 3);
    CHECK(substitute_linear(p, id) == p);
    CHECK_THROWS(substitute_linear(p, random_map(rng, a, b)));
}

TEST_CASE("relation reduction") {
    const VarList v{"x1", "x2", "x3", "r"};
    const QPoly rel = QPoly::parse("x1^2-r*x2^2-x3", v);
    auto one = reduce_by_relation(QPoly::parse("x1^2", v), 0, rel);
    CHECK(one.remainder == QPoly::parse("r*x2^2+x3", v));
    auto cube = reduce_by_relation(QPoly::parse("x1^2-r*x2^2", v).pow(3), 0, rel);
    CHECK(cube.remainder == QPoly::parse("x3^3", v));
    CHECK_THROWS(reduce_by_relation(QPoly::parse("x1^2", v), 0, QPoly::parse("2*x1^2-x3", v)));

    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        const QPoly p = random_poly(rng, v, 6, 4);
        auto red = reduce_by_relation(p, 0, rel);
        CHECK(red.remainder.degree_in(0) < 2);
        CHECK(p - red.remainder == red.quotient * rel);
    }
}

TEST_CASE("symmetric reduction") {
    const VarList b = VarList::indexed("b", 1, 6);
    const VarList e = VarList::indexed("e", 1, 6);
    CHECK(symmetric_reduce(power_sum(b, 1)) == QPoly::variable(e, 0));
    CHECK(symmetric_reduce(power_sum(b, 2)) == QPoly::parse("e1^2-2*e2", e));
    SymmetricReducer reducer(6, e);
    for (unsigned k = 1; k <= 7; ++k) {
        const QPoly pk = power_sum(b, k);
        const QPoly red = reducer.reduce(pk);
        CHECK(expand_elementary(red, b) == pk);
        CHECK(red == reducer.power_sum_in_e(k));
    }
    CHECK_THROWS_AS(symmetric_reduce(QPoly::variable(b, 0)), std::invalid_argument);
}

TEST_CASE("symmetric reduction round trip on random symmetrized inputs") {
    std::mt19937_64 rng(31);
    const VarList b = VarList::indexed("b", 1, 4);
    SymmetricReducer reducer(4, VarList::indexed("e", 1, 4));
    for (int i = 0; i < 15; ++i) {
        // symmetrize a random polynomial of a few power-sum products
        QPoly p(b);
        std::uniform_int_distribution<unsigned> k(1, 4);
        std::uniform_int_distribution<long> c(-5, 5);
        for (int j = 0; j < 3; ++j) p += power_sum(b, k(rng)) * power_sum(b, k(rng)) * Rational(c(rng));
        CHECK(expand_elementary(reducer.reduce(p), b) == p);
    }
}

TEST_CASE("numeric Newton identities") {
    // roots 1..6
    std::vector<Rational> c{720, -1764, 1624, -735, 175, -21};
    const auto e = elementary_from_monic(c);
    CHECK(e[0] == Rational(21));
    const auto p = power_sums_from_elementary(e, 6);
    for (unsigned k = 0; k < 6; ++k) {
        Rational expected;
        for (long r = 1; r <= 6; ++r) expected += pow(Rational(r), k);
        CHECK(p[k] == expected);
    }
    std::vector<Rational> unity{-1, 0, 0, 0, 0, 0};
    const auto pu = power_sums_from_elementary(elementary_from_monic(unity), 6);
    CHECK(pu[0] == Rational(6));
    for (unsigned k = 1; k < 6; ++k) CHECK(pu[k].is_zero());
}

TEST_CASE("univariate helpers") {
    const UPoly f({Rational(-1), Rational(0), Rational(1)});
    CHECK(is_squarefree(f));
    CHECK(!is_squarefree(f * f));
    CHECK(squarefree_part(f * f * UPoly({Rational(3), Rational(1)})).degree() == 3);
    auto d = divmod(f, UPoly({Rational(-1), Rational(1)}));
    CHECK(d.remainder.is_zero());
}

TEST_CASE("determinant and row solving") {
    Matrix<Rational> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(determinant(m) == Rational(18));
    CHECK(rank(m) == 3);
    Matrix<Rational> b{{4, 5, 1}};
    auto x = solve_row_combinations(m, b);
    REQUIRE(x.has_value());
    CHECK(multiply(*x, m) == b);
    Matrix<Rational> sing{{1, 2}, {2, 4}};
    CHECK(determinant(sing).is_zero());
    CHECK(rank(sing) == 1);
}
