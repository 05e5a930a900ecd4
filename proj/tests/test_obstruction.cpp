#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burkhardt/brauer.hpp"
#include "burkhardt/obstruction.hpp"
#include "burkhardt/twist.hpp"

#include <random>

using namespace burkhardt;

namespace {

const ProjectivePoint kAlpha{40, -30, -8, -5, 3, 0};

TernaryQuadratic conic(const std::string& text, const VarList& vars) {
    TernaryQuadratic q;
    q.form = QPoly::parse(text, vars);
    const std::vector<std::size_t> xyz{0, 1, 2};
    q.gram = gram_matrix(q.form, xyz);
    return q;
}

const VarList& xyz() {
    static const VarList v{"X", "Y", "Z"};
    return v;
}

// r! times the coefficient of lambda^r in F(x + lambda*alpha), found by
// Lagrange interpolation at lambda = 0..4.
Rational polar_oracle(const QPoly& f, const std::vector<Rational>& x, const ProjectivePoint& alpha, int r) {
    std::vector<Rational> vals;
    for (int l = 0; l <= 4; ++l) {
        std::vector<Rational> p = x;
        for (std::size_t i = 0; i < alpha.size(); ++i) p[i] += Rational(l) * alpha[i];
        vals.push_back(f.evaluate(p));
    }
    // coefficients of the degree-4 interpolant, by solving the Vandermonde system
    Matrix<Rational> v(5, std::vector<Rational>(6));
    for (int l = 0; l <= 4; ++l) {
        Rational pw(1);
        for (int k = 0; k <= 4; ++k) {
            v[l][k] = pw;
            pw *= Rational(l);
        }
        v[l][5] = vals[l];
    }
    for (int c = 0; c < 5; ++c) {
        int p = c;
        while (v[p][c].is_zero()) ++p;
        std::swap(v[p], v[c]);
        for (int i = 0; i < 5; ++i) {
            if (i == c || v[i][c].is_zero()) continue;
            const Rational f2 = v[i][c] / v[c][c];
            for (int j = c; j < 6; ++j) v[i][j] -= f2 * v[c][j];
        }
    }
    Rational fact(1);
    for (int k = 2; k <= r; ++k) fact *= Rational(k);
    return fact * v[r][5] / v[r][r];
}

ProjectivePoint maschke_point(const std::vector<long>& t) {
    const MaschkeData m = maschke_map(false);
    std::vector<Rational> tp(t.begin(), t.end());
    std::vector<Rational> y;
    for (const auto& yi : m.y) y.push_back(yi.evaluate(tp));
    return ProjectivePoint(y);
}

}  // namespace

TEST_CASE("polar degrees and range") {
    const QuarticModel b = standard_quartic();
    const ProjectivePoint e{1, 0, 0, 0, 0};
    const PolarSequence ps = polars(b, e);
    CHECK(ps.p1.degree() == 3);
    CHECK(ps.p2.degree() == 2);
    CHECK(ps.p3.degree() == 1);
    CHECK(ps.p3 == QPoly::parse("24*y0", b.vars()));
    CHECK_THROWS_AS((void)polar(b, e, 0), std::out_of_range);
    CHECK_THROWS_AS((void)polar(b, e, 4), std::out_of_range);
}

TEST_CASE("polars agree with directional derivatives") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-5, 5);
    const QuarticModel models[] = {standard_quartic(), bprime_model()};
    for (const auto& m : models) {
        for (int i = 0; i < 4; ++i) {
            std::vector<Rational> a, x;
            for (int k = 0; k < 5; ++k) {
                a.emplace_back(d(rng));
                x.emplace_back(d(rng));
            }
            a[0] += Rational(7);
            const ProjectivePoint alpha(a);
            for (int r = 1; r <= 3; ++r) {
                CHECK(polar(m, alpha, r).evaluate(x) == polar_oracle(m.form, x, alpha, r));
            }
            // Euler: P^(r) at alpha is 4!/(4-r)! F(alpha)
            const Rational fa = m.form.evaluate(alpha.coords());
            CHECK(polar(m, alpha, 1).evaluate(alpha.coords()) == Rational(4) * fa);
            CHECK(polar(m, alpha, 2).evaluate(alpha.coords()) == Rational(12) * fa);
            CHECK(polar(m, alpha, 3).evaluate(alpha.coords()) == Rational(24) * fa);
        }
    }
}

TEST_CASE("second polar of B' at alpha") {
    const ProjectivePoint a{40, -30, -8, -5, 3};
    CHECK(polar(bprime_model(), a, 2).to_string() ==
          "-602*x1^2+198*x1*x2+798*x2^2+1958*x1*x3+3078*x2*x3+2470*x3^2+2198*x1*x4+2898*x2*x4+2678*x3*x4+"
          "2548*x4^2+2838*x1*x5+2418*x2*x5+2550*x3*x5+2568*x4*x5+2580*x5^2");
}

TEST_CASE("conic_to_symbol on diagonal conics") {
    const ConicSymbol s1 = conic_to_symbol(conic("3*X^2+Y^2+Z^2", xyz()));
    CHECK(s1.to_string() == "(-3,-1)");
    const ConicSymbol s2 = conic_to_symbol(conic("X^2+Y^2-Z^2", xyz()));
    CHECK(s2.to_string() == "(1,1)");
    CHECK(quaternion_index_q(s2.a_q(), s2.b_q()) == 1);
    const VarList xyzt{"X", "Y", "Z", "t"};
    const ConicSymbol s3 = conic_to_symbol(conic("X^2-t*Y^2+Z^2", xyzt));
    const ConicSymbol expect{QPoly(xyzt, Rational(-1)), QPoly::variable(xyzt, "t"), {}};
    CHECK(same_class_qt(s3, expect, "t") == std::optional<bool>(true));
    CHECK_THROWS_AS(conic_to_symbol(conic("X^2+Y^2", xyz())), std::invalid_argument);
    CHECK_THROWS_AS(conic_to_symbol(conic("X^2+2*X*Y+Y^2+Z^2", xyz())), std::invalid_argument);
}

TEST_CASE("conic symbols from a non-diagonal form") {
    // X^2 + XY + Y^2 + Z^2 is isotropic exactly where (-3,-1) splits
    const ConicSymbol s = conic_to_symbol(conic("X^2+X*Y+Y^2+Z^2", xyz()));
    CHECK(same_class_q(s.a_q(), s.b_q(), Rational(-3), Rational(-1)));
    const ConicSymbol split = conic_to_symbol(conic("X*Y-Z^2", xyz()));
    CHECK(quaternion_index_q(split.a_q(), split.b_q()) == 1);
}

TEST_CASE("square classes") {
    const VarList v{"s", "t"};
    CHECK(normalize_square_class(QPoly::parse("12*s^3*t^2", v)) == QPoly::parse("3*s", v));
    CHECK(normalize_square_class(QPoly::parse("-8/9", v)) == QPoly(v, Rational(-2)));
    CHECK(primitive_part(QPoly::parse("6*s+9/2*t", v)) == QPoly::parse("4*s+3*t", v));
}

TEST_CASE("obstruction conic of B' at alpha") {
    const QuarticModel pair = bprime_pair();
    const TernaryQuadratic q = obstruction_conic(pair, kAlpha);
    CHECK(q.is_rational());
    const ConicSymbol s = conic_to_symbol(q);
    CHECK(same_class_q(s.a_q(), s.b_q(), Rational(-3), Rational(-1)));
    CHECK(quaternion_index_q(s.a_q(), s.b_q()) == 2);
    const auto places = ramified_places(s.a_q(), s.b_q());
    REQUIRE(places.size() == 2);
    CHECK(places[0].prime == 3);
    CHECK(places[1].is_infinite());
    CHECK(small_representative(s.a_q(), s.b_q()) == std::make_pair(Integer(-3), Integer(-1)));

    // the conic is the second polar on the first polar's zero plane, modulo the vertex
    const QuarticModel m = pair.eliminate(5);
    const ProjectivePoint a = QuarticModel::drop_coordinate(kAlpha, 5);
    const QPoly p3 = polar(m, a, 3).substitute(q.embedding);
    CHECK(p3.is_zero());
    const QPoly p2 = polar(m, a, 2).substitute(q.embedding);
    CHECK(primitive_part(p2) == primitive_part(q.form));
    CHECK(q.gram == gram_matrix(q.form, std::vector<std::size_t>{0, 1, 2}));
}

TEST_CASE("obstruction class is invariant under coordinate permutations of alpha") {
    const QuarticModel pair = bprime_pair();
    int checked = 0;
    for (const auto& p : permutation_orbit(kAlpha)) {
        if (checked++ % 29 != 0) continue;
        const ConicSymbol s = conic_to_symbol(obstruction_conic(pair, p));
        CHECK(same_class_q(s.a_q(), s.b_q(), Rational(-3), Rational(-1)));
    }
    // rescaled and sign-flipped coordinates describe the same point
    const ProjectivePoint scaled(std::vector<Rational>{Rational(-80), Rational(60), Rational(16), Rational(10),
                                                       Rational(-6), Rational(0)});
    CHECK(conic_to_symbol(obstruction_conic(pair, scaled)).to_string() ==
          conic_to_symbol(obstruction_conic(pair, kAlpha)).to_string());
}

TEST_CASE("obstruction conic of B'' at s=1") {
    const QuarticModel m = bdoubleprime_model().model.specialize("s", Rational(1));
    const TernaryQuadratic q = obstruction_conic(m, ProjectivePoint{16, -31, 9, 0, 0});
    CHECK_FALSE(q.is_rational());
    const ConicSymbol s = conic_to_symbol(q);
    const VarList& v = q.vars();
    const ConicSymbol target{QPoly(v, Rational(-1)), QPoly::variable(v, "t"), {}};
    CHECK(same_class_qt(s, target, "t") == std::optional<bool>(true));
    const ConicSymbol other{QPoly(v, Rational(-1)), QPoly::variable(v, "t") * Rational(3), {}};
    CHECK(same_class_qt(s, other, "t") == std::optional<bool>(false));
    CHECK(symbol_class_rst(s) == RstClass::basis(3));
}

TEST_CASE("obstruction conic preconditions") {
    const QuarticModel b = standard_quartic();
    CHECK_THROWS_AS(obstruction_conic(b, ProjectivePoint{1, 0, 0, 0, 0}), std::invalid_argument);
    // a node lies on the Hessian
    CHECK_THROWS_AS(obstruction_conic(b, ProjectivePoint{0, 1, -1, 0, 0}), std::invalid_argument);
    const ProjectivePoint h{1, -1, -2, 3, -1};
    REQUIRE(on_model(b, h));
    REQUIRE(hessian_membership(b, h) == HessianStatus::on);
    CHECK_THROWS_AS(obstruction_conic(b, h), std::invalid_argument);
}

TEST_CASE("conic point search") {
    const TernaryQuadratic q = conic("X^2+Y^2-Z^2", xyz());
    const auto p = find_conic_point(q, 10);
    REQUIRE(p.has_value());
    std::vector<Rational> c(p->coords.begin(), p->coords.end());
    CHECK(q.form.evaluate(c).is_zero());
    CHECK_FALSE(find_conic_point(conic("3*X^2+Y^2+Z^2", xyz()), 50).has_value());
    // (2,3) ramifies at 3
    CHECK_FALSE(find_conic_point(conic("2*X^2+3*Y^2-Z^2", xyz()), 200).has_value());
    const auto q7 = find_conic_point(conic("2*X^2+7*Y^2-Z^2", xyz()), 200);
    REQUIRE(q7.has_value());
}

TEST_CASE("marked sextic on B(1) at Maschke images") {
    const QuarticModel b = standard_quartic();
    const ProjectivePoint p = maschke_point({1, 2, -3, 5});
    CHECK(p.to_string() == "(5:8:11:22:-10)");
    const MarkedSextic ms = marked_sextic(b, p);
    CHECK(ms.binary_form.is_homogeneous());
    CHECK(ms.binary_form.degree() == 6);
    CHECK(ms.dehomogenized.degree() >= 5);
    CHECK(is_squarefree(ms.dehomogenized));
    // the parametrization lands on the conic
    const TernaryQuadratic q = obstruction_conic(b, p);
    CHECK(q.form.substitute(ms.parametrization).is_zero());
    std::vector<Rational> base(ms.base_point.coords.begin(), ms.base_point.coords.end());
    CHECK(q.form.evaluate(base).is_zero());

    int found = 0;
    for (const auto& t : std::vector<std::vector<long>>{{1, 1, 2, 3}, {2, -1, 1, 4}, {1, 3, -2, 2}, {3, 1, 1, -1}}) {
        const ProjectivePoint y = maschke_point(t);
        if (hessian_membership(b, y) == HessianStatus::on) continue;
        try {
            const MarkedSextic m = marked_sextic(b, y, 4000);
            CHECK(is_squarefree(m.dehomogenized));
            CHECK(m.binary_form.degree() == 6);
            ++found;
        } catch (const std::runtime_error&) {
        }
    }
    CHECK(found >= 1);
}

TEST_CASE("marked sextic fails where the conic has no rational point") {
    try {
        (void)marked_sextic(bprime_pair(), kAlpha, 300);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("no conic point found") != std::string::npos);
    }
    const QuarticModel m = bdoubleprime_model().model.specialize("s", Rational(1));
    CHECK_THROWS_AS((void)marked_sextic(m, ProjectivePoint{16, -31, 9, 0, 0}), std::invalid_argument);
}

TEST_CASE("enveloping cone") {
    const QuarticModel b = standard_quartic();
    const ProjectivePoint p = maschke_point({1, 2, -3, 5});
    const EnvelopingCone c = enveloping_cone(b, p);
    CHECK(c.vertex_ok);
    CHECK(c.quartic.is_homogeneous());
    CHECK(c.quartic.degree() == 4);
    CHECK(c.quartic == c.b * c.b - Rational(4) * c.a * c.c3);
    // cone with vertex p, checked pointwise
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 10; ++i) {
        std::vector<Rational> x, y;
        const Rational l(d(rng));
        for (std::size_t k = 0; k < 5; ++k) {
            x.emplace_back(d(rng));
            y.push_back(x.back() + l * p[k]);
        }
        CHECK(c.quartic.evaluate(x) == c.quartic.evaluate(y));
    }
    const TropeRestriction t = trope_restriction(b, p);
    REQUIRE(t.root.has_value());
    CHECK(*t.root * *t.root == t.restricted);
    CHECK(t.root->degree() == 2);
}

TEST_CASE("polynomial square roots") {
    const VarList v{"x", "y"};
    const QPoly q = QPoly::parse("3*x^2-x*y+5*y^2", v);
    const auto r = polynomial_sqrt(q * q);
    REQUIRE(r.has_value());
    CHECK(*r * *r == q * q);
    CHECK_FALSE(polynomial_sqrt(QPoly::parse("x^2+y^2", v)).has_value());
    CHECK_FALSE(polynomial_sqrt(QPoly::parse("2*x^2", v)).has_value());
}
