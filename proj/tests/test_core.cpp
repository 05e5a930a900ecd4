#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burkhardt/core.hpp"
#include "burkhardt/twist.hpp"

#include <random>

using namespace burkhardt;

namespace {

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-7, 7);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(d(rng));
    return p;
}

CPoly as_cyclo(const QPoly& p) {
    return p.map_coefficients([](const Rational& c) { return Cyclo3(c); });
}

std::vector<Cyclo3> mat_vec(const CMatrix& a, const std::vector<Cyclo3>& x) {
    std::vector<Cyclo3> y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

// Determinant over Q by elimination with pivoting, independent of the
// library's division-free expansion.
Rational elimination_det(Matrix<Rational> m) {
    Rational det(1);
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Rational hessian_oracle(const QPoly& f, const ProjectivePoint& p) {
    Matrix<Rational> h(5, std::vector<Rational>(5));
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) h[i][j] = f.derivative(i).derivative(j).evaluate(p.coords());
    }
    return elimination_det(h);
}

// Trace of the matrix of A acting on the monomial basis of Sym^2 / Wedge^2.
std::pair<Cyclo3, Cyclo3> explicit_square_traces(const CMatrix& a) {
    const std::size_t n = a.size();
    Cyclo3 sym, wedge;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            // coefficient of e_i e_j in (A e_i)(A e_j)
            const Cyclo3 diag = a[i][i] * a[j][j] + (i == j ? Cyclo3() : a[j][i] * a[i][j]);
            sym += diag;
            if (i < j) wedge += a[i][i] * a[j][j] - a[j][i] * a[i][j];
        }
    }
    return {sym, wedge};
}

}  // namespace

TEST_CASE("standard quartic") {
    const QuarticModel b = standard_quartic();
    CHECK(b.form.term_count() == 6);
    CHECK(b.form.coefficient(Monomial({0, 1, 1, 1, 1})) == Rational(3));
    CHECK(b.form.is_homogeneous());
    CHECK(b.form.degree() == 4);
    CHECK(on_model(b, ProjectivePoint{0, 1, -1, 0, 0}));
}

TEST_CASE("Maschke parametrization") {
    const MaschkeData m = maschke_map(true);
    const VarList t = VarList::indexed("t", 1, 4);
    REQUIRE(m.y.size() == 5);
    CHECK(m.y[0] == QPoly::parse("3*t1*t2*t3*t4", t));
    CHECK(m.y[1] == QPoly::parse("t1*t2^3+t1*t3^3-t1*t4^3", t));
    REQUIRE(m.composite.has_value());
    CHECK(m.composite->is_zero());

    // the zero polynomial must also vanish pointwise
    std::mt19937_64 rng(11);
    const QPoly f = standard_quartic().form;
    for (int i = 0; i < 20; ++i) {
        const auto tp = random_point(rng, 4);
        std::vector<Rational> y;
        for (const auto& yi : m.y) y.push_back(yi.evaluate(tp));
        CHECK(f.evaluate(y).is_zero());
    }

    // every Y_i is divisible by t_i, so the coordinate points are base points
    const std::vector<Rational> e1{Rational(1), Rational(0), Rational(0), Rational(0)};
    for (const auto& yi : m.y) CHECK(yi.evaluate(e1).is_zero());
    const std::vector<Rational> t11{Rational(1), Rational(1), Rational(0), Rational(0)};
    std::vector<Rational> y;
    for (const auto& yi : m.y) y.push_back(yi.evaluate(t11));
    CHECK(y == std::vector<Rational>{Rational(0), Rational(1), Rational(-1), Rational(0), Rational(0)});
    CHECK_FALSE(maschke_map(false).composite.has_value());
}

TEST_CASE("rho4 generators") {
    const GeneratorSet g = generators_rho4();
    const Cyclo3 z = Cyclo3::zeta();
    CHECK(g.a1 == [] {
        CMatrix m = identity_matrix<Cyclo3>(4);
        for (auto& row : m) {
            for (auto& x : row) x = -x;
        }
        return m;
    }());
    CHECK(trace(g.a1) == Cyclo3(-4));
    CHECK(trace(g.a2) == 2 * z + 1);
    CHECK(trace(g.a3) == 3 * z + 2);
    for (const CMatrix* a : {&g.a1, &g.a2, &g.a3}) CHECK_FALSE(determinant(*a).is_zero());
}

TEST_CASE("induced rho5 satisfies Y(A t) = R Y(t)") {
    const GeneratorSet g = generators_rho4();
    const MaschkeData m = maschke_map(false);
    std::mt19937_64 rng(5);
    const Cyclo3 z = Cyclo3::zeta();
    CHECK(induced_rho5(g.a1) == identity_matrix<Cyclo3>(5));
    CHECK(trace(induced_rho5(g.a2)) == Cyclo3(0));
    CHECK(trace(induced_rho5(g.a3)) == -3 * z - 1);
    for (const CMatrix* a : {&g.a1, &g.a2, &g.a3}) {
        const CMatrix r = induced_rho5(*a);
        for (int k = 0; k < 5; ++k) {
            std::vector<Cyclo3> t;
            for (const auto& x : random_point(rng, 4)) t.emplace_back(x, Rational(k));
            const std::vector<Cyclo3> at = mat_vec(*a, t);
            std::vector<Cyclo3> lhs, y;
            for (const auto& yi : m.y) {
                lhs.push_back(as_cyclo(yi).evaluate(at));
                y.push_back(as_cyclo(yi).evaluate(t));
            }
            CHECK(lhs == mat_vec(r, y));
        }
    }
}

TEST_CASE("induced rho5 rejects a matrix that does not preserve the span") {
    CMatrix a = identity_matrix<Cyclo3>(4);
    a[0][1] = Cyclo3(1);
    CHECK_THROWS_AS(induced_rho5(a), std::runtime_error);
}

TEST_CASE("functor traces match explicit square matrices") {
    const GeneratorSet g = generators_rho4();
    for (const CMatrix* a : {&g.a1, &g.a2, &g.a3}) {
        for (const CMatrix& m : std::vector<CMatrix>{*a, induced_rho5(*a)}) {
            const auto [sym, wedge] = explicit_square_traces(m);
            CHECK(functor_traces(m).sym2 == sym);
            CHECK(functor_traces(m).wedge2 == wedge);
        }
    }
    const Cyclo3 z = Cyclo3::zeta();
    CHECK(functor_traces(g.a1).sym2 == Cyclo3(10));
    CHECK(functor_traces(g.a2).sym2 == Cyclo3(-1));
    CHECK(functor_traces(induced_rho5(g.a2)).wedge2 == Cyclo3(-1));
    // Sym^2 rho4 and Wedge^2 rho5 are complex conjugate at every generator
    for (const CMatrix* a : {&g.a1, &g.a2, &g.a3}) {
        CHECK(functor_traces(induced_rho5(*a)).wedge2 == functor_traces(*a).sym2.conj());
    }
    CHECK(functor_traces(g.a3).sym2 == 3 * z - 2);
    CHECK(functor_traces(induced_rho5(g.a3)).wedge2 == -3 * z - 5);
}

TEST_CASE("induced generators preserve the quartic") {
    const GeneratorSet g = generators_rho4();
    const QuarticModel b = standard_quartic();
    const CPoly f = as_cyclo(b.form);
    std::mt19937_64 rng(3);
    for (const CMatrix* a : {&g.a1, &g.a2, &g.a3}) {
        const CMatrix r = induced_rho5(*a);
        const auto lambda = invariance_scalar(b.form, r);
        REQUIRE(lambda.has_value());
        CHECK(*lambda == Cyclo3(1));
        for (int k = 0; k < 5; ++k) {
            std::vector<Cyclo3> y;
            for (const auto& x : random_point(rng, 5)) y.emplace_back(x, Rational(1 - k));
            CHECK(f.evaluate(mat_vec(r, y)) == *lambda * f.evaluate(y));
        }
    }
    CMatrix not_inv = identity_matrix<Cyclo3>(5);
    not_inv[0][0] = Cyclo3(2);
    CHECK_FALSE(invariance_scalar(b.form, not_inv).has_value());
}

TEST_CASE("Hessian membership") {
    const QuarticModel bp = bprime_model();
    const ProjectivePoint alpha{40, -30, -8, -5, 3};
    REQUIRE(on_model(bp, alpha));
    CHECK(hessian_membership(bp, alpha) == HessianStatus::off);
    CHECK(hessian_value(bp, alpha).constant_term() == hessian_oracle(bp.form, alpha));

    const QuarticModel b1 = standard_quartic();
    const ProjectivePoint node{0, 1, -1, 0, 0};
    CHECK(hessian_membership(b1, node) == HessianStatus::on);

    const QuarticModel b2 = bdoubleprime_model().model.specialize("s", Rational(1));
    CHECK(hessian_membership(b2, ProjectivePoint{16, -31, 9, 0, 0}) == HessianStatus::off);

    CHECK_THROWS_AS(hessian_membership(b1, ProjectivePoint{1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("Hessian value agrees with an elimination determinant") {
    const QuarticModel b1 = standard_quartic();
    const MaschkeData m = maschke_map(false);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        const auto t = random_point(rng, 4);
        std::vector<Rational> y;
        for (const auto& yi : m.y) y.push_back(yi.evaluate(t));
        if (std::all_of(y.begin(), y.end(), [](const Rational& x) { return x.is_zero(); })) continue;
        const ProjectivePoint p(y);
        CHECK(hessian_value(b1, p).constant_term() == hessian_oracle(b1.form, p));
    }
}

TEST_CASE("singular points") {
    CHECK(singularity_test(standard_quartic(), ProjectivePoint{0, 1, -1, 0, 0}) == Smoothness::singular);
    CHECK(singularity_test(standard_quartic(), ProjectivePoint{1, -1, 0, 0, 0}) == Smoothness::smooth);

    const QuarticModel pair = bprime_pair();
    const auto orbit = permutation_orbit(ProjectivePoint{1, -1, 0, 0, 0, 0});
    CHECK(orbit.size() == 15);
    for (const auto& p : orbit) CHECK(singularity_test(pair, p) == Smoothness::singular);
    CHECK(singularity_test(pair, ProjectivePoint{40, -30, -8, -5, 3, 0}) == Smoothness::smooth);

    CHECK(singularity_test(bdoubleprime_model().model, ProjectivePoint{1, -1, 0, 0, 0}) == Smoothness::singular);
    CHECK_THROWS_AS(singularity_test(pair, ProjectivePoint{1, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("projective point normalization and parsing") {
    CHECK(ProjectivePoint{2, 4, -6}.to_string() == "(1:2:-3)");
    CHECK(ProjectivePoint{0, -3, 6}.to_string() == "(0:1:-2)");
    CHECK(ProjectivePoint::parse("(-1/2:1/3)").to_string() == "(3:-2)");
    CHECK(ProjectivePoint::parse("(40:-30:-8:-5:3:0)").to_string() == "(40:-30:-8:-5:3:0)");
    CHECK(ProjectivePoint::parse(" ( 1 : 2 ) ") == ProjectivePoint{1, 2});
    CHECK_THROWS_AS((ProjectivePoint{0, 0, 0}), std::invalid_argument);
    try {
        (void)ProjectivePoint::parse("(1:2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS((void)ProjectivePoint::parse("(1:x)"), ParseError);
    CHECK_THROWS_AS((void)ProjectivePoint::parse("(0:0)"), ParseError);
    CHECK_THROWS_AS((void)ProjectivePoint::parse("(1:2) junk"), ParseError);
}

TEST_CASE("model text round trip") {
    for (const QuarticModel& m : {standard_quartic(), bprime_pair(), bdoubleprime_model().model}) {
        const std::string text = model_to_text(m);
        const QuarticModel back = model_from_text(text);
        CHECK(model_to_text(back) == text);
        CHECK(back.form == m.form);
        CHECK(back.coords == m.coords);
        CHECK(back.hyperplane.has_value() == m.hyperplane.has_value());
    }
    CHECK_THROWS_AS(model_from_text("coords: x y\n"), ParseError);
    CHECK_THROWS_AS(model_from_text("coords: x y\nform: x+\n"), ParseError);
    CHECK_THROWS_AS(model_from_text("coords: x y\nshape: 1\nform: x\n"), ParseError);
    const QuarticModel c = model_from_text("# comment\n\ncoords: x y\nparams: s\nform: s*x^4-y^4\n");
    CHECK(c.coords == 2);
    CHECK(c.parameters().names() == std::vector<std::string>{"s"});
}
