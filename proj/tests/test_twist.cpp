#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burkhardt/core.hpp"
#include "burkhardt/twist.hpp"

#include <algorithm>
#include <random>

using namespace burkhardt;

namespace {

std::array<Rational, 6> sample_roots(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    std::array<Rational, 6> r;
    for (std::size_t i = 0; i < 6;) {
        const Rational x(Integer(num(rng)), Integer(den(rng)));
        if (std::find(r.begin(), r.begin() + static_cast<long>(i), x) != r.begin() + static_cast<long>(i)) continue;
        r[i++] = x;
    }
    return r;
}

// (a + b sqrt r) as a pair
struct QuadInt {
    Rational a, b;
};
QuadInt mul(const QuadInt& x, const QuadInt& y, const Rational& r) {
    return {x.a * y.a + x.b * y.b * r, x.a * y.b + x.b * y.a};
}

}  // namespace

TEST_CASE("sextic parsing and construction") {
    const SexticPoly h = SexticPoly::parse("-1,0,0,0,0,0");
    CHECK(h.c[0] == Rational(-1));
    CHECK(h.to_string() == "T^6-1");
    CHECK_THROWS((void)SexticPoly::parse("1,2,3"));
    CHECK_THROWS((void)SexticPoly::parse("1,2,3,4,5,x"));
    // (T-1)...(T-6): c5 = -21, c0 = 720
    const SexticPoly f = SexticPoly::from_roots({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
    CHECK(f.c[5] == Rational(-21));
    CHECK(f.c[0] == Rational(720));
}

TEST_CASE("twist of T^6-1 has sigma1 = 6 x1") {
    const TwistModel t = twist_from_sextic(SexticPoly::parse("-1,0,0,0,0,0"));
    REQUIRE(t.pair.has_value());
    CHECK(*t.pair->hyperplane == QPoly::variable(t.pair->vars(), 0) * Rational(6));
    CHECK(t.model.coords == 5);
}

TEST_CASE("rational-root twists equal the Vandermonde transform of B'") {
    std::mt19937_64 rng(2);
    std::vector<std::array<Rational, 6>> cases{
        {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)}};
    for (int i = 0; i < 3; ++i) cases.push_back(sample_roots(rng));
    for (const auto& roots : cases) {
        const TwistModel t = twist_from_sextic(SexticPoly::from_roots(roots));
        const QuarticModel v = vandermonde_bprime(roots);
        CHECK(t.pair->form == v.form);
        CHECK(*t.pair->hyperplane == *v.hyperplane);
        // sigma1 coefficient of x_j is the power sum p_{j-1} of the roots
        for (std::size_t j = 0; j < 6; ++j) {
            Rational p(0);
            for (const auto& b : roots) {
                Rational pw(1);
                for (std::size_t k = 0; k < j; ++k) pw *= b;
                p += pw;
            }
            CHECK(t.pair->hyperplane->coefficient(Monomial::unit(6, j)) == p);
        }
        CHECK(t.model.form.is_homogeneous());
        CHECK(t.model.form.degree() == 4);
        CHECK(t.model.form.nvars() == 5);
    }
}

TEST_CASE("non-squarefree sextics are rejected") {
    const auto h = SexticPoly::from_roots({Rational(1), Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)});
    CHECK_THROWS_AS(twist_from_sextic(h), std::invalid_argument);
}

TEST_CASE("B' pair model") {
    const QuarticModel b = bprime_pair();
    REQUIRE(b.hyperplane.has_value());
    CHECK(b.form.term_count() == 15);
    for (const auto& [m, c] : b.form.terms()) CHECK(c == Rational(1));
    CHECK(on_model(b, ProjectivePoint{40, -30, -8, -5, 3, 0}));
    CHECK(on_model(bprime_model(), ProjectivePoint{40, -30, -8, -5, 3}));
    std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
    int count = 0;
    do {
        if (count++ % 37 != 0) continue;
        std::vector<QPoly> img;
        for (auto k : perm) img.push_back(QPoly::variable(b.vars(), k));
        CHECK(b.form.substitute(img) == b.form);
        CHECK(b.hyperplane->substitute(img) == *b.hyperplane);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("B'' from the Kummer substitution") {
    const KummerSubstitution k = kummer_substitution();
    CHECK(k.residual_terms == 0);
    const QPoly display = bdoubleprime_display();
    CHECK(k.rational == display);
    const VarList& v = display.vars();
    CHECK(display.coefficient(Monomial({0, 0, 4, 0, 0, 2, 0})) == Rational(3));
    CHECK(display.coefficient(Monomial({1, 0, 1, 1, 1, 1, 1})) == Rational(24));
    const TwistModel t = bdoubleprime_model();
    CHECK(on_model(t.model, ProjectivePoint{1, -1, 0, 0, 0}));
    CHECK(t.model.parameters().names() == std::vector<std::string>{"s", "t"});
    CHECK(v.size() == 7);
}

TEST_CASE("elliptic Kummer reduction") {
    // f = x^3: the norm is (x1^2 - r x2^2)^3, which reduces to x3^3
    for (int r : {-1, 2, 3}) {
        const KummerCheck k = elliptic_kummer_check(Rational(0), Rational(0), Rational(0), Rational(r));
        CHECK(k.reduced == QPoly::parse("x3^3", k.reduced.vars()));
    }
    const KummerCheck one = elliptic_kummer_check(Rational(0), Rational(0), Rational(1), Rational(2));
    CHECK(one.round_trip);
    CHECK(one.degree <= 4);

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int i = 0; i < 12; ++i) {
        const Rational a2(c(rng)), a4(c(rng)), a6(c(rng));
        for (int rv : {-1, 2, 3, 5}) {
            const Rational r(rv);
            const KummerCheck k = elliptic_kummer_check(a2, a4, a6, r);
            CHECK(k.degree <= 4);
            CHECK(k.round_trip);
            // pointwise oracle in Q(sqrt r)
            for (int j = 0; j < 3; ++j) {
                const Rational x1(c(rng)), x2(c(rng));
                auto f_at = [&](const QuadInt& x) {
                    const QuadInt x2p = mul(x, x, r);
                    const QuadInt x3p = mul(x2p, x, r);
                    return QuadInt{x3p.a + a2 * x2p.a + a4 * x.a + a6, x3p.b + a2 * x2p.b + a4 * x.b};
                };
                const QuadInt n = mul(f_at({x1, x2}), f_at({x1, -x2}), r);
                CHECK(n.b.is_zero());
                const std::vector<Rational> pt{x1, x2, x1 * x1 - r * x2 * x2};
                CHECK(k.norm.evaluate(pt) == n.a);
                CHECK(k.reduced.evaluate(pt) == n.a);
            }
        }
    }
}

TEST_CASE("tangent cone of B'' at its rational point") {
    const TangentCone tc = tangent_cone_quadric();
    CHECK(tc.rank == 4);
    CHECK(tc.scale == Rational(-18));
    REQUIRE(tc.entries.size() == 4);
    CHECK(tc.entries[0].c == Rational(1));
    CHECK((tc.entries[0].es == 1 && tc.entries[0].et == 0));
    CHECK((tc.entries[1].es == 0 && tc.entries[1].et == 1));
    CHECK((tc.entries[2].es == 1 && tc.entries[2].et == 1));
    CHECK(tc.entries[3].c == Rational(-3));
    CHECK((tc.entries[3].es == 0 && tc.entries[3].et == 0));
    const VarList& u = tc.normalized.vars();
    CHECK(tc.normalized == QPoly::parse("s*u0^2+t*u1^2+s*t*u2^2-3*u3^2", u));
    // w1 = 3 u3, w2 = u0, w3 = u1, w4 = u2
    std::vector<QPoly> img{QPoly::variable(u, 3) * Rational(3), QPoly::variable(u, 0), QPoly::variable(u, 1),
                           QPoly::variable(u, 2), QPoly::variable(u, 4), QPoly::variable(u, 5)};
    CHECK(tc.quadratic_part.substitute(img) == tc.normalized * Rational(-18));
}
