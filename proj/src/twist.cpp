#include "burkhardt/twist.hpp"

#include "burkhardt/quadform.hpp"
#include "burkhardt/symmetric.hpp"
#include "burkhardt/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace burkhardt {

SexticPoly SexticPoly::parse(std::string_view text) {
    SexticPoly h;
    std::size_t k = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (k >= 6) throw ParseError(start, "expected six coefficients c0..c5");
            std::string_view piece = text.substr(start, i - start);
            while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
            while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
            try {
                h.c[k++] = Rational::parse(piece);
            } catch (const std::invalid_argument& e) {
                throw ParseError(start, e.what());
            }
            start = i + 1;
        }
    }
    if (k != 6) throw ParseError(text.size(), "expected six coefficients c0..c5");
    return h;
}

SexticPoly SexticPoly::from_roots(const std::array<Rational, 6>& roots) {
    UPoly h({Rational(1)});
    for (const auto& b : roots) h = h * UPoly({-b, Rational(1)});
    SexticPoly out;
    for (std::size_t i = 0; i < 6; ++i) out.c[i] = h[i];
    return out;
}

std::string SexticPoly::to_string() const {
    std::vector<Rational> coeffs(c.begin(), c.end());
    coeffs.emplace_back(1);
    return UPoly(coeffs).to_string("T");
}

QuarticModel bprime_pair() {
    const VarList x = VarList::indexed("x", 1, 6);
    QuarticModel m;
    m.name = "B'";
    m.form = elementary_symmetric(x, 4);
    m.hyperplane = elementary_symmetric(x, 1);
    m.coords = 6;
    return m;
}

QuarticModel bprime_model() {
    QuarticModel m = bprime_pair().eliminate(5);
    m.name = "B' (x6 = -(x1+...+x5))";
    return m;
}

namespace {

std::vector<Rational> elementary_values(const SexticPoly& h) {
    return elementary_from_monic(std::span<const Rational>(h.c.data(), 6));
}

}  // namespace

TwistModel twist_from_sextic(const SexticPoly& h) {
    std::vector<Rational> coeffs(h.c.begin(), h.c.end());
    coeffs.emplace_back(1);
    if (!is_squarefree(UPoly(coeffs))) throw std::invalid_argument("twist_from_sextic: h is not squarefree");

    const std::vector<Rational> e = elementary_values(h);
    const std::vector<Rational> p = power_sums_from_elementary(e, 6);

    const VarList x = VarList::indexed("x", 1, 6);
    QPoly sigma1(x);
    for (std::size_t j = 0; j < 6; ++j) sigma1.add_term(Monomial::unit(6, j), p[j]);

    // sigma4 of x~_i = sum_j beta_i^(j-1) x_j, expanded over (x, beta)
    const VarList xb = x.concat(VarList::indexed("b", 1, 6));
    std::vector<QPoly> xt;
    for (std::size_t i = 0; i < 6; ++i) {
        QPoly f(xb);
        for (std::size_t j = 0; j < 6; ++j) {
            Monomial m(12);
            m[j] = 1;
            m[6 + i] = static_cast<Exponent>(j);
            f.add_term(m, Rational(1));
        }
        xt.push_back(std::move(f));
    }
    std::vector<QPoly> elem(5, QPoly(xb));
    elem[0] = QPoly(xb, Rational(1));
    for (const auto& f : xt) {
        for (std::size_t k = 4; k >= 1; --k) elem[k] += elem[k - 1] * f;
    }

    const VarList b = VarList::indexed("b", 1, 6);
    const std::vector<std::size_t> xidx{0, 1, 2, 3, 4, 5};
    SymmetricReducer reducer(6, VarList::indexed("e", 1, 6));
    QPoly sigma4(x);
    for (const auto& [mono, coef] : elem[4].coefficients_in(xidx)) {
        const QPoly in_beta = coef.embed(b);
        const Rational value = reducer.reduce(in_beta).evaluate(e);
        sigma4.add_term(mono, value);
    }

    TwistModel t;
    t.source = "sextic " + h.to_string();
    QuarticModel pair;
    pair.name = "twist of B' by " + h.to_string();
    pair.form = sigma4;
    pair.hyperplane = sigma1;
    pair.coords = 6;
    t.model = pair.eliminate(0);
    t.model.name = pair.name + " (x1 eliminated)";
    t.pair = std::move(pair);
    std::ostringstream ps;
    for (std::size_t j = 0; j < 6; ++j) ps << (j ? "," : "") << p[j];
    t.provenance["power_sums"] = ps.str();
    t.provenance["eliminated"] = "x1 = -(p1*x2+p2*x3+p3*x4+p4*x5+p5*x6)/6";
    t.provenance["sigma4_terms"] = std::to_string(sigma4.term_count());
    return t;
}

QuarticModel vandermonde_bprime(const std::array<Rational, 6>& beta) {
    const QuarticModel base = bprime_pair();
    const VarList& x = base.vars();
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 6; ++i) {
        QPoly f(x);
        Rational power(1);
        for (std::size_t j = 0; j < 6; ++j) {
            f.add_term(Monomial::unit(6, j), power);
            power *= beta[i];
        }
        images.push_back(std::move(f));
    }
    QuarticModel out = base;
    out.name = "B' under the Vandermonde map";
    out.form = base.form.substitute(images);
    out.hyperplane = base.hyperplane->substitute(images);
    return out;
}

namespace {

using KPoly = Polynomial<KummerCoeff>;

const VarList& bdoubleprime_vars() {
    static const VarList v{"z0", "z1", "z2", "z3", "z4", "s", "t"};
    return v;
}

}  // namespace

KummerSubstitution kummer_substitution() {
    const VarList z = VarList::indexed("z", 0, 5);
    auto lin = [&](int c1, int cs, int ct, int cst) {
        KPoly p(z);
        p.add_term(Monomial::unit(5, 1), KummerCoeff(c1));
        p.add_term(Monomial::unit(5, 2), KummerCoeff(cs) * KummerCoeff::sqrt_s());
        p.add_term(Monomial::unit(5, 3), KummerCoeff(ct) * KummerCoeff::sqrt_t());
        p.add_term(Monomial::unit(5, 4), KummerCoeff(cst) * KummerCoeff::sqrt_st());
        return p;
    };
    std::vector<KPoly> images;
    images.push_back(KPoly::variable(z, 0));
    images.push_back(lin(1, 1, 1, 1));
    images.push_back(lin(1, -1, 1, -1));
    images.push_back(lin(1, 1, -1, -1));
    images.push_back(lin(1, -1, -1, 1));

    const KPoly f = standard_quartic().form.map_coefficients([](const Rational& c) { return KummerCoeff(c); });
    const KPoly g = f.substitute(images);

    const VarList& full = bdoubleprime_vars();
    const std::vector<std::size_t> st_place{5, 6};
    KummerSubstitution out{QPoly(full), 0};
    for (const auto& [m, c] : g.terms()) {
        if (!c.is_rational_component_only()) ++out.residual_terms;
        const QPoly zpart = QPoly::term(z, m, Rational(1)).embed(full);
        out.rational += zpart * c.c00().embed(full, st_place);
    }
    return out;
}

QPoly bdoubleprime_display() {
    return QPoly::parse(
        "z0^4+4*z0*z1^3+3*z1^4+3*s^2*z2^4+3*t^2*z3^4+3*s^2*t^2*z4^4"
        "+12*s*z0*z1*z2^2+12*t*z0*z1*z3^2+12*s*t*z0*z1*z4^2+24*s*t*z0*z2*z3*z4+24*s*t*z1*z2*z3*z4"
        "-6*s*z1^2*z2^2-6*t*z1^2*z3^2-6*s*t*z2^2*z3^2-6*s*t*z1^2*z4^2-6*s^2*t*z2^2*z4^2"
        "-6*s*t^2*z3^2*z4^2",
        bdoubleprime_vars());
}

TwistModel bdoubleprime_model() {
    const KummerSubstitution sub = kummer_substitution();
    if (sub.residual_terms != 0) throw std::runtime_error("B'': nonzero sqrt-components after substitution");
    const QPoly display = bdoubleprime_display();
    if (!(sub.rational == display)) throw std::runtime_error("B'': substitution disagrees with the displayed form");
    TwistModel t;
    t.source = "Kummer substitution y -> z over Q(sqrt s, sqrt t)";
    t.model.name = "B''";
    t.model.form = sub.rational;
    t.model.coords = 5;
    t.provenance["terms"] = std::to_string(sub.rational.term_count());
    t.provenance["sqrt_residual_terms"] = "0";
    return t;
}

KummerCheck elliptic_kummer_check(const Rational& a2, const Rational& a4, const Rational& a6,
                                  const Rational& r) {
    const VarList v{"x1", "x2", "x3"};
    const QPoly x1 = QPoly::variable(v, 0);
    const QPoly x2 = QPoly::variable(v, 1);
    const QPoly x3 = QPoly::variable(v, 2);
    // powers of x1 + x2 sqrt(r) as (real, sqrt-part)
    std::vector<std::pair<QPoly, QPoly>> pw{{QPoly(v, Rational(1)), QPoly(v)}};
    for (int k = 1; k <= 3; ++k) {
        const auto& [a, b] = pw.back();
        pw.emplace_back(a * x1 + b * x2 * r, a * x2 + b * x1);
    }
    const Rational coef[4] = {a6, a4, a2, Rational(1)};
    QPoly re(v);
    QPoly im(v);
    for (int k = 0; k <= 3; ++k) {
        re += pw[k].first * coef[k];
        im += pw[k].second * coef[k];
    }
    KummerCheck out;
    out.norm = re * re - im * im * r;
    const QPoly relation = x1 * x1 - x2 * x2 * r - x3;
    out.reduced = reduce_by_relation(out.norm, 0, relation).remainder;
    out.degree = out.reduced.degree();
    const QPoly back = out.reduced.substitute_var(2, x1 * x1 - x2 * x2 * r);
    out.round_trip = back == out.norm;
    return out;
}

TangentCone tangent_cone_quadric() {
    const QPoly f = bdoubleprime_display();
    const VarList w{"w1", "w2", "w3", "w4", "s", "t"};
    std::vector<QPoly> images{
        QPoly(w, Rational(1)),
        QPoly::variable(w, 0) - QPoly(w, Rational(1)),
        QPoly::variable(w, 1),
        QPoly::variable(w, 2),
        QPoly::variable(w, 3),
        QPoly::variable(w, 4),
        QPoly::variable(w, 5),
    };
    const QPoly local = f.substitute(images);
    const std::vector<std::size_t> widx{0, 1, 2, 3};
    if (!local.homogeneous_part(0, widx).is_zero() || !local.homogeneous_part(1, widx).is_zero()) {
        throw std::runtime_error("tangent cone: (1:-1:0:0:0) is not a singular point");
    }
    TangentCone tc;
    tc.quadratic_part = local.homogeneous_part(2, widx);
    const Matrix<QPoly> g = gram_matrix(tc.quadratic_part, widx);
    tc.rank = diagonalize(g).rank;
    if (tc.rank != 4) throw std::runtime_error("tangent cone: quadratic part not of rank 4");
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j && !g[i][j].is_zero()) throw std::runtime_error("tangent cone: not diagonal in w");
        }
    }

    // each diagonal entry is c * s^a * t^b; entries with a parameter fix the scale
    struct Raw {
        std::size_t w;
        Rational c;
        unsigned es, et;
    };
    std::vector<Raw> raw;
    for (std::size_t i = 0; i < 4; ++i) {
        if (g[i][i].term_count() != 1) throw std::runtime_error("tangent cone: entry not a monomial");
        const auto [m, c] = g[i][i].leading_term();
        raw.push_back({i, c, m[4], m[5]});
    }
    std::optional<Rational> scale;
    for (const auto& r : raw) {
        if (r.es + r.et == 0) continue;
        if (scale && *scale != r.c) throw std::runtime_error("tangent cone: inconsistent scale");
        scale = r.c;
    }
    if (!scale) throw std::runtime_error("tangent cone: no parameter entries");
    tc.scale = *scale;

    // order u0..u3 as s, t, st, constant
    auto rank_of = [](const Raw& r) { return r.es + r.et == 0 ? 3 : (r.es && r.et ? 2 : (r.es ? 0 : 1)); };
    std::sort(raw.begin(), raw.end(), [&](const Raw& a, const Raw& b) { return rank_of(a) < rank_of(b); });

    const VarList u{"u0", "u1", "u2", "u3", "s", "t"};
    std::vector<QPoly> wimg(6, QPoly(u));
    wimg[4] = QPoly::variable(u, 4);
    wimg[5] = QPoly::variable(u, 5);
    tc.normalized = QPoly(u);
    std::ostringstream change;
    for (std::size_t k = 0; k < 4; ++k) {
        // c/scale = num/den; w = den*u turns it into num*den
        const Rational q = raw[k].c / tc.scale;
        const Integer den = q.denominator();
        const Rational entry = q * Rational(den) * Rational(den);
        wimg[raw[k].w] = QPoly::variable(u, k) * Rational(den);
        Monomial m(6);
        m[k] = 2;
        m[4] = raw[k].es;
        m[5] = raw[k].et;
        tc.normalized.add_term(m, entry);
        tc.entries.push_back({entry, raw[k].es, raw[k].et});
        if (k) change << ", ";
        change << "w" << raw[k].w + 1 << " = " << (den == 1 ? "" : to_string(den) + "*") << "u" << k;
    }
    tc.coordinate_change = "chart z0=1, z1=-1+w1, z2=w2, z3=w3, z4=w4; " + change.str() +
                           "; quadratic part = " + tc.scale.to_string() + " * normalized";
    const QPoly pulled = tc.quadratic_part.substitute(wimg);
    if (!(pulled == tc.normalized * tc.scale)) throw std::runtime_error("tangent cone: normalization failed");
    return tc;
}

}  // namespace burkhardt
