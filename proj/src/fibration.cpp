#include "burkhardt/fibration.hpp"

#include "burkhardt/arith.hpp"
#include "burkhardt/twist.hpp"
#include "burkhardt/upoly.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <set>
#include <stdexcept>

namespace burkhardt {

namespace {

const VarList& family_vars() {
    static const VarList v{"X", "Y", "Z", "u", "v"};
    return v;
}

const VarList& plane_vars() {
    static const VarList v{"X", "Y", "Z"};
    return v;
}

QPoly line_restriction(const QPoly& f, const ProjectivePoint& p, const ProjectivePoint& d, const VarList& lam) {
    // f(p + lambda d) as a polynomial in lambda; parameters are not allowed
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        images.push_back(QPoly(lam, p[i]) + QPoly::variable(lam, 0) * d[i]);
    }
    return f.substitute(images);
}

}  // namespace

QPoly cubic_family_symbolic() {
    const VarList& w = family_vars();
    auto P = [&](std::string_view s) { return QPoly::parse(s, w); };
    const QPoly X = P("X");
    const QPoly Y = P("Y");
    const QPoly Z = P("Z");
    return P("u+v-1") * X * Y * (X + Y) + P("-u*v+u+v") * (X * X + Y * Y) * Z +
           P("-u^2-3*u*v+3*u-v^2+3*v-1") * X * Y * Z + P("u^2*v+u*v^2-u*v") * Z * Z * Z +
           P("u^2*v-u^2+u*v^2-3*u*v+u-v^2+v") * (X + Y) * Z * Z;
}

PlaneCubic cubic_family_generic() { return {cubic_family_symbolic(), ProjectivePoint{1, 0, 0}}; }

PlaneCubic cubic_family(const FibrationParams& p) {
    const VarList& xyz = plane_vars();
    const QPoly f = cubic_family_symbolic().substitute(
        {QPoly::variable(xyz, 0), QPoly::variable(xyz, 1), QPoly::variable(xyz, 2), QPoly(xyz, p.u), QPoly(xyz, p.v)});
    if (f.is_zero()) throw std::invalid_argument("C_{u,v} vanishes identically");
    if (!cubic_nonsingular(f)) {
        throw std::invalid_argument("C_{u,v} is possibly singular at u=" + p.u.to_string() + ", v=" + p.v.to_string());
    }
    return {f, ProjectivePoint{1, 0, 0}};
}

namespace {

// Resultant in variable 1 of polynomials over (x, y), as a UPoly in x.
UPoly resultant_y(const QPoly& f, const QPoly& g) {
    const VarList x{"x"};
    auto coeffs = [&](const QPoly& p) {
        std::vector<QPoly> c(p.degree_in(1) + 1, QPoly(x));
        for (const auto& [m, k] : p.coefficients_in(std::vector<std::size_t>{1})) {
            c[m[0]] = k.substitute({QPoly::variable(x, 0), QPoly(x)});
        }
        return c;
    };
    const auto a = coeffs(f);
    const auto b = coeffs(g);
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    if (m == 0 && n == 0) return UPoly({Rational(1)});
    const std::size_t size = m + n;
    Matrix<QPoly> s(size, std::vector<QPoly>(size, QPoly(x)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
    }
    return to_upoly(determinant(s), 0);
}

}  // namespace

bool cubic_nonsingular(const QPoly& f) {
    const VarList xy{"x", "y"};
    const auto grad = gradient(f, 3);
    // chart Z = 1; F_Z follows from Euler's relation
    auto affine = [&](const QPoly& p) {
        return p.substitute({QPoly::variable(xy, 0), QPoly::variable(xy, 1), QPoly(xy, Rational(1))});
    };
    const QPoly fa = affine(f);
    const QPoly fx = affine(grad[0]);
    const QPoly fy = affine(grad[1]);
    UPoly g = resultant_y(fx, fy);
    g = gcd(g, resultant_y(fa, fx));
    g = gcd(g, resultant_y(fa, fy));
    if (g.is_zero() || g.degree() > 0) return false;
    // line Z = 0: chart Y = 1, then the point (1:0:0)
    const VarList x{"x"};
    UPoly h;
    for (const QPoly* p : {&f, &grad[0], &grad[1], &grad[2]}) {
        h = gcd(h, to_upoly(p->substitute({QPoly::variable(x, 0), QPoly(x, Rational(1)), QPoly(x)}), 0));
    }
    if (h.is_zero() || h.degree() > 0) return false;
    const ProjectivePoint e{1, 0, 0};
    return !std::all_of(grad.begin(), grad.end(), [&](const QPoly& d) { return evaluate_at(d, 3, e).is_zero(); });
}

bool flex_verify(const PlaneCubic& c, const ProjectivePoint& pt) {
    if (!evaluate_at(c.form, 3, pt).is_zero()) throw std::invalid_argument("flex_verify: point not on the cubic");
    const auto grad = gradient(c.form, 3);
    const bool smooth =
        !std::all_of(grad.begin(), grad.end(), [&](const QPoly& d) { return evaluate_at(d, 3, pt).is_zero(); });
    Matrix<QPoly> h(3, std::vector<QPoly>(3));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) h[i][j] = evaluate_at(grad[i].derivative(j), 3, pt);
    }
    return smooth && determinant(h).is_zero();
}

ProjectivePoint third_point(const PlaneCubic& c, const ProjectivePoint& p, const ProjectivePoint& q) {
    if (c.form.nvars() != 3) throw std::invalid_argument("group law needs a cubic over Q");
    const VarList lam{"lambda"};
    ProjectivePoint dir = q;
    if (p == q) {
        std::vector<Rational> g;
        for (const auto& d : gradient(c.form, 3)) g.push_back(evaluate_at(d, 3, p).constant_term());
        if (std::all_of(g.begin(), g.end(), [](const Rational& x) { return x.is_zero(); })) {
            throw std::runtime_error("tangent at a singular point");
        }
        // a second point on the tangent line g . X = 0
        std::optional<ProjectivePoint> t;
        for (std::size_t k = 0; k < 3 && !t; ++k) {
            std::vector<Rational> e(3);
            e[k] = Rational(1);
            std::vector<Rational> cr{g[1] * e[2] - g[2] * e[1], g[2] * e[0] - g[0] * e[2], g[0] * e[1] - g[1] * e[0]};
            if (std::all_of(cr.begin(), cr.end(), [](const Rational& x) { return x.is_zero(); })) continue;
            ProjectivePoint cand(cr);
            if (!(cand == p)) t = cand;
        }
        if (!t) throw std::runtime_error("no second point on the tangent line");
        dir = *t;
    }
    const UPoly g = to_upoly(line_restriction(c.form, p, dir, lam), 0);
    // roots lambda = 0 (p, double when tangent) and, for a chord, infinity (q)
    const Rational g1 = g[1];
    const Rational g2 = g[2];
    const Rational g3 = g[3];
    std::vector<Rational> r(3);
    if (p == q) {
        if (g2.is_zero() && g3.is_zero()) throw std::runtime_error("tangent line lies in the cubic");
        for (std::size_t i = 0; i < 3; ++i) r[i] = g3 * p[i] - g2 * dir[i];
    } else {
        if (!g3.is_zero() || !g[0].is_zero()) throw std::runtime_error("chord endpoints not on the cubic");
        if (g1.is_zero() && g2.is_zero()) throw std::runtime_error("line lies in the cubic");
        for (std::size_t i = 0; i < 3; ++i) r[i] = g2 * p[i] - g1 * dir[i];
    }
    return ProjectivePoint(r);
}

ProjectivePoint cubic_negate(const PlaneCubic& c, const ProjectivePoint& p) { return third_point(c, c.origin, p); }

ProjectivePoint cubic_group_law(const PlaneCubic& c, const ProjectivePoint& p, const ProjectivePoint& q) {
    return third_point(c, c.origin, third_point(c, p, q));
}

ProjectivePoint cubic_multiple(const PlaneCubic& c, const ProjectivePoint& p, long n) {
    if (n < 0) return cubic_negate(c, cubic_multiple(c, p, -n));
    ProjectivePoint result = c.origin;
    ProjectivePoint base = p;
    while (n > 0) {
        if (n & 1) result = cubic_group_law(c, result, base);
        n >>= 1;
        if (n > 0) base = cubic_group_law(c, base, base);
    }
    return result;
}

TorsionResult torsion_test(const PlaneCubic& c, const ProjectivePoint& p, int bound) {
    TorsionResult out;
    ProjectivePoint q = p;
    for (int n = 1; n <= bound; ++n) {
        if (q == c.origin) {
            out.order = n;
            return out;
        }
        q = cubic_group_law(c, q, p);
    }
    out.non_torsion_certified = bound >= 12;
    return out;
}

ProjectivePoint embed_to_bprime(const FibrationParams& f, const ProjectivePoint& pt) {
    const Rational& X = pt[0];
    const Rational& Y = pt[1];
    const Rational& Z = pt[2];
    std::vector<Rational> x{X, Y, -(f.u * Z), -(f.v * Z), Z, -X - Y + (f.u + f.v - Rational(1)) * Z};
    if (std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_zero(); })) {
        throw std::invalid_argument("embedding vanishes");
    }
    return ProjectivePoint(x);
}

std::optional<SlicePoint> slice_point(const ProjectivePoint& x) {
    if (x.size() != 6) throw std::invalid_argument("slice_point expects six coordinates");
    if (x[4].is_zero()) return std::nullopt;
    return SlicePoint{{-(x[2] / x[4]), -(x[3] / x[4])}, ProjectivePoint(std::vector<Rational>{x[0], x[1], x[4]})};
}

const std::vector<Fibration>& fibrations() {
    static const std::vector<Fibration> f{
        {"L345", {0, 1, 2, 3, 4, 5}},
        {"L245", {0, 2, 1, 3, 4, 5}},
        {"L145", {1, 2, 0, 3, 4, 5}},
    };
    return f;
}

const std::vector<Fibration>& all_fibrations() {
    static const std::vector<Fibration> f = [] {
        std::vector<Fibration> out;
        for (std::size_t a = 0; a < 6; ++a) {
            for (std::size_t b = a + 1; b < 6; ++b) {
                for (std::size_t c = b + 1; c < 6; ++c) {
                    std::vector<std::size_t> rest;
                    for (std::size_t i = 0; i < 6; ++i) {
                        if (i != a && i != b && i != c) rest.push_back(i);
                    }
                    Fibration fib;
                    fib.name = "L" + std::to_string(a + 1) + std::to_string(b + 1) + std::to_string(c + 1);
                    fib.perm = {rest[0], rest[1], a, b, c, rest[2]};
                    out.push_back(fib);
                }
            }
        }
        return out;
    }();
    return f;
}

ProjectivePoint to_standard(const Fibration& f, const ProjectivePoint& x) {
    std::vector<Rational> s(6);
    for (std::size_t i = 0; i < 6; ++i) s[i] = x[f.perm[i]];
    return ProjectivePoint(s);
}

ProjectivePoint from_standard(const Fibration& f, const ProjectivePoint& x) {
    std::vector<Rational> s(6);
    for (std::size_t i = 0; i < 6; ++i) s[f.perm[i]] = x[i];
    return ProjectivePoint(s);
}

ProjectivePoint point_p0() { return ProjectivePoint{20, 2, -9, -60, 15, 32}; }

namespace {

ObstructionSample sample_obstruction(const QuarticModel& pair, const ProjectivePoint& p) {
    ObstructionSample s{p, "", {}, false, true};
    try {
        const ConicSymbol sym = conic_to_symbol(obstruction_conic(pair, p));
        s.symbol = sym.to_string();
        s.same_class = same_class_q(sym.a_q(), sym.b_q(), Rational(-3), Rational(-1));
        s.representative = small_representative(sym.a_q(), sym.b_q());
    } catch (const FactorizationLimit&) {
        s.determined = false;
    }
    return s;
}

}  // namespace

GenerationReport generate_points(const GenerationOptions& opt) {
    GenerationReport rep;
    const ProjectivePoint p0 = point_p0();
    std::set<ProjectivePoint> seen;
    std::deque<ProjectivePoint> queue;
    auto add = [&](const ProjectivePoint& p, const std::string& why) {
        if (rep.points.size() >= opt.count || !seen.insert(p).second) return;
        rep.points.push_back({p, why});
        queue.push_back(p);
    };
    add(p0, "seed P0");
    {
        const auto sp = slice_point(p0);
        rep.seed_non_torsion = torsion_test(cubic_family(sp->params), sp->point).non_torsion_certified;
    }
    const ProjectivePoint t1{0, 1, 0};
    const ProjectivePoint t2{1, -1, 0};
    bool first = true;
    while (!queue.empty() && rep.points.size() < opt.count) {
        const ProjectivePoint p = queue.front();
        queue.pop_front();
        for (const auto& fib : opt.all_fibrations ? all_fibrations() : fibrations()) {
            const auto sp = slice_point(to_standard(fib, p));
            if (!sp) continue;
            PlaneCubic c;
            try {
                c = cubic_family(sp->params);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (!evaluate_at(c.form, 3, sp->point).is_zero()) continue;
            const int k = (first && fib.name == "L345") ? opt.seed_multiples : opt.other_multiples;
            const std::string fiber =
                fib.name + " (u,v)=(" + sp->params.u.to_string() + "," + sp->params.v.to_string() + ")";
            auto emit = [&](const ProjectivePoint& q, const std::string& what) {
                if (q == c.origin) return;
                const ProjectivePoint x = from_standard(fib, embed_to_bprime(sp->params, q));
                add(x, fiber + " " + what);
            };
            try {
                ProjectivePoint q = sp->point;
                for (int n = 1; n <= k; ++n) {
                    emit(q, std::to_string(n) + "P");
                    emit(cubic_negate(c, q), "-" + std::to_string(n) + "P");
                    emit(cubic_group_law(c, q, t1), std::to_string(n) + "P+T1");
                    emit(cubic_group_law(c, q, t2), std::to_string(n) + "P+T2");
                    q = cubic_group_law(c, q, sp->point);
                }
            } catch (const std::runtime_error&) {
                continue;
            }
        }
        first = false;
    }

    const QuarticModel pair = bprime_pair();
    const QuarticModel reduced = bprime_model();
    std::vector<ProjectivePoint> off;
    for (const auto& g : rep.points) {
        const ProjectivePoint y = QuarticModel::drop_coordinate(g.point, 5);
        if (hessian_membership(reduced, y) == HessianStatus::off) off.push_back(g.point);
    }
    rep.off_hessian = off.size();
    Matrix<Rational> rows;
    for (const auto& g : rep.points) rows.push_back(g.point.coords());
    rep.coordinate_rank = rank(rows);

    std::stable_sort(off.begin(), off.end(),
                     [](const ProjectivePoint& a, const ProjectivePoint& b) { return a.max_abs() < b.max_abs(); });
    // one representative per orbit under permutations and x -> -x
    std::set<std::vector<Rational>> orbits;
    std::vector<ProjectivePoint> candidates;
    for (const auto& p : off) {
        std::vector<Rational> key = p.coords();
        std::vector<Rational> neg;
        for (const auto& c : key) neg.push_back(-c);
        std::sort(key.begin(), key.end());
        std::sort(neg.begin(), neg.end());
        if (orbits.insert(std::min(key, neg)).second) candidates.push_back(p);
    }
    // samples whose symbol cannot be factored are kept as undetermined and
    // the next candidate is tried
    const unsigned threads = std::max(1U, opt.threads);
    std::size_t determined = 0;
    std::size_t next = 0;
    while (determined < opt.sample_obstruction && next < candidates.size() &&
           rep.samples.size() < 3 * opt.sample_obstruction) {
        std::vector<std::future<ObstructionSample>> jobs;
        const std::size_t want = std::min<std::size_t>(threads, opt.sample_obstruction - determined);
        for (std::size_t i = 0; i < want && next < candidates.size(); ++i, ++next) {
            jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                      [&pair, p = candidates[next]] { return sample_obstruction(pair, p); }));
        }
        for (auto& j : jobs) {
            rep.samples.push_back(j.get());
            if (rep.samples.back().determined) ++determined;
        }
    }
    return rep;
}

}  // namespace burkhardt
