#include "burkhardt/obstruction.hpp"

#include "burkhardt/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace burkhardt {

namespace {

struct Reduced {
    QuarticModel model;
    ProjectivePoint alpha;
};

Reduced reduce(const QuarticModel& f, const ProjectivePoint& alpha) {
    if (alpha.size() != f.coords) throw std::invalid_argument("point has the wrong number of coordinates");
    if (!on_model(f, alpha)) throw std::invalid_argument("point is not on the model");
    if (!f.is_pair()) return {f, alpha};
    const std::size_t last = f.coords - 1;
    return {f.eliminate(last), QuarticModel::drop_coordinate(alpha, last)};
}

// Ambient with the projective coordinates replaced by `names`.
VarList replace_coordinates(const QuarticModel& m, const std::vector<std::string>& names) {
    std::vector<std::string> all = names;
    for (std::size_t i = m.coords; i < m.form.nvars(); ++i) all.push_back(m.form.vars()[i]);
    return VarList(std::move(all));
}

// Images of the model's parameters in a ring whose parameters follow
// `offset` new coordinates.
void push_parameters(std::vector<QPoly>& images, const QuarticModel& m, const VarList& target,
                     std::size_t offset) {
    for (std::size_t i = m.coords; i < m.form.nvars(); ++i) {
        images.push_back(QPoly::variable(target, offset + i - m.coords));
    }
}

// A parameter-only polynomial of the model ring moved into `target`.
QPoly move_coefficient(const QPoly& c, const QuarticModel& m, const VarList& target, std::size_t offset) {
    std::vector<QPoly> images(m.coords, QPoly(target));
    push_parameters(images, m, target, offset);
    return c.substitute(images);
}

bool better_coefficient(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) return !a.is_zero();
    if (a.is_zero()) return false;
    if (a.is_constant() != b.is_constant()) return a.is_constant();
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return a.leading_term().second.abs() > b.leading_term().second.abs();
}

// P^(3) = sum c_j x_j = 0 parametrized by y_0..y_3: x_j = c_m y_j (j != m),
// x_m = -sum c_j y_j, with m the coordinate of the dominant coefficient.
struct Hyperplane {
    VarList ring;               // y0..y3 + parameters
    std::vector<QPoly> images;  // model variables -> ring
    std::size_t solved = 0;
    std::vector<std::size_t> kept;  // model coordinate of y_i
};

Hyperplane parametrize_hyperplane(const QuarticModel& m, const QPoly& p3) {
    const std::size_t n = m.coords;
    std::vector<QPoly> c;
    for (std::size_t j = 0; j < n; ++j) {
        const auto coeffs = p3.coefficients_in(std::vector<std::size_t>{j});
        const auto it = coeffs.find(Monomial::unit(1, 0));
        c.push_back(it == coeffs.end() ? QPoly(p3.vars()) : it->second);
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (better_coefficient(c[j], c[best])) best = j;
    }
    if (c[best].is_zero()) throw std::invalid_argument("third polar vanishes identically");
    Hyperplane h;
    h.solved = best;
    std::vector<std::string> names;
    for (std::size_t j = 0; j + 1 < n; ++j) names.push_back("y" + std::to_string(j));
    h.ring = replace_coordinates(m, names);
    const std::size_t off = n - 1;
    const QPoly cm = move_coefficient(c[best], m, h.ring, off);
    QPoly solved(h.ring);
    std::size_t k = 0;
    h.images.assign(n, QPoly(h.ring));
    for (std::size_t j = 0; j < n; ++j) {
        if (j == best) continue;
        const QPoly y = QPoly::variable(h.ring, k);
        h.images[j] = cm * y;
        solved -= move_coefficient(c[j], m, h.ring, off) * y;
        h.kept.push_back(j);
        ++k;
    }
    h.images[best] = solved;
    push_parameters(h.images, m, h.ring, off);
    return h;
}

QPoly lambda_shift(const QPoly& q, std::size_t coords, const std::vector<Rational>& dir, const std::string& name) {
    const VarList ext = q.vars().concat(VarList{name});
    const QPoly lam = QPoly::variable(ext, ext.size() - 1);
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < q.nvars(); ++i) {
        QPoly x = QPoly::variable(ext, i);
        if (i < coords && !dir[i].is_zero()) x += lam * dir[i];
        images.push_back(std::move(x));
    }
    return q.substitute(images) - q.embed(ext);
}

}  // namespace

QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    Integer num_gcd;
    Integer den_lcm(1);
    for (const auto& [mono, c] : p.terms()) {
        const Integer num = ::abs(c.numerator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return p * Rational(den_lcm, num_gcd);
}

QPoly polar(const QuarticModel& f, const ProjectivePoint& alpha, int r) {
    if (r < 1 || r > 3) throw std::out_of_range("polar order must be 1, 2 or 3");
    if (alpha.size() != f.coords) throw std::invalid_argument("point has the wrong number of coordinates");
    QPoly p = f.form;
    for (int k = 0; k < r; ++k) {
        QPoly next(p.vars());
        for (std::size_t i = 0; i < f.coords; ++i) {
            if (!alpha[i].is_zero()) next += p.derivative(i) * alpha[i];
        }
        p = std::move(next);
    }
    return p;
}

PolarSequence polars(const QuarticModel& f, const ProjectivePoint& alpha) {
    return {polar(f, alpha, 1), polar(f, alpha, 2), polar(f, alpha, 3)};
}

TernaryQuadratic obstruction_conic(const QuarticModel& f, const ProjectivePoint& alpha) {
    const auto [m, a] = reduce(f, alpha);
    if (hessian_membership(m, a) == HessianStatus::on) {
        throw std::invalid_argument("point lies on the Hessian; the polar cone degenerates");
    }
    const QPoly p2 = polar(m, a, 2);
    const QPoly p3 = polar(m, a, 3);
    const Hyperplane h = parametrize_hyperplane(m, p3);
    const QPoly q4 = p2.substitute(h.images);

    std::vector<Rational> ahat;
    for (std::size_t j : h.kept) ahat.push_back(a[j]);
    if (!lambda_shift(q4, ahat.size(), ahat, "lambda").is_zero()) {
        throw std::runtime_error("restricted second polar is not a cone with vertex alpha");
    }

    std::size_t k = 0;
    for (std::size_t i = 1; i < ahat.size(); ++i) {
        if (ahat[i].abs() > ahat[k].abs()) k = i;
    }
    const VarList plane = replace_coordinates(m, {"X", "Y", "Z"});
    std::vector<QPoly> to_plane;
    std::size_t next = 0;
    for (std::size_t i = 0; i < ahat.size(); ++i) {
        to_plane.push_back(i == k ? QPoly(plane) : QPoly::variable(plane, next++));
    }
    push_parameters(to_plane, m, plane, 3);

    TernaryQuadratic out;
    for (std::size_t i = 0; i < m.coords; ++i) out.embedding.push_back(h.images[i].substitute(to_plane));
    out.form = primitive_part(q4.substitute(to_plane));
    const std::vector<std::size_t> xyz{0, 1, 2};
    out.gram = gram_matrix(out.form, xyz);
    out.solved_coordinate = h.solved;
    out.vertex_coordinate = h.kept[k];
    if (out.form.is_zero()) throw std::runtime_error("obstruction conic vanishes identically");
    return out;
}

QPoly normalize_square_class(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square class of zero");
    const std::size_t n = p.nvars();
    std::vector<Exponent> low(n, 0);
    bool first = true;
    Integer num_gcd;
    Integer den_lcm(1);
    for (const auto& [mono, c] : p.terms()) {
        for (std::size_t i = 0; i < n; ++i) low[i] = first ? mono[i] : std::min(low[i], mono[i]);
        first = false;
        const Integer num = ::abs(c.numerator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    const Rational content = Rational(num_gcd, den_lcm) * Rational(p.leading_term().second.sign());
    const Monomial gcd_mono(low);
    std::vector<Exponent> parity(n);
    for (std::size_t i = 0; i < n; ++i) parity[i] = low[i] % 2;
    QPoly out(p.vars());
    const Rational scale = Rational(squarefree_kernel(content)) / content;
    for (const auto& [mono, c] : p.terms()) out.add_term(mono / gcd_mono * Monomial(parity), c * scale);
    return out;
}

std::string ConicSymbol::to_string() const { return "(" + a.to_string() + "," + b.to_string() + ")"; }

ConicSymbol conic_to_symbol(const TernaryQuadratic& q) {
    if (q.is_rational()) {
        Matrix<Rational> g(3, std::vector<Rational>(3));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) g[i][j] = q.gram[i][j].constant_term();
        }
        const RationalDiagonalization d = diagonalize_rational(g);
        if (d.rank < 3) throw std::invalid_argument("conic is degenerate (rank " + std::to_string(d.rank) + ")");
        ConicSymbol s;
        for (const auto& x : d.diagonal) s.diagonal.push_back(QPoly(q.vars(), x));
        // kernels of the factors separately: they are much smaller than the products
        Integer k[3];
        for (int i = 0; i < 3; ++i) k[i] = squarefree_kernel(d.diagonal[i]);
        auto product_kernel = [](const Integer& x, const Integer& y) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            return Integer(-(x / g) * (y / g));
        };
        s.a = QPoly(q.vars(), Rational(product_kernel(k[0], k[2])));
        s.b = QPoly(q.vars(), Rational(product_kernel(k[1], k[2])));
        return s;
    }
    const Diagonalization d = diagonalize(q.gram);
    if (d.rank < 3) throw std::invalid_argument("conic is degenerate (rank " + std::to_string(d.rank) + ")");
    ConicSymbol s;
    s.diagonal = d.diagonal;
    s.a = normalize_square_class(-(d.diagonal[0] * d.diagonal[2]));
    s.b = normalize_square_class(-(d.diagonal[1] * d.diagonal[2]));
    return s;
}

std::optional<RstClass> symbol_class_rst(const ConicSymbol& sym) {
    auto element = [](const QPoly& p) -> std::optional<MonomialElt> {
        if (p.term_count() != 1) return std::nullopt;
        const auto [mono, c] = p.leading_term();
        MonomialElt e;
        e.sign = c.sign();
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (mono[i] % 2 == 0) continue;
            if (p.vars()[i] == "s") {
                e.es = 1;
            } else if (p.vars()[i] == "t") {
                e.et = 1;
            } else {
                return std::nullopt;
            }
        }
        return e;
    };
    const auto a = element(sym.a);
    const auto b = element(sym.b);
    if (!a || !b) return std::nullopt;
    return rst_symbol_to_class(*a, *b);
}

std::optional<bool> same_class_qt(const ConicSymbol& x, const ConicSymbol& y, std::string_view param) {
    struct Split {
        Rational c;
        unsigned e = 0;
    };
    auto split = [&](const QPoly& p) -> std::optional<Split> {
        if (p.term_count() != 1) return std::nullopt;
        const auto [mono, c] = p.leading_term();
        Split out{c, 0};
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (mono[i] == 0) continue;
            if (p.vars()[i] != param) return std::nullopt;
            out.e = mono[i] % 2;
        }
        return out;
    };
    struct Parts {
        std::vector<Place> constant;
        Integer residue;
    };
    auto parts = [&](const ConicSymbol& s) -> std::optional<Parts> {
        const auto a = split(s.a);
        const auto b = split(s.b);
        if (!a || !b) return std::nullopt;
        Rational r(1);
        if (a->e) r *= b->c;
        if (b->e) r *= a->c;
        if (a->e && b->e) r = -r;
        return Parts{ramified_places(a->c, b->c), squarefree_kernel(r)};
    };
    const auto px = parts(x);
    const auto py = parts(y);
    if (!px || !py) return std::nullopt;
    return px->constant == py->constant && px->residue == py->residue;
}

namespace {

std::optional<std::array<Integer, 3>> search_small(const Integer g[3][3], long bound) {
    using i128 = __int128;
    const i128 a = g[2][2].get_si();
    const i128 g01 = g[0][1].get_si();
    const i128 g02 = g[0][2].get_si();
    const i128 g12 = g[1][2].get_si();
    const i128 g00 = g[0][0].get_si();
    const i128 g11 = g[1][1].get_si();
    auto isqrt = [](i128 v) -> i128 {
        auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
        while (r > 0 && r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    };
    std::optional<std::array<Integer, 3>> hit;
    auto to_int = [](i128 v) {
        // |v| stays below 2^126 for the admitted coefficient sizes
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        Integer z(static_cast<unsigned long>(u >> 64));
        z <<= 64;
        z += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
        return neg ? Integer(-z) : z;
    };
    auto try_pair = [&](long xl, long yl) {
        const i128 x = xl;
        const i128 y = yl;
        const i128 b = 2 * (g02 * x + g12 * y);
        const i128 c = g00 * x * x + 2 * g01 * x * y + g11 * y * y;
        if (a == 0) {
            if (b == 0) {
                if (c != 0) return false;
                hit = std::array<Integer, 3>{to_int(x), to_int(y), Integer(0)};
                return true;
            }
            hit = std::array<Integer, 3>{to_int(x * b), to_int(y * b), to_int(-c)};
            return true;
        }
        const i128 disc = b * b - 4 * a * c;
        if (disc < 0) return false;
        const i128 r = isqrt(disc);
        if (r * r != disc) return false;
        hit = std::array<Integer, 3>{to_int(2 * a * x), to_int(2 * a * y), to_int(r - b)};
        return true;
    };
    for (long h = 1; h <= bound; ++h) {
        for (long o = -h; o <= h; ++o) {
            if (try_pair(h, o) || try_pair(o, h)) return hit;
        }
    }
    return std::nullopt;
}

std::optional<std::array<Integer, 3>> search_big(const Integer g[3][3], long bound) {
    for (long h = 1; h <= bound; ++h) {
        for (long o = -h; o <= h; ++o) {
            for (int swap = 0; swap < 2; ++swap) {
                const Integer x(swap ? o : h);
                const Integer y(swap ? h : o);
                const Integer a = g[2][2];
                const Integer b = 2 * (g[0][2] * x + g[1][2] * y);
                const Integer c = g[0][0] * x * x + 2 * g[0][1] * x * y + g[1][1] * y * y;
                if (a == 0) {
                    if (b == 0) {
                        if (c == 0) return std::array<Integer, 3>{x, y, Integer(0)};
                        continue;
                    }
                    return std::array<Integer, 3>{Integer(x * b), Integer(y * b), Integer(-c)};
                }
                const Integer disc = b * b - 4 * a * c;
                if (disc < 0) continue;
                const Integer r = exact_sqrt(disc);
                if (r < 0) continue;
                return std::array<Integer, 3>{Integer(2 * a * x), Integer(2 * a * y), Integer(r - b)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ConicPoint> find_conic_point(const TernaryQuadratic& q, long bound) {
    if (!q.is_rational()) throw std::invalid_argument("conic point search needs a conic over Q");
    Matrix<Rational> gq(3, std::vector<Rational>(3));
    Integer den(1);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            gq[i][j] = q.gram[i][j].constant_term();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), gq[i][j].denominator().get_mpz_t());
        }
    }
    const RationalDiagonalization d = diagonalize_rational(gq);
    if (d.rank < 3) throw std::invalid_argument("conic is degenerate");
    const int s0 = d.diagonal[0].sign();
    if (d.diagonal[1].sign() == s0 && d.diagonal[2].sign() == s0) return std::nullopt;

    // integer Gram matrix, then x, y over a box with z from the quadratic
    Integer g[3][3];
    bool small = bound <= 100000;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            g[i][j] = (gq[i][j] * Rational(den)).numerator();
            if (::abs(g[i][j]) >= Integer(1) << 40) small = false;
        }
    }
    const auto hit = small ? search_small(g, bound) : search_big(g, bound);
    if (!hit) return std::nullopt;
    std::vector<Rational> p;
    for (const auto& c : *hit) p.push_back(Rational(c));
    const ProjectivePoint prim(p);
    ConicPoint out;
    for (const auto& c : prim.coords()) out.coords.push_back(c.numerator());
    return out;
}

MarkedSextic marked_sextic(const QuarticModel& f, const ProjectivePoint& alpha, long search_bound) {
    const TernaryQuadratic q = obstruction_conic(f, alpha);
    if (!q.is_rational()) throw std::invalid_argument("marked sextic needs a model over Q");
    const auto pt = find_conic_point(q, search_bound);
    if (!pt) {
        throw std::runtime_error("no conic point found within search bound " + std::to_string(search_bound));
    }
    const VarList uw{"u", "w"};
    std::vector<Rational> p;
    for (const auto& c : pt->coords) p.push_back(Rational(c));
    std::size_t big = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (p[i].abs() > p[big].abs()) big = i;
    }
    std::vector<QPoly> dir(3, QPoly(uw));
    std::size_t slot = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i != big) dir[i] = QPoly::variable(uw, slot++);
    }
    QPoly qd(uw);
    QPoly bpd(uw);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const Rational g = q.gram[i][j].constant_term();
            if (g.is_zero()) continue;
            qd += dir[i] * dir[j] * g;
            bpd += dir[j] * (g * p[i]);
        }
    }
    MarkedSextic out;
    out.base_point = *pt;
    for (std::size_t i = 0; i < 3; ++i) {
        out.parametrization.push_back(qd * p[i] - bpd * dir[i] * Rational(2));
    }
    const auto [m, a] = reduce(f, alpha);
    const QPoly cubic = polar(m, a, 1).substitute(q.embedding);
    out.binary_form = primitive_part(cubic.substitute(out.parametrization));
    if (out.binary_form.is_zero()) throw std::runtime_error("pullback not squarefree: the cubic contains the conic");
    const QPoly dehom = out.binary_form.substitute({QPoly::variable(uw, 0), QPoly(uw, Rational(1))});
    out.dehomogenized = to_upoly(dehom, 0);
    if (out.dehomogenized.degree() < 5 || !is_squarefree(out.dehomogenized)) {
        throw std::runtime_error("pullback not squarefree (alpha is special)");
    }
    return out;
}

EnvelopingCone enveloping_cone(const QuarticModel& f, const ProjectivePoint& alpha) {
    const auto [m, a] = reduce(f, alpha);
    if (hessian_membership(m, a) == HessianStatus::on) throw std::invalid_argument("point lies on the Hessian");
    const QPoly cubic = polar(m, a, 1);
    const VarList ext = m.form.vars().concat(VarList{"lambda"});
    const std::size_t li = ext.size() - 1;
    const QPoly lam = QPoly::variable(ext, li);
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < m.form.nvars(); ++i) {
        QPoly x = QPoly::variable(ext, i);
        if (i < m.coords) x = lam * x + QPoly(ext, a[i]);
        images.push_back(std::move(x));
    }
    const QPoly expanded = cubic.substitute(images);
    std::vector<QPoly> back;
    for (std::size_t i = 0; i < m.form.nvars(); ++i) back.push_back(QPoly::variable(m.form.vars(), i));
    back.push_back(QPoly(m.form.vars()));
    std::vector<QPoly> part(4, QPoly(m.form.vars()));
    for (const auto& [mono, c] : expanded.coefficients_in(std::vector<std::size_t>{li})) {
        part[mono[0]] = c.substitute(back);
    }
    if (!part[0].is_zero()) throw std::runtime_error("the first polar does not vanish at alpha");
    EnvelopingCone out;
    out.a = part[1];
    out.b = part[2];
    out.c3 = part[3];
    out.quartic = out.b * out.b - out.a * out.c3 * Rational(4);
    out.vertex_ok = lambda_shift(out.quartic, m.coords, a.coords(), "mu").is_zero();
    return out;
}

TropeRestriction trope_restriction(const QuarticModel& f, const ProjectivePoint& alpha) {
    const auto [m, a] = reduce(f, alpha);
    const EnvelopingCone cone = enveloping_cone(m, a);
    const Hyperplane h = parametrize_hyperplane(m, polar(m, a, 3));
    TropeRestriction out;
    out.restricted = cone.quartic.substitute(h.images);
    out.root = polynomial_sqrt(out.restricted);
    return out;
}

std::optional<QPoly> polynomial_sqrt(const QPoly& p) {
    if (p.is_zero()) return p;
    const auto [m0, c0] = p.leading_term();
    for (Exponent e : m0.exponents()) {
        if (e % 2) return std::nullopt;
    }
    if (c0.sign() < 0) return std::nullopt;
    const Integer sn = exact_sqrt(c0.numerator());
    const Integer sd = exact_sqrt(c0.denominator());
    if (sn < 0 || sd < 0) return std::nullopt;
    std::vector<Exponent> half;
    for (Exponent e : m0.exponents()) half.push_back(e / 2);
    const Monomial lead(half);
    const Rational lead_c(sn, sd);
    QPoly r = QPoly::term(p.vars(), lead, lead_c);
    Monomial last = lead;
    const GrevlexDescending before;
    for (;;) {
        const QPoly rem = p - r * r;
        if (rem.is_zero()) return r;
        const auto [m, c] = rem.leading_term();
        if (!lead.divides(m)) return std::nullopt;
        const Monomial next = m / lead;
        if (!before(last, next)) return std::nullopt;
        r += QPoly::term(p.vars(), next, c / (lead_c * Rational(2)));
        last = next;
    }
}

}  // namespace burkhardt
