#include "burkhardt/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burkhardt {

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) {
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x.is_zero(); })) {
        throw std::invalid_argument("projective point with all coordinates zero");
    }
    Integer l = 1;
    for (const auto& x : coords) {
        const Integer d = x.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(coords.size());
    Integer g = 0;
    for (const auto& x : coords) {
        Integer n = x.numerator() * (l / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    int sign = 0;
    for (const auto& n : ints) {
        if (n != 0) {
            sign = sgn(n);
            break;
        }
    }
    c_.reserve(ints.size());
    for (auto& n : ints) {
        Integer q = n / g;
        if (sign < 0) q = -q;
        c_.emplace_back(q);
    }
}

ProjectivePoint::ProjectivePoint(std::initializer_list<long> coords)
    : ProjectivePoint(std::vector<Rational>(coords.begin(), coords.end())) {}

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '(') throw ParseError(pos, "expected '('");
    ++pos;
    std::vector<Rational> coords;
    while (true) {
        skip();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
            ++pos;
        }
        if (start == pos) throw ParseError(pos, "expected a coordinate");
        try {
            coords.push_back(Rational::parse(text.substr(start, pos - start)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(start, e.what());
        }
        skip();
        if (pos >= text.size()) throw ParseError(pos, "expected ':' or ')'");
        if (text[pos] == ':') {
            ++pos;
            continue;
        }
        if (text[pos] != ')') throw ParseError(pos, "expected ':' or ')'");
        ++pos;
        break;
    }
    skip();
    if (pos != text.size()) throw ParseError(pos, "trailing characters");
    try {
        return ProjectivePoint(std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string ProjectivePoint::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) out += ':';
        out += c_[i].to_string();
    }
    return out + ")";
}

Integer ProjectivePoint::max_abs() const {
    Integer m = 0;
    for (const auto& x : c_) {
        Integer a = abs(x.numerator());
        if (a > m) m = a;
    }
    return m;
}

std::vector<std::size_t> QuarticModel::coordinate_indices() const {
    std::vector<std::size_t> idx(coords);
    for (std::size_t i = 0; i < coords; ++i) idx[i] = i;
    return idx;
}

VarList QuarticModel::parameters() const {
    const auto& names = form.vars().names();
    return VarList(std::vector<std::string>(names.begin() + static_cast<long>(coords), names.end()));
}

QuarticModel QuarticModel::eliminate(std::size_t var) const {
    if (!hyperplane) throw std::logic_error("eliminate: model has no hyperplane");
    if (var >= coords) throw std::invalid_argument("eliminate: not a coordinate");
    const QPoly& h = *hyperplane;
    const Rational pivot = h.coefficient(Monomial::unit(h.nvars(), var));
    if (pivot.is_zero()) throw std::invalid_argument("eliminate: hyperplane does not involve the variable");
    for (const auto& [m, c] : h.terms()) {
        if (m.degree() != 1 || m.degree_in(std::vector<std::size_t>(coordinate_indices())) != 1) {
            throw std::invalid_argument("eliminate: hyperplane must be a rational linear form");
        }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < form.nvars(); ++i) {
        if (i != var) names.push_back(form.vars()[i]);
    }
    const VarList target(names);
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < form.nvars(); ++i) {
        if (i == var) {
            QPoly sol(target);
            for (std::size_t j = 0; j < coords; ++j) {
                if (j == var) continue;
                const Rational c = h.coefficient(Monomial::unit(h.nvars(), j));
                sol.add_term(Monomial::unit(target.size(), j < var ? j : j - 1), -c / pivot);
            }
            images.push_back(std::move(sol));
        } else {
            images.push_back(QPoly::variable(target, i < var ? i : i - 1));
        }
    }
    QuarticModel out;
    out.name = name + " (x" + std::to_string(var + 1) + " eliminated)";
    out.form = form.substitute(images);
    out.coords = coords - 1;
    return out;
}

ProjectivePoint QuarticModel::drop_coordinate(const ProjectivePoint& p, std::size_t var) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != var) c.push_back(p[i]);
    }
    return ProjectivePoint(std::move(c));
}

QuarticModel QuarticModel::specialize(std::string_view param, const Rational& value) const {
    const std::size_t idx = form.vars().require(param);
    if (idx < coords) throw std::invalid_argument("specialize: not a parameter");
    QuarticModel out = *this;
    out.form = form.substitute_var(idx, QPoly(form.vars(), value));
    if (hyperplane) out.hyperplane = hyperplane->substitute_var(idx, QPoly(form.vars(), value));
    out.name = name + " at " + std::string(param) + "=" + value.to_string();
    return out;
}

std::string model_to_text(const QuarticModel& m) {
    std::string out = "name: " + m.name + "\ncoords:";
    for (std::size_t i = 0; i < m.coords; ++i) out += " " + m.vars()[i];
    out += "\n";
    if (m.vars().size() > m.coords) {
        out += "params:";
        for (std::size_t i = m.coords; i < m.vars().size(); ++i) out += " " + m.vars()[i];
        out += "\n";
    }
    if (m.hyperplane) out += "hyperplane: " + m.hyperplane->to_string() + "\n";
    out += "form: " + m.form.to_string() + "\n";
    return out;
}

QuarticModel model_from_text(std::string_view text) {
    std::map<std::string, std::pair<std::string, std::size_t>> fields;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            const std::size_t colon = line.find(':');
            if (colon == std::string_view::npos) throw ParseError(pos, "expected 'key: value'");
            std::string key(line.substr(first, colon - first));
            while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
            std::size_t vstart = colon + 1;
            while (vstart < line.size() && line[vstart] == ' ') ++vstart;
            std::string value(line.substr(vstart));
            while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
            if (key != "name" && key != "coords" && key != "params" && key != "hyperplane" && key != "form") {
                throw ParseError(pos + first, "unknown key '" + key + "'");
            }
            if (!fields.emplace(key, std::make_pair(value, pos + vstart)).second) {
                throw ParseError(pos + first, "duplicate key '" + key + "'");
            }
        }
        pos = end + 1;
    }
    auto words = [](const std::string& s) {
        std::vector<std::string> w;
        std::istringstream is(s);
        for (std::string x; is >> x;) w.push_back(x);
        return w;
    };
    if (!fields.count("coords")) throw ParseError(text.size(), "missing 'coords'");
    if (!fields.count("form")) throw ParseError(text.size(), "missing 'form'");
    std::vector<std::string> names = words(fields["coords"].first);
    if (names.empty()) throw ParseError(fields["coords"].second, "no coordinates");
    QuarticModel m;
    m.coords = names.size();
    if (fields.count("params")) {
        for (auto& p : words(fields["params"].first)) names.push_back(std::move(p));
    }
    const VarList vars(names);
    auto poly = [&](const std::string& key) {
        const auto& [value, offset] = fields[key];
        try {
            return QPoly::parse(value, vars);
        } catch (const ParseError& e) {
            throw ParseError(offset + e.offset(), key + ": " + e.what());
        }
    };
    if (fields.count("name")) m.name = fields["name"].first;
    m.form = poly("form");
    if (fields.count("hyperplane")) m.hyperplane = poly("hyperplane");
    return m;
}

QPoly evaluate_at(const QPoly& f, std::size_t coords, const ProjectivePoint& p) {
    if (p.size() != coords) throw std::invalid_argument("point dimension mismatch");
    std::vector<QPoly> images;
    images.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        images.push_back(i < coords ? QPoly(f.vars(), p[i]) : QPoly::variable(f.vars(), i));
    }
    return f.substitute(images);
}

bool on_model(const QuarticModel& m, const ProjectivePoint& p) {
    if (!evaluate_at(m.form, m.coords, p).is_zero()) return false;
    return !m.hyperplane || evaluate_at(*m.hyperplane, m.coords, p).is_zero();
}

std::vector<QPoly> gradient(const QPoly& f, std::size_t coords) {
    std::vector<QPoly> g;
    g.reserve(coords);
    for (std::size_t i = 0; i < coords; ++i) g.push_back(f.derivative(i));
    return g;
}

QuarticModel standard_quartic() {
    const VarList y = VarList::indexed("y", 0, 5);
    QuarticModel m;
    m.name = "B1";
    m.form = QPoly::parse("y0^4+y0*y1^3+y0*y2^3+y0*y3^3+y0*y4^3+3*y1*y2*y3*y4", y);
    m.coords = 5;
    return m;
}

MaschkeData maschke_map(bool symbolic) {
    const VarList t = VarList::indexed("t", 1, 4);
    MaschkeData d;
    d.y = {
        QPoly::parse("3*t1*t2*t3*t4", t),
        QPoly::parse("t1*t2^3+t1*t3^3-t1*t4^3", t),
        QPoly::parse("-t2*t1^3-t2*t3^3-t2*t4^3", t),
        QPoly::parse("-t3*t1^3+t3*t2^3+t3*t4^3", t),
        QPoly::parse("t4*t1^3+t4*t2^3-t4*t3^3", t),
    };
    if (symbolic) d.composite = standard_quartic().form.substitute(d.y);
    return d;
}

GeneratorSet generators_rho4() {
    const Cyclo3 z = Cyclo3::zeta();
    const Cyclo3 third(Rational(Integer(1), Integer(3)));
    auto scaled = [&](CMatrix m) {
        for (auto& row : m) {
            for (auto& x : row) x *= third;
        }
        return m;
    };
    GeneratorSet g;
    g.a1 = identity_matrix<Cyclo3>(4);
    for (auto& row : g.a1) {
        for (auto& x : row) x = -x;
    }
    g.a2 = scaled({
        {z * 3, 0, 0, 0},
        {0, z + 2, z + 2, -z + 1},
        {0, z + 2, z - 1, -z - 2},
        {0, -z + 1, -z - 2, z + 2},
    });
    g.a3 = scaled({
        {z * 2 + 1, -z * 2 - 1, 0, z + 2},
        {z - 1, z * 2 + 1, 0, -z + 1},
        {0, 0, z * 3 + 3, 0},
        {z + 2, z * 2 + 1, 0, z * 2 + 1},
    });
    return g;
}

namespace {

CPoly to_cyclo(const QPoly& p) {
    return p.map_coefficients([](const Rational& c) { return Cyclo3(c); });
}

std::vector<CPoly> linear_images(const CMatrix& a, const VarList& vars) {
    std::vector<CPoly> images;
    for (const auto& row : a) {
        CPoly p(vars);
        for (std::size_t j = 0; j < row.size(); ++j) p.add_term(Monomial::unit(vars.size(), j), row[j]);
        images.push_back(std::move(p));
    }
    return images;
}

}  // namespace

CMatrix induced_rho5(const CMatrix& a) {
    const MaschkeData d = maschke_map(false);
    const VarList& t = d.y.front().vars();
    if (a.size() != 4) throw std::invalid_argument("induced_rho5: need a 4x4 matrix");
    const auto images = linear_images(a, t);

    std::vector<CPoly> ys;
    std::vector<CPoly> moved;
    std::set<Monomial, GrevlexDescending> support;
    for (const auto& y : d.y) {
        ys.push_back(to_cyclo(y));
        moved.push_back(ys.back().substitute(images));
        for (const auto& [m, c] : ys.back().terms()) support.insert(m);
        for (const auto& [m, c] : moved.back().terms()) support.insert(m);
    }
    const std::vector<Monomial> cols(support.begin(), support.end());
    auto row_of = [&](const CPoly& p) {
        std::vector<Cyclo3> row;
        row.reserve(cols.size());
        for (const auto& m : cols) row.push_back(p.coefficient(m));
        return row;
    };
    CMatrix base;
    CMatrix target;
    for (std::size_t i = 0; i < 5; ++i) {
        base.push_back(row_of(ys[i]));
        target.push_back(row_of(moved[i]));
    }
    auto r = solve_row_combinations(base, target);
    if (!r) throw std::runtime_error("induced_rho5: span of Y0..Y4 not stable");
    return *r;
}

FunctorTraces functor_traces(const CMatrix& a) {
    const Cyclo3 tr = trace(a);
    const Cyclo3 tr2 = trace(multiply(a, a));
    const Cyclo3 half(Rational(Integer(1), Integer(2)));
    return {(tr * tr + tr2) * half, (tr * tr - tr2) * half};
}

std::optional<Cyclo3> invariance_scalar(const QPoly& f, const CMatrix& r) {
    const CPoly cf = to_cyclo(f);
    const CPoly moved = cf.substitute(linear_images(r, f.vars()));
    if (cf.is_zero()) return std::nullopt;
    const auto [m0, c0] = cf.leading_term();
    const Cyclo3 lambda = moved.coefficient(m0) / c0;
    if (lambda.is_zero()) return std::nullopt;
    if (!(moved == cf * lambda)) return std::nullopt;
    return lambda;
}

QPoly hessian_value(const QuarticModel& m, const ProjectivePoint& p) {
    if (m.is_pair()) throw std::invalid_argument("hessian: use the P^4 reduction of a pair model");
    Matrix<QPoly> h(m.coords, std::vector<QPoly>(m.coords));
    const auto g = gradient(m.form, m.coords);
    for (std::size_t i = 0; i < m.coords; ++i) {
        for (std::size_t j = i; j < m.coords; ++j) {
            h[i][j] = evaluate_at(g[i].derivative(j), m.coords, p);
            h[j][i] = h[i][j];
        }
    }
    return determinant(h);
}

HessianStatus hessian_membership(const QuarticModel& m, const ProjectivePoint& p) {
    if (!on_model(m, p)) throw std::invalid_argument("hessian_membership: point not on model");
    return hessian_value(m, p).is_zero() ? HessianStatus::on : HessianStatus::off;
}

Smoothness singularity_test(const QuarticModel& m, const ProjectivePoint& p) {
    if (!on_model(m, p)) throw std::invalid_argument("singularity_test: point not on model");
    std::vector<QPoly> g;
    for (const auto& d : gradient(m.form, m.coords)) g.push_back(evaluate_at(d, m.coords, p));
    if (!m.hyperplane) {
        const bool all_zero = std::all_of(g.begin(), g.end(), [](const QPoly& x) { return x.is_zero(); });
        return all_zero ? Smoothness::singular : Smoothness::smooth;
    }
    std::vector<QPoly> h;
    for (const auto& d : gradient(*m.hyperplane, m.coords)) h.push_back(evaluate_at(d, m.coords, p));
    // rank <= 1 iff every 2x2 minor of the Jacobian vanishes
    for (std::size_t i = 0; i < m.coords; ++i) {
        for (std::size_t j = i + 1; j < m.coords; ++j) {
            if (!(h[i] * g[j] - h[j] * g[i]).is_zero()) return Smoothness::smooth;
        }
    }
    return Smoothness::singular;
}

std::vector<ProjectivePoint> permutation_orbit(const ProjectivePoint& p) {
    std::vector<Rational> c = p.coords();
    std::sort(c.begin(), c.end());
    std::set<ProjectivePoint> seen;
    do {
        seen.insert(ProjectivePoint(c));
    } while (std::next_permutation(c.begin(), c.end()));
    return {seen.begin(), seen.end()};
}

std::string to_string(HessianStatus s) { return s == HessianStatus::on ? "on" : "off"; }
std::string to_string(Smoothness s) { return s == Smoothness::singular ? "singular" : "smooth"; }

}  // namespace burkhardt
