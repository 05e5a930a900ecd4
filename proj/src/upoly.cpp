#include "burkhardt/upoly.hpp"

#include <stdexcept>

namespace burkhardt {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return {};
    const Rational lc = c_.back();
    std::vector<Rational> m;
    m.reserve(c_.size());
    for (const auto& x : c_) m.push_back(x / lc);
    return UPoly(std::move(m));
}

Rational UPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string UPoly::to_string(const std::string& var) const {
    const VarList vars{var};
    return from_upoly(*this, vars, 0).to_string();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UDivision divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational f = rem[static_cast<std::size_t>(k + db)] / b.leading();
        quo[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= f * b[static_cast<std::size_t>(j)];
        }
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_squarefree(const UPoly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f;
    const UPoly g = gcd(f, f.derivative());
    return divmod(f, g).quotient;
}

UPoly to_upoly(const QPoly& p, std::size_t var) {
    std::vector<Rational> c(p.degree_in(var) + 1);
    for (const auto& [m, coef] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != var && m[i] != 0) throw std::invalid_argument("to_upoly: not univariate");
        }
        c[m[var]] += coef;
    }
    return UPoly(std::move(c));
}

QPoly from_upoly(const UPoly& u, const VarList& vars, std::size_t var) {
    QPoly p(vars);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        p.add_term(Monomial::unit(vars.size(), var, static_cast<Exponent>(i)), u.coeffs()[i]);
    }
    return p;
}

}  // namespace burkhardt
