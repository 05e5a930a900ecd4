#include "burkhardt/quadform.hpp"

#include <stdexcept>

namespace burkhardt {

Matrix<QPoly> gram_matrix(const QPoly& q, std::span<const std::size_t> vars) {
    const std::size_t n = vars.size();
    const QPoly zero(q.vars());
    Matrix<QPoly> g(n, std::vector<QPoly>(n, zero));
    const Rational half(Integer(1), Integer(2));
    for (const auto& [mono, coef] : q.coefficients_in(vars)) {
        if (mono.degree() != 2) throw std::invalid_argument("gram_matrix: not a quadratic form");
        std::vector<std::size_t> hit;
        for (std::size_t k = 0; k < n; ++k) {
            for (Exponent e = 0; e < mono[k]; ++e) hit.push_back(k);
        }
        if (hit[0] == hit[1]) {
            g[hit[0]][hit[0]] += coef;
        } else {
            g[hit[0]][hit[1]] += coef * half;
            g[hit[1]][hit[0]] += coef * half;
        }
    }
    return g;
}

namespace {

// Preference order for pivots: a nonzero constant term wins (keeps
// parameter degrees down), then the larger leading rational magnitude.
bool better_pivot(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) return !a.is_zero();
    if (a.is_zero()) return false;
    const bool ca = !a.constant_term().is_zero();
    const bool cb = !b.constant_term().is_zero();
    if (ca != cb) return ca;
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return a.leading_term().second.abs() > b.leading_term().second.abs();
}

}  // namespace

Diagonalization diagonalize(const Matrix<QPoly>& gram) {
    const std::size_t n = gram.size();
    const VarList vars = n > 0 ? gram[0][0].vars() : VarList();
    const QPoly zero(vars);
    Matrix<QPoly> basis(n, std::vector<QPoly>(n, zero));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = QPoly(vars, Rational(1));

    auto pair = [&](std::size_t i, std::size_t j) {
        QPoly acc(vars);
        for (std::size_t k = 0; k < n; ++k) {
            if (basis[i][k].is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (basis[j][l].is_zero() || gram[k][l].is_zero()) continue;
                acc += basis[i][k] * gram[k][l] * basis[j][l];
            }
        }
        return acc;
    };

    Diagonalization out;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        QPoly best(vars);
        for (std::size_t i = step; i < n; ++i) {
            QPoly d = pair(i, i);
            if (better_pivot(d, best)) {
                best = std::move(d);
                piv = i;
            }
        }
        if (piv == n) {
            for (std::size_t i = step; i < n && piv == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!pair(i, j).is_zero()) {
                        for (std::size_t k = 0; k < n; ++k) basis[i][k] += basis[j][k];
                        piv = i;
                        break;
                    }
                }
            }
            if (piv == n) break;
        }
        std::swap(basis[piv], basis[step]);
        const QPoly a = pair(step, step);
        for (std::size_t j = step + 1; j < n; ++j) {
            const QPoly b = pair(step, j);
            if (b.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) basis[j][k] = basis[j][k] * a - basis[step][k] * b;
        }
        out.diagonal.push_back(a);
        ++out.rank;
    }
    while (out.diagonal.size() < n) out.diagonal.push_back(zero);
    out.basis = std::move(basis);
    return out;
}

RationalDiagonalization diagonalize_rational(const Matrix<Rational>& gram) {
    const std::size_t n = gram.size();
    Matrix<Rational> g = gram;
    Matrix<Rational> basis = identity_matrix<Rational>(n);
    RationalDiagonalization out;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = step; i < n; ++i) {
            if (!g[i][i].is_zero() && (piv == n || g[i][i].abs() > g[piv][piv].abs())) piv = i;
        }
        if (piv == n) {
            // zero diagonal: e_i + e_j has value 2 g_ij
            for (std::size_t i = step; i < n && piv == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (g[i][j].is_zero()) continue;
                    for (std::size_t k = 0; k < n; ++k) basis[i][k] += basis[j][k];
                    for (std::size_t k = 0; k < n; ++k) g[i][k] += g[j][k];
                    for (std::size_t k = 0; k < n; ++k) g[k][i] += g[k][j];
                    piv = i;
                    break;
                }
            }
            if (piv == n) break;
        }
        std::swap(basis[piv], basis[step]);
        std::swap(g[piv], g[step]);
        for (auto& row : g) std::swap(row[piv], row[step]);
        const Rational a = g[step][step];
        for (std::size_t j = step + 1; j < n; ++j) {
            const Rational r = g[step][j] / a;
            if (r.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) basis[j][k] -= r * basis[step][k];
            for (std::size_t k = 0; k < n; ++k) g[j][k] -= r * g[step][k];
            for (std::size_t k = 0; k < n; ++k) g[k][j] -= r * g[k][step];
        }
        out.diagonal.push_back(a);
        ++out.rank;
    }
    while (out.diagonal.size() < n) out.diagonal.push_back(Rational());
    out.basis = std::move(basis);
    return out;
}

QPoly form_value(const Matrix<QPoly>& g, const std::vector<QPoly>& x) {
    QPoly total;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[i][j].is_zero()) continue;
            total += g[i][j] * x[i] * x[j];
        }
    }
    return total;
}

}  // namespace burkhardt
