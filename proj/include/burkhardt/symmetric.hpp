#pragma once

#include "burkhardt/polynomial.hpp"

#include <map>
#include <span>
#include <vector>

namespace burkhardt {

/// e_k(x_1..x_n) over the given ambient (all of its variables).
QPoly elementary_symmetric(const VarList& vars, unsigned k);
/// p_k(x_1..x_n) = sum x_i^k.
QPoly power_sum(const VarList& vars, unsigned k);

/// Numeric power sums p_0..p_{count-1} of n roots whose elementary symmetric
/// values are e[0..n-1] = e_1..e_n (Newton's identities; p_0 = n).
std::vector<Rational> power_sums_from_elementary(std::span<const Rational> e, std::size_t count);

/// Elementary symmetric values e_1..e_n of the roots of the monic polynomial
/// T^n + c[n-1] T^{n-1} + ... + c[0].
std::vector<Rational> elementary_from_monic(std::span<const Rational> c);

/// Invariance under every adjacent transposition of the ambient variables.
bool is_symmetric(const QPoly& p);

/// Rewrites symmetric polynomials in x_1..x_n as polynomials in e_1..e_n.
///
/// The input is split into monomial symmetric functions m_lambda; each is
/// expanded into power sums by Moebius inversion over set partitions of the
/// parts of lambda, and power sums are turned into elementary symmetric
/// functions with Newton's identities. Expansions are cached per instance.
class SymmetricReducer {
public:
    SymmetricReducer(std::size_t n, VarList elementary_vars);

    /// Throws std::invalid_argument when p is not symmetric or lives over a
    /// ring of the wrong size.
    QPoly reduce(const QPoly& p);

    [[nodiscard]] const VarList& elementary_vars() const { return evars_; }

    /// p_k as a polynomial in e_1..e_n.
    const QPoly& power_sum_in_e(unsigned k);
    /// m_lambda as a polynomial in e_1..e_n (lambda nonincreasing, parts > 0).
    const QPoly& monomial_symmetric_in_e(const std::vector<Exponent>& lambda);

private:
    std::size_t n_;
    VarList evars_;
    std::vector<QPoly> power_sums_;
    std::map<std::vector<Exponent>, QPoly> monomial_cache_;
};

/// symmetric_reduce with output variables e1..en.
QPoly symmetric_reduce(const QPoly& p);
/// Substitutes e_k = e_k(x) for a polynomial over e1..en, giving a polynomial
/// over `vars` (n variables).
QPoly expand_elementary(const QPoly& q, const VarList& vars);

}  // namespace burkhardt
