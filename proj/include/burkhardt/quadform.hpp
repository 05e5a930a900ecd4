#pragma once

#include "burkhardt/matrix.hpp"
#include "burkhardt/polynomial.hpp"

#include <vector>

namespace burkhardt {

/// Symmetric Gram matrix G of a quadratic form q in the variables `vars`
/// (indices into q's ambient), so that q = sum G_ij v_i v_j. Entries are
/// polynomials in the remaining (parameter) variables. Throws when q is not
/// homogeneous of degree 2 in `vars`.
Matrix<QPoly> gram_matrix(const QPoly& q, std::span<const std::size_t> vars);

struct Diagonalization {
    std::vector<QPoly> diagonal;  // nonzero pivots first, zeros padded
    Matrix<QPoly> basis;          // row i: coordinates of the i-th new basis vector
    std::size_t rank = 0;
};

/// Fraction-free congruence diagonalization over the polynomial ring: with
/// pivot a = G_11, the basis e1, a*e_j - G_1j*e1 turns the remaining block
/// into a*(a*G_jk - G_1j*G_1k). Pivots preferably have a nonzero constant
/// term, then largest rational magnitude; a zero diagonal with a nonzero
/// off-diagonal entry G_ij uses e_i + e_j.
Diagonalization diagonalize(const Matrix<QPoly>& gram);

struct RationalDiagonalization {
    std::vector<Rational> diagonal;
    Matrix<Rational> basis;
    std::size_t rank = 0;
};

/// Lagrange diagonalization over Q with the largest diagonal entry as pivot.
/// Entries stay ratios of minors, so they are much smaller than the
/// fraction-free ones.
RationalDiagonalization diagonalize_rational(const Matrix<Rational>& gram);

/// Value of the form with Gram matrix g at the vector x.
QPoly form_value(const Matrix<QPoly>& g, const std::vector<QPoly>& x);

}  // namespace burkhardt
