#pragma once

#include "burkhardt/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace burkhardt {

/// Raised when an integer cannot be factored within the work budget.
class FactorizationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    Integer prime;
    unsigned exponent;
};

/// Factorization of |n| (n != 0) into sorted prime powers. Trial division,
/// then Pollard-Brent rho; throws FactorizationLimit past its budget.
std::vector<PrimePower> factor(const Integer& n);

bool is_probable_prime(const Integer& n);
/// p-adic valuation of nonzero n.
unsigned valuation(const Integer& n, const Integer& p);
/// Squarefree integer in the class of a nonzero rational modulo squares.
Integer squarefree_kernel(const Rational& q);
/// Largest s with s*s | n, and n / s^2 (sign kept on the cofactor).
std::pair<Integer, Integer> split_square(const Integer& n);
/// Exact integer square root, or -1 when n is not a perfect square.
Integer exact_sqrt(const Integer& n);

}  // namespace burkhardt
