#pragma once

#include "burkhardt/polynomial.hpp"

#include <string>
#include <vector>

namespace burkhardt {

/// Dense univariate polynomial over Q, coefficient i multiplies T^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
    [[nodiscard]] Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    [[nodiscard]] const Rational& leading() const { return c_.back(); }
    [[nodiscard]] UPoly derivative() const;
    [[nodiscard]] UPoly monic() const;
    [[nodiscard]] Rational evaluate(const Rational& x) const;
    [[nodiscard]] std::string to_string(const std::string& var = "T") const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

struct UDivision {
    UPoly quotient;
    UPoly remainder;
};

UDivision divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// gcd(f, f') is constant.
bool is_squarefree(const UPoly& f);
/// Product of the distinct irreducible factors of f (monic, up to the
/// leading constant).
UPoly squarefree_part(const UPoly& f);

/// Conversions between a univariate QPoly in variable `var` and UPoly.
UPoly to_upoly(const QPoly& p, std::size_t var);
QPoly from_upoly(const UPoly& u, const VarList& vars, std::size_t var);

}  // namespace burkhardt
