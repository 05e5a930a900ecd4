#pragma once

#include "burkhardt/polynomial.hpp"

#include <string>
#include <string_view>

namespace burkhardt {

/// Element c00 + c10*sqrt(s) + c01*sqrt(t) + c11*sqrt(st) of the free
/// Q[s,t]-algebra of rank 4. Components are polynomials over the fixed
/// ambient (s, t).
class KummerCoeff {
public:
    KummerCoeff();
    KummerCoeff(long c) : KummerCoeff(Rational(c)) {}  // NOLINT(implicit)
    KummerCoeff(const Rational& c);                    // NOLINT(implicit)
    KummerCoeff(QPoly c00, QPoly c10, QPoly c01, QPoly c11);

    /// The shared (s, t) ambient of every component.
    static const VarList& ambient();
    static KummerCoeff sqrt_s();
    static KummerCoeff sqrt_t();
    static KummerCoeff sqrt_st();
    static KummerCoeff parse(std::string_view text);

    [[nodiscard]] const QPoly& c00() const { return c_[0]; }
    [[nodiscard]] const QPoly& c10() const { return c_[1]; }
    [[nodiscard]] const QPoly& c01() const { return c_[2]; }
    [[nodiscard]] const QPoly& c11() const { return c_[3]; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_rational_component_only() const {
        return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool is_atomic_text() const { return false; }

    KummerCoeff& operator+=(const KummerCoeff& o);
    KummerCoeff& operator-=(const KummerCoeff& o);
    KummerCoeff& operator*=(const KummerCoeff& o) { return *this = *this * o; }

    friend KummerCoeff operator+(KummerCoeff a, const KummerCoeff& b) { return a += b; }
    friend KummerCoeff operator-(KummerCoeff a, const KummerCoeff& b) { return a -= b; }
    friend KummerCoeff operator-(const KummerCoeff& a);
    friend KummerCoeff operator*(const KummerCoeff& a, const KummerCoeff& b);
    friend bool operator==(const KummerCoeff& a, const KummerCoeff& b);

private:
    QPoly c_[4];
};

}  // namespace burkhardt
