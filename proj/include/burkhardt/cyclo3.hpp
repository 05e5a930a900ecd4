#pragma once

#include "burkhardt/rational.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace burkhardt {

/// Element a + b*z of Q(z) with z^2 + z + 1 = 0. No complex embedding is
/// fixed; z is the abstract root.
class Cyclo3 {
public:
    Cyclo3() = default;
    Cyclo3(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
    Cyclo3(long a) : a_(a) {}                 // NOLINT(implicit)
    Cyclo3(int a) : a_(a) {}                  // NOLINT(implicit)
    Cyclo3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyclo3 zeta() { return {Rational(0), Rational(1)}; }

    /// Accepts "a", "b*z", "z", "-z", "a+b*z", "a-b*z" (and "a+-b*z").
    static Cyclo3 parse(std::string_view text);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

    /// Galois conjugate z -> z^2 = -1 - z.
    [[nodiscard]] Cyclo3 conj() const { return {a_ - b_, -b_}; }
    /// x * conj(x) = a^2 - ab + b^2.
    [[nodiscard]] Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    [[nodiscard]] Cyclo3 inverse() const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool is_atomic_text() const { return b_.is_zero(); }

    Cyclo3& operator+=(const Cyclo3& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Cyclo3& operator-=(const Cyclo3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Cyclo3& operator*=(const Cyclo3& o);
    Cyclo3& operator/=(const Cyclo3& o) { return *this *= o.inverse(); }

    friend Cyclo3 operator+(Cyclo3 x, const Cyclo3& y) { return x += y; }
    friend Cyclo3 operator-(Cyclo3 x, const Cyclo3& y) { return x -= y; }
    friend Cyclo3 operator*(Cyclo3 x, const Cyclo3& y) { return x *= y; }
    friend Cyclo3 operator/(Cyclo3 x, const Cyclo3& y) { return x /= y; }
    friend Cyclo3 operator-(const Cyclo3& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const Cyclo3& x, const Cyclo3& y) = default;
    friend std::ostream& operator<<(std::ostream& os, const Cyclo3& x) {
        return os << x.to_string();
    }

private:
    Rational a_;
    Rational b_;
};

}  // namespace burkhardt
