#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace burkhardt {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                       // NOLINT(implicit)
    Rational(int v) : q_(static_cast<long>(v)) {}     // NOLINT(implicit)
    Rational(const Integer& v) : q_(v) {}             // NOLINT(implicit)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return q_.get_num(); }
    [[nodiscard]] Integer denominator() const { return q_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const { return q_ == 1; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] Rational abs() const { return Rational(::abs(q_)); }
    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] const mpq_class& raw() const { return q_; }
    [[nodiscard]] std::string to_string() const { return q_.get_str(); }
    [[nodiscard]] std::size_t hash() const;
    /// Rationals always print as a single token, so a coefficient never needs
    /// parentheses inside a polynomial term.
    [[nodiscard]] bool is_atomic_text() const { return true; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);

/// Integer helpers shared by the number-theoretic code.
std::string to_string(const Integer& z);
Integer parse_integer(std::string_view text);
std::size_t hash_integer(const Integer& z);

}  // namespace burkhardt

template <>
struct std::hash<burkhardt::Rational> {
    std::size_t operator()(const burkhardt::Rational& r) const noexcept { return r.hash(); }
};
