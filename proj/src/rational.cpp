#include "burkhardt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace burkhardt {

namespace {

bool valid_integer_text(std::string_view t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    return {num, den};
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t Rational::hash() const {
    return hash_integer(q_.get_num()) * 1000003u ^ hash_integer(q_.get_den());
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
    if (!valid_integer_text(text)) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

std::size_t hash_integer(const Integer& z) {
    std::size_t h = static_cast<std::size_t>(sgn(z)) + 0x9e3779b9u;
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) +
             0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace burkhardt
