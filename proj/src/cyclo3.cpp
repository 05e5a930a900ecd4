#include "burkhardt/cyclo3.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace burkhardt {

Cyclo3& Cyclo3::operator*=(const Cyclo3& o) {
    // (a + bz)(c + dz) = ac + (ad + bc)z + bd z^2, z^2 = -z - 1
    const Rational bd = b_ * o.b_;
    const Rational a = a_ * o.a_ - bd;
    const Rational b = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = a;
    b_ = b;
    return *this;
}

Cyclo3 Cyclo3::inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw std::domain_error("Cyclo3: inverse of zero");
    const Cyclo3 c = conj();
    return {c.a() / n, c.b() / n};
}

std::string Cyclo3::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string zpart;
    if (b_ == Rational(1)) {
        zpart = "z";
    } else if (b_ == Rational(-1)) {
        zpart = "-z";
    } else {
        zpart = b_.to_string() + "*z";
    }
    if (a_.is_zero()) return zpart;
    if (zpart.front() == '-') return a_.to_string() + zpart;
    return a_.to_string() + "+" + zpart;
}

Cyclo3 Cyclo3::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (c != ' ' && c != '\t') s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("Cyclo3: empty text");

    // Split at '+'/'-' that start a new term (not a sign following '*' or '/').
    std::vector<std::string> terms;
    std::size_t begin = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const char prev = s[i - 1];
        if ((s[i] == '+' || s[i] == '-') && prev != '*' && prev != '/' && prev != '+' &&
            prev != '-') {
            terms.push_back(s.substr(begin, i - begin));
            begin = i;
        }
    }
    terms.push_back(s.substr(begin));

    Rational a;
    Rational b;
    bool any = false;
    for (std::string term : terms) {
        if (!term.empty() && term.front() == '+') term.erase(0, 1);
        if (term.empty()) throw std::invalid_argument("Cyclo3: malformed '" + s + "'");
        any = true;
        if (term.back() == 'z') {
            std::string coef = term.substr(0, term.size() - 1);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            if (coef.empty() || coef == "+") {
                b += Rational(1);
            } else if (coef == "-") {
                b += Rational(-1);
            } else {
                b += Rational::parse(coef);
            }
        } else {
            a += Rational::parse(term);
        }
    }
    if (!any) throw std::invalid_argument("Cyclo3: malformed '" + s + "'");
    return {a, b};
}

}  // namespace burkhardt
