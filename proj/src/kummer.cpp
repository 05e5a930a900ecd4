#include "burkhardt/kummer.hpp"

namespace burkhardt {

namespace {

const QPoly& s_poly() {
    static const QPoly s = QPoly::variable(KummerCoeff::ambient(), 0);
    return s;
}
const QPoly& t_poly() {
    static const QPoly t = QPoly::variable(KummerCoeff::ambient(), 1);
    return t;
}

}  // namespace

const VarList& KummerCoeff::ambient() {
    static const VarList vars{"s", "t"};
    return vars;
}

KummerCoeff::KummerCoeff()
    : c_{QPoly(ambient()), QPoly(ambient()), QPoly(ambient()), QPoly(ambient())} {}

KummerCoeff::KummerCoeff(const Rational& c) : KummerCoeff() { c_[0] = QPoly(ambient(), c); }

KummerCoeff::KummerCoeff(QPoly c00, QPoly c10, QPoly c01, QPoly c11)
    : c_{std::move(c00), std::move(c10), std::move(c01), std::move(c11)} {
    for (auto& c : c_) {
        if (c.vars().empty()) c = QPoly(ambient(), c.constant_term());
        if (!(c.vars() == ambient())) throw std::invalid_argument("KummerCoeff: components over (s,t)");
    }
}

KummerCoeff KummerCoeff::sqrt_s() {
    KummerCoeff k;
    k.c_[1] = QPoly(ambient(), Rational(1));
    return k;
}
KummerCoeff KummerCoeff::sqrt_t() {
    KummerCoeff k;
    k.c_[2] = QPoly(ambient(), Rational(1));
    return k;
}
KummerCoeff KummerCoeff::sqrt_st() {
    KummerCoeff k;
    k.c_[3] = QPoly(ambient(), Rational(1));
    return k;
}

bool KummerCoeff::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

KummerCoeff& KummerCoeff::operator+=(const KummerCoeff& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}
KummerCoeff& KummerCoeff::operator-=(const KummerCoeff& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

KummerCoeff operator-(const KummerCoeff& a) {
    return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]};
}

KummerCoeff operator*(const KummerCoeff& x, const KummerCoeff& y) {
    // basis 1, rs, rt, rst with rs^2 = s, rt^2 = t, rst^2 = st,
    // rs*rt = rst, rs*rst = s*rt, rt*rst = t*rs
    const QPoly& s = s_poly();
    const QPoly& t = t_poly();
    const auto& a = x.c_;
    const auto& b = y.c_;
    QPoly c00 = a[0] * b[0] + s * (a[1] * b[1]) + t * (a[2] * b[2]) + s * t * (a[3] * b[3]);
    QPoly c10 = a[0] * b[1] + a[1] * b[0] + t * (a[2] * b[3] + a[3] * b[2]);
    QPoly c01 = a[0] * b[2] + a[2] * b[0] + s * (a[1] * b[3] + a[3] * b[1]);
    QPoly c11 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    return {std::move(c00), std::move(c10), std::move(c01), std::move(c11)};
}

bool operator==(const KummerCoeff& a, const KummerCoeff& b) {
    for (int i = 0; i < 4; ++i) {
        if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
}

std::string KummerCoeff::to_string() const {
    static const char* const basis[4] = {"", "rs", "rt", "rst"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        std::string part = "(" + c_[i].to_string() + ")";
        if (i > 0) part += std::string("*") + basis[i];
        if (!out.empty()) out += "+";
        out += part;
    }
    return out.empty() ? "0" : out;
}

KummerCoeff KummerCoeff::parse(std::string_view text) {
    // Only scalar components are accepted in text form: "(p)" or "(p)*rs" etc.
    // combined with '+'; used when reading Kummer-coefficient polynomials.
    KummerCoeff out;
    std::size_t pos = 0;
    const std::string s(text);
    while (pos < s.size()) {
        if (s[pos] == '+') ++pos;
        if (pos >= s.size() || s[pos] != '(') throw ParseError(pos, "KummerCoeff: expected '('");
        int depth = 0;
        std::size_t end = pos;
        for (; end < s.size(); ++end) {
            if (s[end] == '(') ++depth;
            if (s[end] == ')' && --depth == 0) break;
        }
        if (end >= s.size()) throw ParseError(pos, "KummerCoeff: unbalanced parenthesis");
        QPoly comp = QPoly::parse(std::string_view(s).substr(pos + 1, end - pos - 1), ambient());
        pos = end + 1;
        int slot = 0;
        if (pos < s.size() && s[pos] == '*') {
            std::size_t stop = s.find('+', pos);
            const std::string name = s.substr(pos + 1, stop == std::string::npos ? std::string::npos
                                                                                  : stop - pos - 1);
            if (name == "rs") {
                slot = 1;
            } else if (name == "rt") {
                slot = 2;
            } else if (name == "rst") {
                slot = 3;
            } else {
                throw ParseError(pos, "KummerCoeff: unknown basis element '" + name + "'");
            }
            pos = stop == std::string::npos ? s.size() : stop;
        }
        out.c_[slot] += comp;
    }
    return out;
}

}  // namespace burkhardt
