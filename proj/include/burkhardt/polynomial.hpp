#pragma once

#include "burkhardt/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace burkhardt {

/// Error raised by the text parsers; carries the byte offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Immutable, shared list of variable names forming the ambient ring.
class VarList {
public:
    VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit VarList(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}
    VarList(std::initializer_list<std::string> names)
        : VarList(std::vector<std::string>(names)) {}

    /// "x1".."xn" style lists.
    static VarList indexed(std::string_view prefix, std::size_t first, std::size_t count) {
        std::vector<std::string> names;
        names.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            names.push_back(std::string(prefix) + std::to_string(first + i));
        }
        return VarList(std::move(names));
    }

    [[nodiscard]] std::size_t size() const { return names_->size(); }
    [[nodiscard]] bool empty() const { return names_->empty(); }
    [[nodiscard]] const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    [[nodiscard]] const std::vector<std::string>& names() const { return *names_; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i) {
            if ((*names_)[i] == name) return i;
        }
        return std::nullopt;
    }
    [[nodiscard]] std::size_t require(std::string_view name) const {
        auto i = index_of(name);
        if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        return *i;
    }
    [[nodiscard]] VarList concat(const VarList& other) const {
        std::vector<std::string> all = names();
        all.insert(all.end(), other.names().begin(), other.names().end());
        return VarList(std::move(all));
    }

    friend bool operator==(const VarList& a, const VarList& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponent = std::uint32_t;

/// Exponent vector, one entry per ambient variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}

    static Monomial unit(std::size_t nvars, std::size_t var, Exponent power = 1) {
        Monomial m(nvars);
        m.e_[var] = power;
        return m;
    }

    [[nodiscard]] std::size_t size() const { return e_.size(); }
    [[nodiscard]] Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    [[nodiscard]] const std::vector<Exponent>& exponents() const { return e_; }
    [[nodiscard]] unsigned degree() const {
        unsigned d = 0;
        for (Exponent x : e_) d += x;
        return d;
    }
    [[nodiscard]] unsigned degree_in(std::span<const std::size_t> vars) const {
        unsigned d = 0;
        for (std::size_t v : vars) d += e_[v];
        return d;
    }
    [[nodiscard]] bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
    }
    [[nodiscard]] bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] > o.e_[i]) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    /// Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> e_;
};

/// Graded reverse lexicographic order: higher total degree first; on ties the
/// monomial with the smaller exponent in the last differing variable is larger.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

namespace detail {

template <class R>
std::string coefficient_text(const R& c) {
    std::string s = c.to_string();
    if (!c.is_atomic_text()) return "(" + s + ")";
    return s;
}

inline std::string monomial_text(const Monomial& m, const VarList& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace detail

/// Sparse multivariate polynomial with coefficients in R.
///
/// R must provide value semantics, R() as zero, construction from long,
/// ring operators, is_zero(), to_string(), is_atomic_text() and a static
/// parse(std::string_view).
///
/// A polynomial with an empty ambient that is constant is treated as a
/// scalar and adopts the ambient of the other operand in binary operations;
/// any other ambient mismatch throws std::invalid_argument.
template <class R>
class Polynomial {
public:
    using Coeff = R;
    using TermMap = std::map<Monomial, R, GrevlexDescending>;

    Polynomial() = default;
    Polynomial(long c) : Polynomial(R(c)) {}  // NOLINT(implicit)
    Polynomial(const R& c) {                  // NOLINT(implicit)
        if (!c.is_zero()) terms_.emplace(Monomial(0), c);
    }
    explicit Polynomial(VarList vars) : vars_(std::move(vars)) {}
    Polynomial(VarList vars, const R& c) : vars_(std::move(vars)) {
        if (!c.is_zero()) terms_.emplace(Monomial(vars_.size()), c);
    }

    static Polynomial variable(const VarList& vars, std::size_t i) {
        Polynomial p(vars);
        p.terms_.emplace(Monomial::unit(vars.size(), i), R(1));
        return p;
    }
    static Polynomial variable(const VarList& vars, std::string_view name) {
        return variable(vars, vars.require(name));
    }
    static Polynomial term(const VarList& vars, Monomial m, const R& c) {
        Polynomial p(vars);
        p.add_term(m, c);
        return p;
    }

    [[nodiscard]] const VarList& vars() const { return vars_; }
    [[nodiscard]] std::size_t nvars() const { return vars_.size(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    [[nodiscard]] R constant_term() const {
        for (const auto& [m, c] : terms_) {
            if (m.is_one()) return c;
        }
        return R();
    }
    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
    }
    [[nodiscard]] int degree_in(std::span<const std::size_t> vars) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.degree_in(vars)));
        return d;
    }
    [[nodiscard]] unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
        return d;
    }
    [[nodiscard]] int min_degree_in(std::span<const std::size_t> vars) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            const int k = static_cast<int>(m.degree_in(vars));
            d = d < 0 ? k : std::min(d, k);
        }
        return d;
    }
    [[nodiscard]] bool is_homogeneous() const {
        return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }
    [[nodiscard]] bool is_homogeneous_in(std::span<const std::size_t> vars) const {
        return degree_in(vars) == min_degree_in(vars);
    }
    /// True when only variables from `vars` occur.
    [[nodiscard]] bool involves_only(std::span<const std::size_t> vars) const {
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
            }
        }
        return true;
    }
    [[nodiscard]] bool involves(std::size_t var) const { return degree_in(var) > 0; }

    [[nodiscard]] R coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? R() : it->second;
    }
    [[nodiscard]] std::pair<Monomial, R> leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.begin();
    }

    void add_term(const Monomial& m, const R& c) {
        if (c.is_zero()) return;
        if (m.size() != vars_.size()) throw std::invalid_argument("monomial length mismatch");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Parts whose degree in `vars` equals d.
    [[nodiscard]] Polynomial homogeneous_part(unsigned d, std::span<const std::size_t> vars) const {
        Polynomial out(vars_);
        for (const auto& [m, c] : terms_) {
            if (m.degree_in(vars) == d) out.terms_.emplace(m, c);
        }
        return out;
    }
    [[nodiscard]] Polynomial homogeneous_part(unsigned d) const {
        Polynomial out(vars_);
        for (const auto& [m, c] : terms_) {
            if (m.degree() == d) out.terms_.emplace(m, c);
        }
        return out;
    }

    /// Groups terms by their exponents in `vars`; each coefficient keeps the
    /// full ambient but no longer involves `vars`.
    [[nodiscard]] std::map<Monomial, Polynomial, GrevlexDescending> coefficients_in(
        std::span<const std::size_t> vars) const {
        std::map<Monomial, Polynomial, GrevlexDescending> out;
        for (const auto& [m, c] : terms_) {
            Monomial key(vars.size());
            Monomial rest = m;
            for (std::size_t k = 0; k < vars.size(); ++k) {
                key[k] = m[vars[k]];
                rest[vars[k]] = 0;
            }
            auto [it, inserted] = out.try_emplace(key, Polynomial(vars_));
            it->second.add_term(rest, c);
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        adopt(o);
        for (const auto& [m, c] : o.terms_) add_term(lift(m), c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        adopt(o);
        for (const auto& [m, c] : o.terms_) add_term(lift(m), -c);
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const R& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= c;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.vars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const R& c) {
        Polynomial r = a;
        r *= c;
        return r;
    }
    friend Polynomial operator*(const R& c, const Polynomial& a) { return a * c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_constant() && a.vars_.empty()) return b * a.constant_term();
        if (b.is_constant() && b.vars_.empty()) return a * b.constant_term();
        check_same(a, b);
        Polynomial r(a.vars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        }
        return r;
    }

    [[nodiscard]] Polynomial pow(unsigned n) const {
        Polynomial result(vars_, R(1));
        Polynomial base = *this;
        while (n != 0) {
            if (n & 1u) result = result * base;
            n >>= 1u;
            if (n != 0) base = base * base;
        }
        return result;
    }

    [[nodiscard]] Polynomial derivative(std::size_t var) const {
        if (var >= vars_.size()) throw std::invalid_argument("derivative: unknown variable");
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial d = m;
            d[var] -= 1;
            r.add_term(d, c * R(static_cast<long>(m[var])));
        }
        return r;
    }
    [[nodiscard]] Polynomial derivative(std::string_view name) const {
        return derivative(vars_.require(name));
    }

    [[nodiscard]] R evaluate(std::span<const R> point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: dimension mismatch");
        std::vector<std::vector<R>> powers(point.size());
        R total;
        for (const auto& [m, c] : terms_) {
            R t = c;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(R(1));
                while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
                t *= pw[m[i]];
            }
            total += t;
        }
        return total;
    }

    /// Replaces variable i by images[i]; all images must share one ambient,
    /// which becomes the ambient of the result.
    [[nodiscard]] Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != vars_.size()) {
            throw std::invalid_argument("substitute: dimension mismatch");
        }
        VarList target = images.empty() ? VarList() : images.front().vars_;
        for (const auto& img : images) {
            if (!(img.vars_ == target) && !(img.vars_.empty() && img.is_constant())) {
                throw std::invalid_argument("substitute: images in different rings");
            }
        }
        std::vector<std::vector<Polynomial>> powers(images.size());
        Polynomial total(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t(target, c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(Polynomial(target, R(1)));
                while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
                t = t * pw[m[i]];
            }
            total += t;
        }
        return total;
    }

    /// Substitutes a single variable, leaving the ambient unchanged.
    [[nodiscard]] Polynomial substitute_var(std::size_t var, const Polynomial& image) const {
        std::vector<Polynomial> images;
        images.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            images.push_back(i == var ? image : variable(vars_, i));
        }
        return substitute(images);
    }

    /// Moves the polynomial into a different ambient, mapping variable i to
    /// variable placement[i] of `target`.
    [[nodiscard]] Polynomial embed(const VarList& target, std::span<const std::size_t> placement) const {
        Polynomial r(target);
        for (const auto& [m, c] : terms_) {
            Monomial t(target.size());
            for (std::size_t i = 0; i < m.size(); ++i) t[placement[i]] += m[i];
            r.add_term(t, c);
        }
        return r;
    }
    /// Embeds by variable name; every occurring variable must exist in target.
    [[nodiscard]] Polynomial embed(const VarList& target) const {
        std::vector<std::size_t> placement(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto j = target.index_of(vars_[i]);
            if (!j) {
                if (degree_in(i) > 0) {
                    throw std::invalid_argument("embed: variable '" + vars_[i] + "' missing");
                }
                j = 0;
            }
            placement[i] = *j;
        }
        return embed(target, placement);
    }

    template <class F>
    [[nodiscard]] auto map_coefficients(F&& f) const
        -> Polynomial<std::decay_t<decltype(f(std::declval<const R&>()))>> {
        using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
        Polynomial<S> r(vars_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string mono = detail::monomial_text(m, vars_);
            std::string coef = detail::coefficient_text(c);
            std::string t;
            if (mono.empty()) {
                t = coef;
            } else if (coef == "1") {
                t = mono;
            } else if (coef == "-1") {
                t = "-" + mono;
            } else {
                t = coef + "*" + mono;
            }
            if (!out.empty() && t.front() != '-') out += '+';
            out += t;
        }
        return out;
    }

    /// Parses the text format produced by to_string(). Whitespace is ignored.
    static Polynomial parse(std::string_view text, const VarList& vars);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
        if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
        if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
        return false;
    }

    // Ring-element interface so polynomials can serve as matrix entries.
    [[nodiscard]] bool is_atomic_text() const { return terms_.size() <= 1; }

private:
    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!(a.vars_ == b.vars_)) throw std::invalid_argument("mismatched ambient rings");
    }
    void adopt(const Polynomial& o) {
        if (vars_ == o.vars_) return;
        if (o.vars_.empty() && o.is_constant()) return;
        if (vars_.empty() && is_constant()) {
            R c = constant_term();
            vars_ = o.vars_;
            terms_.clear();
            if (!c.is_zero()) terms_.emplace(Monomial(vars_.size()), c);
            return;
        }
        throw std::invalid_argument("mismatched ambient rings");
    }
    [[nodiscard]] Monomial lift(const Monomial& m) const {
        return m.size() == vars_.size() ? m : Monomial(vars_.size());
    }

    VarList vars_;
    TermMap terms_;
};

namespace detail {

template <class R>
class PolyParser {
public:
    PolyParser(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

    Polynomial<R> run() {
        Polynomial<R> total(vars_);
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            first = false;
            Polynomial<R> t = parse_term();
            if (negative) t = -t;
            total += t;
            skip();
        }
        return total;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Polynomial<R> parse_term() {
        R coef(1);
        Monomial mono(vars_.size());
        bool any = false;
        while (true) {
            skip();
            if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
            const char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_number();
            } else if (c == '(') {
                coef *= parse_group();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                parse_power(mono);
            } else {
                throw ParseError(pos_, std::string("unexpected character '") + c + "'");
            }
            any = true;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) throw ParseError(pos_, "empty term");
        return Polynomial<R>::term(vars_, mono, coef);
    }

    R parse_number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            const std::size_t den = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == den) throw ParseError(pos_, "missing denominator");
        }
        try {
            return R::parse(s_.substr(start, pos_ - start));
        } catch (const std::exception& e) {
            throw ParseError(start, e.what());
        }
    }

    R parse_group() {
        const std::size_t start = ++pos_;
        int depth = 1;
        while (pos_ < s_.size() && depth > 0) {
            if (s_[pos_] == '(') ++depth;
            if (s_[pos_] == ')') --depth;
            ++pos_;
        }
        if (depth != 0) throw ParseError(start - 1, "unbalanced parenthesis");
        try {
            return R::parse(s_.substr(start, pos_ - 1 - start));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(start, e.what());
        }
    }

    void parse_power(Monomial& mono) {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view name = s_.substr(start, pos_ - start);
        auto idx = vars_.index_of(name);
        if (!idx) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
        Exponent e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            const std::size_t es = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (es == pos_) throw ParseError(es, "missing exponent");
            e = static_cast<Exponent>(std::stoul(std::string(s_.substr(es, pos_ - es))));
        }
        mono[*idx] += e;
    }

    std::string_view s_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class R>
Polynomial<R> Polynomial<R>::parse(std::string_view text, const VarList& vars) {
    return detail::PolyParser<R>(text, vars).run();
}

using QPoly = Polynomial<Rational>;

/// Variables of a polynomial text, in natural order (x2 before x10).
std::vector<std::string> scan_variable_names(std::string_view text);

/// A linear substitution: target variable i becomes sum_j matrix[i][j] * source_j.
template <class R>
struct LinearMap {
    VarList source;
    VarList target;
    std::vector<std::vector<R>> matrix;

    void validate() const {
        if (matrix.size() != target.size()) throw std::invalid_argument("LinearMap: row count");
        for (const auto& row : matrix) {
            if (row.size() != source.size()) throw std::invalid_argument("LinearMap: column count");
        }
    }

    [[nodiscard]] std::vector<Polynomial<R>> images() const {
        validate();
        std::vector<Polynomial<R>> out;
        out.reserve(target.size());
        for (const auto& row : matrix) {
            Polynomial<R> p(source);
            for (std::size_t j = 0; j < row.size(); ++j) {
                p.add_term(Monomial::unit(source.size(), j), row[j]);
            }
            out.push_back(std::move(p));
        }
        return out;
    }
};

/// p must live over m.target; the result lives over m.source.
template <class R>
Polynomial<R> substitute_linear(const Polynomial<R>& p, const LinearMap<R>& m) {
    if (!(p.vars() == m.target)) throw std::invalid_argument("substitute_linear: dimension mismatch");
    return p.substitute(m.images());
}

/// Map equivalent to applying `first` and then `second`.
template <class R>
LinearMap<R> compose(const LinearMap<R>& first, const LinearMap<R>& second) {
    if (!(first.source == second.target)) throw std::invalid_argument("compose: dimension mismatch");
    LinearMap<R> out{second.source, first.target, {}};
    out.matrix.assign(first.target.size(), std::vector<R>(second.source.size()));
    for (std::size_t i = 0; i < first.target.size(); ++i) {
        for (std::size_t k = 0; k < first.source.size(); ++k) {
            if (first.matrix[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < second.source.size(); ++j) {
                out.matrix[i][j] += first.matrix[i][k] * second.matrix[k][j];
            }
        }
    }
    return out;
}

/// Result of dividing by a relation lead^k - tail.
template <class R>
struct RelationReduction {
    Polynomial<R> quotient;
    Polynomial<R> remainder;
};

/// Rewrites lead_var^k using relation = lead_var^k - tail (tail of lead_var
/// degree < k) until the lead_var degree drops below k. Returns quotient and
/// remainder with p = quotient * relation + remainder.
template <class R>
RelationReduction<R> reduce_by_relation(const Polynomial<R>& p, std::size_t lead_var,
                                        const Polynomial<R>& relation) {
    const unsigned k = relation.degree_in(lead_var);
    if (k == 0) throw std::invalid_argument("relation does not involve the lead variable");
    // relation must be exactly lead^k + (terms of lead-degree < k)
    Monomial lead = Monomial::unit(relation.nvars(), lead_var, k);
    for (const auto& [m, c] : relation.terms()) {
        if (m[lead_var] == k && !(m == lead && c == R(1))) {
            throw std::invalid_argument("relation not monic in the designated power");
        }
    }
    Polynomial<R> quotient(p.vars());
    Polynomial<R> rem = p;
    while (rem.degree_in(lead_var) >= k) {
        Polynomial<R> high(p.vars());
        for (const auto& [m, c] : rem.terms()) {
            if (m[lead_var] >= k) high.add_term(m / lead, c);
        }
        quotient += high;
        rem -= high * relation;
    }
    return {quotient, rem};
}

}  // namespace burkhardt
