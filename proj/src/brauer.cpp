#include "burkhardt/brauer.hpp"

#include "burkhardt/arith.hpp"
#include "burkhardt/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace burkhardt {

Place Place::at(const Integer& p) {
    if (!is_probable_prime(p)) throw std::invalid_argument("place " + p.get_str() + " is not a prime");
    return {p};
}

Place Place::parse(std::string_view text) {
    if (text == "inf" || text == "oo" || text == "infinity") return infinity();
    Integer p;
    try {
        p = parse_integer(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("place must be a prime or 'inf'");
    }
    return at(p);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : prime.get_str(); }

namespace {

int legendre(const Integer& a, const Integer& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// (u - 1)/2 mod 2 and (u^2 - 1)/8 mod 2 for odd u
int eps(const Integer& u) {
    const Integer r = ((u % 4) + 4) % 4;
    return r == 3 ? 1 : 0;
}
int omega(const Integer& u) {
    const Integer r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

std::pair<unsigned, Integer> split_off(const Integer& n, const Integer& p) {
    unsigned v = 0;
    Integer m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
        m /= p;
        ++v;
    }
    return {v, m};
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    const Integer& p = v.prime;
    // a*den^2 has the same square class and is an integer
    const Integer x = a.numerator() * a.denominator();
    const Integer y = b.numerator() * b.denominator();
    const auto [alpha, u] = split_off(x, p);
    const auto [beta, w] = split_off(y, p);
    if (p == 2) {
        const int e = eps(u) * eps(w) + static_cast<int>(alpha % 2) * omega(w) +
                      static_cast<int>(beta % 2) * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    const int ep = eps(p);
    if (alpha % 2 == 1 && beta % 2 == 1 && ep == 1) s = -s;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

std::vector<Place> ramified_places(const Rational& a, const Rational& b) {
    std::set<Integer> primes{Integer(2)};
    for (const Rational* q : {&a, &b}) {
        const Integer k = squarefree_kernel(*q);
        if (k != 1 && k != -1) {
            for (const auto& pp : factor(k)) primes.insert(pp.prime);
        }
    }
    std::vector<Place> out;
    for (const auto& p : primes) {
        if (hilbert_symbol(a, b, Place{p}) == -1) out.push_back(Place{p});
    }
    if (hilbert_symbol(a, b, Place::infinity()) == -1) out.push_back(Place::infinity());
    return out;
}

int quaternion_index_q(const Rational& a, const Rational& b) { return ramified_places(a, b).empty() ? 1 : 2; }

bool same_class_q(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    const auto x = ramified_places(a, b);
    const auto y = ramified_places(c, d);
    return x == y;
}

std::pair<Integer, Integer> small_representative(const Rational& a, const Rational& b, long bound) {
    const auto target = ramified_places(a, b);
    if (target.empty()) return {Integer(1), Integer(1)};
    auto squarefree = [](long n) { return squarefree_kernel(Rational(n)) == n; };
    for (long m = 1; m <= bound; ++m) {
        if (!squarefree(m)) continue;
        for (long x : {-m, m}) {
            for (long k = 1; k <= m; ++k) {
                if (!squarefree(k)) continue;
                for (long y : {-k, k}) {
                    if (ramified_places(x, y) == target) return {Integer(x), Integer(y)};
                }
            }
        }
        for (long k = 1; k < m; ++k) {
            if (!squarefree(k)) continue;
            for (long x : {-k, k}) {
                for (long y : {-m, m}) {
                    if (ramified_places(x, y) == target) return {Integer(x), Integer(y)};
                }
            }
        }
    }
    return {squarefree_kernel(a), squarefree_kernel(b)};
}

std::vector<MonomialElt> MonomialElt::all() {
    std::vector<MonomialElt> out;
    for (int sign : {1, -1}) {
        for (unsigned es = 0; es < 2; ++es) {
            for (unsigned et = 0; et < 2; ++et) out.push_back({sign, es, et});
        }
    }
    return out;
}

MonomialElt MonomialElt::parse(std::string_view text) {
    MonomialElt m;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') m.sign = -1;
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("empty monomial");
    if (text.substr(i) == "1") return m;
    for (; i < text.size(); ++i) {
        if (text[i] == 's') {
            m.es ^= 1U;
        } else if (text[i] == 't') {
            m.et ^= 1U;
        } else if (text[i] != '*') {
            throw std::invalid_argument("bad monomial '" + std::string(text) + "'");
        }
    }
    return m;
}

std::string MonomialElt::to_string() const {
    std::string body;
    if (es) body += "s";
    if (et) body += "t";
    if (body.empty()) body = "1";
    return sign < 0 ? "-" + body : body;
}

RstClass RstClass::basis(int i) {
    if (i < 1 || i > 4) throw std::out_of_range("RstClass::basis");
    return RstClass(static_cast<std::uint8_t>(1U << (i - 1)));
}

RstClass RstClass::parse(std::string_view text) {
    RstClass c;
    std::string compact;
    for (char ch : text) {
        if (ch != ' ') compact += ch;
    }
    if (compact == "0") return c;
    if (compact.empty()) throw ParseError(0, "empty class");
    std::size_t pos = 0;
    while (pos < compact.size()) {
        if (compact[pos] != 'e' || pos + 1 >= compact.size()) {
            throw ParseError(pos, "expected e1..e4");
        }
        const char d = compact[pos + 1];
        if (d < '1' || d > '4') throw ParseError(pos + 1, "expected e1..e4");
        c = c + basis(d - '0');
        pos += 2;
        if (pos < compact.size()) {
            if (compact[pos] != '+') throw ParseError(pos, "expected '+'");
            ++pos;
            if (pos == compact.size()) throw ParseError(pos, "dangling '+'");
        }
    }
    return c;
}

std::string RstClass::to_string() const {
    if (bits_ == 0) return "0";
    std::string out;
    for (int i = 1; i <= 4; ++i) {
        if (!has(i)) continue;
        if (!out.empty()) out += '+';
        out += 'e' + std::to_string(i);
    }
    return out;
}

RstClass rst_symbol_to_class(const MonomialElt& a, const MonomialElt& b) {
    // generator indices: 0 = -1, 1 = s, 2 = t; table[i][j] = (g_i, g_j)
    static const std::uint8_t table[3][3] = {
        {0b0001, 0b0010, 0b0100},  // (-1,-1)=e1, (-1,s)=e2, (-1,t)=e3
        {0b0010, 0b0010, 0b1000},  // (s,-1)=e2, (s,s)=(-1,s)=e2, (s,t)=e4
        {0b0100, 0b1000, 0b0100},  // (t,-1)=e3, (t,s)=e4, (t,t)=(-1,t)=e3
    };
    const int ea[3] = {a.sign < 0 ? 1 : 0, static_cast<int>(a.es), static_cast<int>(a.et)};
    const int eb[3] = {b.sign < 0 ? 1 : 0, static_cast<int>(b.es), static_cast<int>(b.et)};
    std::uint8_t bits = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (ea[i] && eb[j]) bits ^= table[i][j];
        }
    }
    return RstClass(bits);
}

std::vector<RstClass> representable_classes() {
    std::set<RstClass> seen;
    for (const auto& a : MonomialElt::all()) {
        for (const auto& b : MonomialElt::all()) seen.insert(rst_symbol_to_class(a, b));
    }
    return {seen.begin(), seen.end()};
}

int rst_index_classify(const RstClass& c) {
    if (c.is_zero()) return 1;
    static const std::vector<RstClass> reps = representable_classes();
    return std::binary_search(reps.begin(), reps.end(), c) ? 2 : 4;
}

std::string DiagonalForm::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        const auto& e = entries[i];
        std::string mono;
        if (e.es) mono += "s" + (e.es > 1 ? "^" + std::to_string(e.es) : "");
        if (e.et) mono += "t" + (e.et > 1 ? "^" + std::to_string(e.et) : "");
        if (mono.empty()) {
            out += e.c.to_string();
        } else if (e.c == Rational(1)) {
            out += mono;
        } else if (e.c == Rational(-1)) {
            out += "-" + mono;
        } else {
            out += e.c.to_string() + "*" + mono;
        }
    }
    return out + ">";
}

DiagonalForm albert_form(const MonomialElt& a, const MonomialElt& b, const MonomialElt& c,
                         const MonomialElt& d) {
    auto entry = [](const MonomialElt& m, int extra_sign) {
        return FormEntry{Rational(m.sign * extra_sign), m.es, m.et};
    };
    return {{entry(a, 1), entry(b, 1), entry(a * b, -1), entry(c, -1), entry(d, -1), entry(c * d, 1)}};
}

DiagonalForm albert_form(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return {{{a}, {b}, {-(a * b)}, {-c}, {-d}, {c * d}}};
}

namespace {

// Small search for a nontrivial zero of sum c_i x_i^2 over the integers.
std::optional<std::vector<long>> small_zero(const std::vector<Rational>& c, int bound) {
    const std::size_t n = c.size();
    std::vector<long> x(n, 0);
    std::optional<std::vector<long>> found;
    auto rec = [&](auto&& self, std::size_t i, bool nonzero) -> void {
        if (found) return;
        if (i == n) {
            if (!nonzero) return;
            Rational sum;
            for (std::size_t k = 0; k < n; ++k) sum += c[k] * Rational(x[k] * x[k]);
            if (sum.is_zero()) found = x;
            return;
        }
        // the first nonzero coordinate may be taken positive
        for (long v = nonzero ? -bound : 0; v <= bound; ++v) {
            x[i] = v;
            self(self, i + 1, nonzero || v != 0);
            if (found) return;
        }
        x[i] = 0;
    };
    rec(rec, 0, false);
    return found;
}

}  // namespace

AnisotropyResult power_series_anisotropy(const DiagonalForm& f, ResidueField field, int search_bound) {
    std::map<std::pair<unsigned, unsigned>, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        const auto& e = f.entries[i];
        if (e.c.is_zero()) throw std::invalid_argument("power_series_anisotropy: zero entry");
        classes[{e.es % 2, e.et % 2}].push_back(i);
    }
    AnisotropyResult out;
    bool all_anisotropic = true;
    for (const auto& [parity, idx] : classes) {
        bool ok = idx.size() <= 1;
        if (!ok && field == ResidueField::real) {
            const int s0 = f.entries[idx[0]].c.sign();
            ok = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return f.entries[i].c.sign() == s0; });
        }
        if (!ok) all_anisotropic = false;
    }
    if (all_anisotropic) {
        out.verdict = Anisotropy::anisotropic;
        out.reason = "every parity class has an anisotropic residue form; descent forces all u_i into (s,t)";
        return out;
    }
    for (const auto& [parity, idx] : classes) {
        if (idx.size() < 2) continue;
        std::vector<Rational> c;
        for (std::size_t i : idx) c.push_back(f.entries[i].c);
        auto z = small_zero(c, search_bound);
        if (!z) continue;
        unsigned ms = 0;
        unsigned mt = 0;
        for (std::size_t i : idx) {
            ms = std::max(ms, f.entries[i].es);
            mt = std::max(mt, f.entries[i].et);
        }
        out.witness.assign(f.entries.size(), WitnessEntry{Rational(0), 0, 0});
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const auto& e = f.entries[idx[k]];
            out.witness[idx[k]] = {Rational((*z)[k]), (ms - e.es) / 2, (mt - e.et) / 2};
        }
        out.verdict = Anisotropy::isotropic_witness;
        out.reason = "zero of a residue subform lifted with monomial factors";
        return out;
    }
    out.verdict = Anisotropy::unknown;
    out.reason = "a residue subform may be isotropic but no small zero was found";
    return out;
}

bool verify_witness(const DiagonalForm& f, const std::vector<WitnessEntry>& w) {
    if (w.size() != f.entries.size()) return false;
    const VarList st{"s", "t"};
    QPoly total(st);
    bool nonzero = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].coeff.is_zero()) continue;
        nonzero = true;
        const auto& e = f.entries[i];
        const Monomial m({e.es + 2 * w[i].ps, e.et + 2 * w[i].pt});
        total.add_term(m, e.c * w[i].coeff * w[i].coeff);
    }
    return nonzero && total.is_zero();
}

std::string to_string(Anisotropy a) {
    switch (a) {
        case Anisotropy::anisotropic:
            return "anisotropic";
        case Anisotropy::isotropic_witness:
            return "isotropic_witness";
        case Anisotropy::unknown:
            break;
    }
    return "unknown";
}

}  // namespace burkhardt
