#pragma once

#include "burkhardt/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace burkhardt {

/// A place of Q: a prime p, or the real place.
struct Place {
    Integer prime;  // 0 for the real place
    static Place infinity() { return {Integer(0)}; }
    static Place at(const Integer& p);  // throws unless p is prime
    /// "inf", "oo" or a prime.
    static Place parse(std::string_view text);
    [[nodiscard]] bool is_infinite() const { return prime == 0; }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
};

/// (a,b)_v in {+1,-1}: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution
/// over Q_v.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where (a,b) is -1, primes ascending then infinity.
std::vector<Place> ramified_places(const Rational& a, const Rational& b);
int quaternion_index_q(const Rational& a, const Rational& b);
/// Equality in Br(Q)[2], via local symbols.
bool same_class_q(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// The pair of squarefree integers with the same class minimizing
/// max(|a|,|b|) (|a| = max first, negative before positive); the squarefree
/// kernels of the input when nothing is found up to `bound`.
std::pair<Integer, Integer> small_representative(const Rational& a, const Rational& b, long bound = 60);

/// +-s^es t^et in the group <-1, s, t> modulo squares.
struct MonomialElt {
    int sign = 1;
    unsigned es = 0;
    unsigned et = 0;

    static std::vector<MonomialElt> all();
    static MonomialElt parse(std::string_view text);  // "1", "-1", "s", "-st", ...
    [[nodiscard]] std::string to_string() const;
    friend MonomialElt operator*(const MonomialElt& a, const MonomialElt& b) {
        return {a.sign * b.sign, (a.es + b.es) % 2, (a.et + b.et) % 2};
    }
    friend bool operator==(const MonomialElt&, const MonomialElt&) = default;
};

/// An element of Br(R)[2] in the basis e1=(-1,-1), e2=(-1,s), e3=(-1,t),
/// e4=(s,t). Independence of this basis is taken as given.
class RstClass {
public:
    RstClass() = default;
    explicit RstClass(std::uint8_t bits) : bits_(bits & 0xF) {}
    static RstClass basis(int i);  // i = 1..4
    /// "0" or a sum like "e2+e3+e4".
    static RstClass parse(std::string_view text);

    [[nodiscard]] std::uint8_t bits() const { return bits_; }
    [[nodiscard]] bool is_zero() const { return bits_ == 0; }
    [[nodiscard]] bool has(int i) const { return (bits_ >> (i - 1)) & 1; }
    [[nodiscard]] std::string to_string() const;

    friend RstClass operator+(RstClass a, RstClass b) { return RstClass(a.bits_ ^ b.bits_); }
    friend bool operator==(const RstClass&, const RstClass&) = default;
    friend auto operator<=>(const RstClass& a, const RstClass& b) { return a.bits_ <=> b.bits_; }

private:
    std::uint8_t bits_ = 0;
};

RstClass rst_symbol_to_class(const MonomialElt& a, const MonomialElt& b);
/// Classes (a,b) with a, b in <-1,s,t>, sorted.
std::vector<RstClass> representable_classes();
int rst_index_classify(const RstClass& c);

/// Entries c * s^es * t^et * u_i^2.
struct FormEntry {
    Rational c;
    unsigned es = 0;
    unsigned et = 0;
};
struct DiagonalForm {
    std::vector<FormEntry> entries;
    [[nodiscard]] std::string to_string() const;
};

/// <a, b, -ab, -c, -d, cd> for (a,b) (x) (c,d), exponents reduced mod 2.
DiagonalForm albert_form(const MonomialElt& a, const MonomialElt& b, const MonomialElt& c,
                         const MonomialElt& d);
DiagonalForm albert_form(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

enum class ResidueField { real, complex };
enum class Anisotropy { anisotropic, isotropic_witness, unknown };

/// u_i = coeff * s^ps * t^pt.
struct WitnessEntry {
    Rational coeff;
    unsigned ps = 0;
    unsigned pt = 0;
};

struct AnisotropyResult {
    Anisotropy verdict = Anisotropy::unknown;
    std::vector<WitnessEntry> witness;  // set for isotropic_witness
    std::string reason;
};

/// Sound but incomplete test over the power series ring: if every parity
/// class of exponents has an anisotropic constant subform over the residue
/// field (rank <= 1, or definite in the real case) the form is anisotropic;
/// otherwise a small search looks for a zero within one parity class.
/// Throws std::invalid_argument on a zero entry.
AnisotropyResult power_series_anisotropy(const DiagonalForm& f, ResidueField field, int search_bound = 6);

/// Exact evaluation of the form at the witness; true iff it vanishes.
bool verify_witness(const DiagonalForm& f, const std::vector<WitnessEntry>& w);

std::string to_string(Anisotropy a);

}  // namespace burkhardt
