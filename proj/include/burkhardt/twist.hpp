#pragma once

#include "burkhardt/core.hpp"
#include "burkhardt/kummer.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace burkhardt {

/// Monic h(T) = T^6 + c5 T^5 + ... + c0 over Q.
struct SexticPoly {
    std::array<Rational, 6> c;  // c[0..5]

    /// Parses "c0,c1,c2,c3,c4,c5".
    static SexticPoly parse(std::string_view text);
    static SexticPoly from_roots(const std::array<Rational, 6>& roots);
    [[nodiscard]] std::string to_string() const;
};

struct TwistModel {
    std::string source;
    std::optional<QuarticModel> pair;  // P^5 model, when there is one
    QuarticModel model;                // P^4 model
    std::map<std::string, std::string> provenance;
};

/// The symmetric model sigma1 = sigma4 = 0 in P^5 (x1..x6).
QuarticModel bprime_pair();
/// bprime_pair() with x6 = -(x1+...+x5) eliminated.
QuarticModel bprime_model();

/// The twist attached to a squarefree sextic; throws std::invalid_argument
/// when h is not squarefree.
TwistModel twist_from_sextic(const SexticPoly& h);
/// Substitutes x_i -> sum_j beta_i^(j-1) x_j into the pair model of B'.
QuarticModel vandermonde_bprime(const std::array<Rational, 6>& beta);

struct KummerSubstitution {
    QPoly rational;              // over z0..z4, s, t
    std::size_t residual_terms;  // terms with a nonzero sqrt-component
};
KummerSubstitution kummer_substitution();
/// The quartic over Q[s,t] as displayed, over z0..z4, s, t.
QPoly bdoubleprime_display();
/// Throws std::runtime_error when the substitution leaves sqrt-components
/// or disagrees with the displayed form.
TwistModel bdoubleprime_model();

struct KummerCheck {
    QPoly norm;     // N(f(x1 + x2 sqrt r)) over x1, x2, x3
    QPoly reduced;  // x1-degree < 2 modulo x1^2 = r x2^2 + x3
    int degree = 0;
    bool round_trip = false;
};
/// f = x^3 + a2 x^2 + a4 x + a6; d only scales the double cover d w^2 = N
/// and does not enter the reduction.
KummerCheck elliptic_kummer_check(const Rational& a2, const Rational& a4, const Rational& a6,
                                  const Rational& r);

struct DiagonalEntry {
    Rational c;
    unsigned es = 0;
    unsigned et = 0;
};

struct TangentCone {
    QPoly quadratic_part;         // over w1..w4, s, t in the chart z0 = 1, z1 = -1 + w1
    QPoly normalized;             // over u0..u3, s, t
    Rational scale;               // quadratic_part = scale * normalized after the change
    std::vector<DiagonalEntry> entries;
    std::size_t rank = 0;
    std::string coordinate_change;
};
TangentCone tangent_cone_quadric();

}  // namespace burkhardt
