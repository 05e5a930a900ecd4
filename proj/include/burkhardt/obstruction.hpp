#pragma once

#include "burkhardt/brauer.hpp"
#include "burkhardt/core.hpp"
#include "burkhardt/quadform.hpp"
#include "burkhardt/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace burkhardt {

struct PolarSequence {
    QPoly p1;  // cubic
    QPoly p2;  // quadric
    QPoly p3;  // linear
};

/// P^(1) = sum alpha_i dF/dx_i, P^(r) = P^(1) applied r times; r in 1..3.
QPoly polar(const QuarticModel& f, const ProjectivePoint& alpha, int r);
PolarSequence polars(const QuarticModel& f, const ProjectivePoint& alpha);

/// A plane conic over the base field, in variables X, Y, Z (followed by the
/// model's parameters), together with the linear map from the plane to the
/// ambient coordinates used to produce it.
struct TernaryQuadratic {
    QPoly form;
    Matrix<QPoly> gram;
    std::vector<QPoly> embedding;  // ambient coordinate i as a linear form in X, Y, Z
    std::size_t solved_coordinate = 0;
    std::size_t vertex_coordinate = 0;

    [[nodiscard]] const VarList& vars() const { return form.vars(); }
    [[nodiscard]] bool is_rational() const { return form.nvars() == 3; }
};

/// Q_alpha from P^(2) restricted to P^(3) = 0, after checking that the
/// restriction is a cone with vertex alpha. Pair models are reduced by
/// eliminating their last coordinate. Throws std::invalid_argument when alpha
/// is not on the model or lies on the Hessian, std::runtime_error when the
/// vertex check fails.
TernaryQuadratic obstruction_conic(const QuarticModel& f, const ProjectivePoint& alpha);

/// p divided by the positive rational gcd of its coefficients.
QPoly primitive_part(const QPoly& p);

/// Quaternion symbol (a, b) whose Brauer-Severi conic is z^2 = a x^2 + b y^2.
struct ConicSymbol {
    QPoly a;
    QPoly b;
    std::vector<QPoly> diagonal;

    [[nodiscard]] bool is_rational() const { return a.is_constant() && b.is_constant(); }
    [[nodiscard]] Rational a_q() const { return a.constant_term(); }
    [[nodiscard]] Rational b_q() const { return b.constant_term(); }
    [[nodiscard]] std::string to_string() const;
};

/// Diagonalizes d1 X^2 + d2 Y^2 + d3 Z^2 and reports (-d1 d3, -d2 d3) with
/// square factors removed. Throws std::invalid_argument when rank < 3.
ConicSymbol conic_to_symbol(const TernaryQuadratic& q);
/// Square classes: rational content to its squarefree kernel, monomial
/// exponents mod 2; a non-monomial factor is kept as is.
QPoly normalize_square_class(const QPoly& p);

/// Class over R(s,t) when both entries are a rational times a monomial in
/// the parameters s, t (only the sign of the rational matters over R).
std::optional<RstClass> symbol_class_rst(const ConicSymbol& sym);

/// Equality in Br(Q(t)) for symbols whose entries are a rational times a
/// power of the single parameter `param`: (c1 t^i, c2 t^j) expands to
/// (c1, c2) + (t, c2^i c1^j (-1)^(ij)), and both parts are compared (the
/// constant part by local symbols, the residue at t = 0 by square class).
/// nullopt when an entry has another shape.
std::optional<bool> same_class_qt(const ConicSymbol& x, const ConicSymbol& y, std::string_view param);

struct ConicPoint {
    std::vector<Integer> coords;  // in X, Y, Z
};
/// Brute force over |X|, |Y| <= bound, ordered by max(|X|, |Y|), solving the
/// quadratic for Z; nullopt also when the conic has no real point.
std::optional<ConicPoint> find_conic_point(const TernaryQuadratic& q, long bound);

struct MarkedSextic {
    ConicPoint base_point;
    std::vector<QPoly> parametrization;  // X, Y, Z as binary quadratics in u, w
    QPoly binary_form;                   // over u, w, homogeneous of degree 6
    UPoly dehomogenized;                 // w = 1, degree 5 or 6
};
/// Throws std::runtime_error "no conic point found within search bound" or
/// "pullback not squarefree"; std::invalid_argument for parametric models.
MarkedSextic marked_sextic(const QuarticModel& f, const ProjectivePoint& alpha, long search_bound = 5000);

struct EnvelopingCone {
    QPoly quartic;  // B^2 - 4 A C3 over the model's variables
    QPoly a;
    QPoly b;
    QPoly c3;
    bool vertex_ok = false;
};
/// Throws std::runtime_error when C(alpha) != 0.
EnvelopingCone enveloping_cone(const QuarticModel& f, const ProjectivePoint& alpha);

struct TropeRestriction {
    QPoly restricted;           // enveloping cone on P^(3) = 0, over 4 coordinates
    std::optional<QPoly> root;  // a quadric whose square it is
};
TropeRestriction trope_restriction(const QuarticModel& f, const ProjectivePoint& alpha);

/// Exact square root of a polynomial with positive leading coefficient, if
/// there is one.
std::optional<QPoly> polynomial_sqrt(const QPoly& p);

}  // namespace burkhardt
