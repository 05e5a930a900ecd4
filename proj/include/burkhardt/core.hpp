#pragma once

#include "burkhardt/cyclo3.hpp"
#include "burkhardt/matrix.hpp"
#include "burkhardt/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace burkhardt {

using CPoly = Polynomial<Cyclo3>;
using CMatrix = Matrix<Cyclo3>;

/// Rational projective point stored as a primitive integer vector whose first
/// nonzero entry is positive.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Rational> coords);
    ProjectivePoint(std::initializer_list<long> coords);

    /// "(a:b:...)" with integer or p/q entries; ParseError carries the offset.
    static ProjectivePoint parse(std::string_view text);

    [[nodiscard]] std::size_t size() const { return c_.size(); }
    [[nodiscard]] const std::vector<Rational>& coords() const { return c_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] std::string to_string() const;
    /// Largest absolute coordinate, a crude height.
    [[nodiscard]] Integer max_abs() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ <=> b.c_; }

private:
    std::vector<Rational> c_;
};

/// A quartic threefold. The ambient of `form` lists the projective
/// coordinates first; any further variables are parameters of the base
/// field (s, t, u, v, ...) and "zero" means zero identically in them.
/// When `hyperplane` is set the model is the codimension-2 pair
/// hyperplane = form = 0 in P^5.
struct QuarticModel {
    std::string name;
    QPoly form;
    std::size_t coords = 5;
    std::optional<QPoly> hyperplane;

    [[nodiscard]] const VarList& vars() const { return form.vars(); }
    [[nodiscard]] std::vector<std::size_t> coordinate_indices() const;
    [[nodiscard]] VarList parameters() const;
    [[nodiscard]] bool is_pair() const { return hyperplane.has_value(); }

    /// Eliminates coordinate `var` using the (rational) hyperplane and returns
    /// the P^4 model in the remaining coordinates.
    [[nodiscard]] QuarticModel eliminate(std::size_t var) const;
    /// Drops coordinate `var` of a point after elimination.
    [[nodiscard]] static ProjectivePoint drop_coordinate(const ProjectivePoint& p, std::size_t var);
    /// Replaces a parameter by a rational value (B'' at s=1).
    [[nodiscard]] QuarticModel specialize(std::string_view param, const Rational& value) const;
};

/// Line-based text form:
///   name: <text>
///   coords: x1 x2 ...
///   params: s t          (optional)
///   hyperplane: <poly>   (optional, pair models)
///   form: <poly>
/// Blank lines and lines starting with '#' are ignored when reading.
std::string model_to_text(const QuarticModel& m);
/// Throws ParseError with the offset into the whole text.
QuarticModel model_from_text(std::string_view text);

/// Substitutes the coordinates of `p` into f; parameters stay symbolic.
QPoly evaluate_at(const QPoly& f, std::size_t coords, const ProjectivePoint& p);
bool on_model(const QuarticModel& m, const ProjectivePoint& p);
std::vector<QPoly> gradient(const QPoly& f, std::size_t coords);

QuarticModel standard_quartic();

struct MaschkeData {
    std::vector<QPoly> y;            // Y0..Y4 over t1..t4
    std::optional<QPoly> composite;  // F(Y0..Y4), expanded
};
MaschkeData maschke_map(bool symbolic);

struct GeneratorSet {
    CMatrix a1;
    CMatrix a2;
    CMatrix a3;
};
GeneratorSet generators_rho4();

/// Matrix R with Y_i(A t) = sum_j R_ij Y_j(t). Throws std::runtime_error
/// when the span of the Y's is not stable under A.
CMatrix induced_rho5(const CMatrix& a);

struct FunctorTraces {
    Cyclo3 sym2;
    Cyclo3 wedge2;
};
FunctorTraces functor_traces(const CMatrix& a);

/// The scalar lambda with F(R y) = lambda F(y), if one exists.
std::optional<Cyclo3> invariance_scalar(const QPoly& f, const CMatrix& r);

enum class HessianStatus { on, off };
/// Determinant of the matrix of second partials at p (P^4 models).
QPoly hessian_value(const QuarticModel& m, const ProjectivePoint& p);
HessianStatus hessian_membership(const QuarticModel& m, const ProjectivePoint& p);

enum class Smoothness { smooth, singular };
Smoothness singularity_test(const QuarticModel& m, const ProjectivePoint& p);

/// Distinct coordinate permutations of p.
std::vector<ProjectivePoint> permutation_orbit(const ProjectivePoint& p);

std::string to_string(HessianStatus s);
std::string to_string(Smoothness s);

}  // namespace burkhardt
