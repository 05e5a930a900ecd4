#pragma once

#include "burkhardt/core.hpp"
#include "burkhardt/obstruction.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace burkhardt {

struct FibrationParams {
    Rational u;
    Rational v;
    friend bool operator==(const FibrationParams&, const FibrationParams&) = default;
};

/// A ternary cubic over X, Y, Z (optionally followed by parameters u, v)
/// with a chosen flex as origin.
struct PlaneCubic {
    QPoly form;
    ProjectivePoint origin{1, 0, 0};
};

/// C_{u,v} over X, Y, Z, u, v.
QPoly cubic_family_symbolic();
/// C_{u,v} at rational parameters; throws std::invalid_argument when the
/// cubic vanishes or is possibly singular (see cubic_nonsingular).
PlaneCubic cubic_family(const FibrationParams& p);
PlaneCubic cubic_family_generic();  // symbolic u, v

/// Sufficient test: no common zero of F, F_X, F_Y, F_Z found via resultants
/// on the charts Z = 1 and Z = 0. A false result means "possibly singular".
bool cubic_nonsingular(const QPoly& f);

/// Hessian determinant vanishes at pt and pt is a smooth point. Throws
/// std::invalid_argument when pt is not on C.
bool flex_verify(const PlaneCubic& c, const ProjectivePoint& pt);

/// Third intersection of the line PQ (the tangent when P = Q) with C.
/// Throws std::runtime_error when the line lies in C or P is singular.
ProjectivePoint third_point(const PlaneCubic& c, const ProjectivePoint& p, const ProjectivePoint& q);
ProjectivePoint cubic_negate(const PlaneCubic& c, const ProjectivePoint& p);
ProjectivePoint cubic_group_law(const PlaneCubic& c, const ProjectivePoint& p, const ProjectivePoint& q);
ProjectivePoint cubic_multiple(const PlaneCubic& c, const ProjectivePoint& p, long n);

struct TorsionResult {
    std::optional<int> order;  // smallest n <= bound with nP = O
    bool non_torsion_certified = false;
};
/// Orders above 12 do not occur over Q, so nP != O for n <= 12 certifies
/// infinite order.
TorsionResult torsion_test(const PlaneCubic& c, const ProjectivePoint& p, int bound = 12);

/// (X : Y : -uZ : -vZ : Z : -X - Y + (u+v-1)Z).
ProjectivePoint embed_to_bprime(const FibrationParams& f, const ProjectivePoint& pt);

struct SlicePoint {
    FibrationParams params;
    ProjectivePoint point;  // on C_{u,v}
};
/// Inverse of the embedding with Z = x5: u = -x3/x5, v = -x4/x5,
/// (X : Y : Z) = (x1 : x2 : x5). nullopt when x5 = 0.
std::optional<SlicePoint> slice_point(const ProjectivePoint& x);

/// A fibration by planes through L_{abc} = {x_a = x_b = x_c = sigma1 = 0};
/// `perm` sends the standard positions (x1..x6 with L_{345}) to it.
struct Fibration {
    std::string name;
    std::array<std::size_t, 6> perm;  // standard position i -> coordinate perm[i]
};
const std::vector<Fibration>& fibrations();      // L345, L245, L145
const std::vector<Fibration>& all_fibrations();  // the 20 lines L_{abc}
ProjectivePoint to_standard(const Fibration& f, const ProjectivePoint& x);
ProjectivePoint from_standard(const Fibration& f, const ProjectivePoint& x);

ProjectivePoint point_p0();

struct GeneratedPoint {
    ProjectivePoint point;
    std::string origin;  // fibration, fiber and multiple
};

struct ObstructionSample {
    ProjectivePoint point;
    std::string symbol;
    std::pair<Integer, Integer> representative;
    bool same_class = false;
    bool determined = true;  // false when factoring hit its budget
};

struct GenerationOptions {
    std::size_t count = 100;
    int seed_multiples = 12;
    int other_multiples = 2;
    std::size_t sample_obstruction = 10;
    unsigned threads = 1;
    bool all_fibrations = true;  // false: only L345, L245, L145, which all lie in x4 = x5 = 0
};

struct GenerationReport {
    std::vector<GeneratedPoint> points;  // distinct, in generation order
    std::size_t off_hessian = 0;
    std::size_t coordinate_rank = 0;
    std::vector<ObstructionSample> samples;
    bool seed_non_torsion = false;
};

/// Breadth-first over seeds: the fiber through a point in each fibration
/// contributes multiples of that point (and its translates by the flex
/// 3-torsion), embedded back into B'. Obstruction samples are the lowest
/// off-Hessian points of distinct coordinate-permutation orbits.
GenerationReport generate_points(const GenerationOptions& opt);

}  // namespace burkhardt
