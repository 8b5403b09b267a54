#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "subsel/geometry.hpp"

// Seeded samplers of analytic Pareto fronts. All parameters (angles, curve
// positions, barycentric coordinates) are drawn i.i.d. uniform.

namespace subsel::fronts {

enum class FrontKind { dtlz2_2d, minus_dtlz2_2d, minus_dtlz1_3d, wave, distmin_5 };

std::string_view to_string(FrontKind kind);
FrontKind parse_front_kind(std::string_view text);

struct FrontSpec {
    FrontKind kind = FrontKind::dtlz2_2d;
    std::size_t n = 500;
    std::uint64_t seed = 1;
    int wave_j = 3;
    double wave_amplitude = 0.04;
};

/// One point of the five-objective distance-minimization problem.
struct DecisionSample {
    std::array<double, 2> x{};
    std::array<double, 5> objectives{};
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double t) const { return t >= lo && t <= hi; }
};

struct GeneratedFront {
    PointSet points;
    ObjectivePoint ideal;  ///< analytic, not estimated from the sample
    ObjectivePoint nadir;
    std::vector<DecisionSample> decisions;  ///< distmin_5 only
};

// Quarter circle f1^2 + f2^2 = 1 (concave).
std::array<double, 2> dtlz2_point(double theta);
PointSet gen_dtlz2_2d(std::size_t n, std::uint64_t seed);

// (1 - cos, 1 - sin): convex quarter circle bulging toward the ideal point.
std::array<double, 2> minus_dtlz2_point(double theta);
PointSet gen_minus_dtlz2_2d(std::size_t n, std::uint64_t seed);

/// Uniform on the triangle f1 + f2 + f3 = 2, 0 <= f_i <= 1 (rejection from the plane simplex).
PointSet gen_minus_dtlz1_3d(std::size_t n, std::uint64_t seed);

/// Wave front: (t, 1 - t + A sin(2 pi j t)), t in [0, 1].
/// Requires 2 pi j A < 1 so that f2 strictly decreases in f1.
std::array<double, 2> wave_point(double t, int j, double amplitude);
PointSet gen_wave(int j, double amplitude, std::size_t n, std::uint64_t seed);

/// The convex stretches of the wave front (where sin(2 pi j t) < 0), as t-intervals.
/// Each dips below the line f1 + f2 = 1 toward the ideal point; these are the knees.
std::vector<Interval> wave_knee_intervals(int j);

/// Anchors of the distance-minimization problem, in decision space.
const std::array<std::array<double, 2>, 5>& distmin_anchors();
DecisionSample distmin_evaluate(std::array<double, 2> x);
bool inside_pentagon(std::array<double, 2> x);

struct DistMinSample {
    PointSet points;
    std::vector<DecisionSample> decisions;
};
/// Uniform decision points in the anchor pentagon (area-weighted fan from the centroid).
DistMinSample gen_distmin_5(std::size_t n, std::uint64_t seed);

GeneratedFront generate(const FrontSpec& spec);

}  // namespace subsel::fronts
