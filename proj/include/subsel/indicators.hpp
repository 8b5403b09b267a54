#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "subsel/geometry.hpp"
#include "subsel/kernels.hpp"

namespace subsel {

/// Per-point weights for the weighted expected loss. Non-negative, not all zero.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<double> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    std::span<const double> values() const noexcept { return weights_; }

private:
    std::vector<double> weights_;
};

// ---------------------------------------------------------------------------
// Hypervolume
// ---------------------------------------------------------------------------

/// Volume of the box between s and r; zero when s does not strictly dominate r on some axis.
double hv_point(std::span<const double> s, const ReferencePoint& r);

/// Exact hypervolume of the union of boxes [s, r].
///
/// Points with any s_i >= r_i contribute nothing and are dropped first. Two
/// objectives use a sorted strip sweep; more objectives slice along the last
/// objective and recurse on the projected prefix sets.
double hv(const PointSet& s, const ReferencePoint& r);

/// HV(S) - HV(S without point i).
double hv_contribution(std::size_t i, const PointSet& s, const ReferencePoint& r);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Hit-count estimate of hv(s, r) from `samples` uniform draws in the box [lower, r].
/// Independent of the exact algorithm; used to cross-check it.
MonteCarloEstimate hv_montecarlo_oracle(const PointSet& s, const ReferencePoint& r,
                                        const ObjectivePoint& lower, std::size_t samples,
                                        std::uint64_t seed);

// ---------------------------------------------------------------------------
// Loss / distance indicators (all minimization)
// ---------------------------------------------------------------------------

/// Deterioration from choosing a instead of s: Euclidean norm of max(0, a - s).
double loss_point(std::span<const double> a, std::span<const double> s);

/// Loss of the nearest (least-loss) member of `subset` with respect to s.
double loss_subset(const PointSet& subset, std::span<const double> s);

/// Mean over s in `all` of loss_subset(subset, s).
double expected_loss(const PointSet& subset, const PointSet& all);

/// Weighted mean of loss_subset(subset, s) with weights w_s.
double weighted_expected_loss(const PointSet& subset, const PointSet& all, const WeightVector& w);

/// Mean over reference points of the Euclidean distance to the nearest subset member.
double igd(const PointSet& subset, const PointSet& reference);

/// IGD with per-axis differences clipped at zero. Same kernel as expected_loss,
/// so the two agree bit for bit.
double igd_plus(const PointSet& subset, const PointSet& reference);

namespace detail {

/// Squared nearest-member loss for every reference point, subset rows visited in order.
void nearest_sq_loss(kernels::LossKind kind, const PointSet& subset, std::span<const std::size_t> rows,
                     const kernels::PointColumns& reference, std::span<double> running);

/// (1/n) * sum_j sqrt(running[j]), summed in index order.
double mean_sqrt(std::span<const double> running);

}  // namespace detail

}  // namespace subsel
