#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/indicators.hpp"

namespace subsel {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    double total = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) throw InvalidArgument("WeightVector: weights must be finite and >= 0");
        total += w;
    }
    if (!(total > 0.0)) throw InvalidArgument("WeightVector: weights must not all be zero");
}

double loss_point(std::span<const double> a, std::span<const double> s) {
    if (a.size() != s.size()) throw InvalidArgument("loss_point: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = std::max(0.0, a[i] - s[i]);
        d = d + t * t;
    }
    return std::sqrt(d);
}

double loss_subset(const PointSet& subset, std::span<const double> s) {
    if (subset.empty()) throw InvalidArgument("loss_subset: empty subset");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < subset.size(); ++p) best = std::min(best, loss_point(subset[p], s));
    return best;
}

namespace detail {

void nearest_sq_loss(kernels::LossKind kind, const PointSet& subset, std::span<const std::size_t> rows,
                     const kernels::PointColumns& reference, std::span<double> running) {
    const auto& kernel = kernels::active();
    std::fill(running.begin(), running.end(), std::numeric_limits<double>::infinity());
    for (std::size_t r : rows) kernel.min_sq_loss(kind, subset[r], reference, running);
}

double mean_sqrt(std::span<const double> running) {
    double total = 0.0;
    for (double d : running) total += std::sqrt(d);
    return total / static_cast<double>(running.size());
}

}  // namespace detail

namespace {

void check_pair(const PointSet& subset, const PointSet& reference, const char* what) {
    if (subset.empty() || reference.empty()) throw InvalidArgument(std::string(what) + ": empty input");
    if (subset.dim() != reference.dim()) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

std::vector<double> nearest_sq(kernels::LossKind kind, const PointSet& subset, const PointSet& reference) {
    std::vector<std::size_t> rows(subset.size());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::vector<double> running(reference.size());
    detail::nearest_sq_loss(kind, subset, rows, kernels::PointColumns(reference), running);
    return running;
}

// One kernel behind expected_loss and igd_plus.
double mean_truncated_loss(const PointSet& subset, const PointSet& reference) {
    return detail::mean_sqrt(nearest_sq(kernels::LossKind::truncated, subset, reference));
}

}  // namespace

double expected_loss(const PointSet& subset, const PointSet& all) {
    check_pair(subset, all, "expected_loss");
    return mean_truncated_loss(subset, all);
}

double igd_plus(const PointSet& subset, const PointSet& reference) {
    check_pair(subset, reference, "igd_plus");
    return mean_truncated_loss(subset, reference);
}

double weighted_expected_loss(const PointSet& subset, const PointSet& all, const WeightVector& w) {
    check_pair(subset, all, "weighted_expected_loss");
    if (w.size() != all.size()) throw InvalidArgument("weighted_expected_loss: weight count must equal |S|");
    const auto running = nearest_sq(kernels::LossKind::truncated, subset, all);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < running.size(); ++j) {
        num += w[j] * std::sqrt(running[j]);
        den += w[j];
    }
    return num / den;
}

double igd(const PointSet& subset, const PointSet& reference) {
    check_pair(subset, reference, "igd");
    return detail::mean_sqrt(nearest_sq(kernels::LossKind::euclidean, subset, reference));
}

}  // namespace subsel
