#include <limits>
#include <numeric>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/indicators.hpp"
#include "subsel/selection.hpp"

namespace subsel {

std::string_view to_string(Indicator indicator) {
    switch (indicator) {
        case Indicator::hv: return "hv";
        case Indicator::igd: return "igd";
        case Indicator::igd_plus: return "igdplus";
    }
    return "?";
}

std::string_view to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::exhaustive: return "exhaustive";
        case Strategy::greedy: return "greedy";
        case Strategy::ga: return "ga";
        case Strategy::distance: return "distance";
    }
    return "?";
}

Indicator parse_indicator(std::string_view text) {
    for (Indicator i : {Indicator::hv, Indicator::igd, Indicator::igd_plus})
        if (to_string(i) == text) return i;
    throw InvalidArgument("unknown indicator '" + std::string(text) + "' (expected hv, igd or igdplus)");
}

Strategy parse_strategy(std::string_view text) {
    for (Strategy s : {Strategy::exhaustive, Strategy::greedy, Strategy::ga, Strategy::distance})
        if (to_string(s) == text) return s;
    throw InvalidArgument("unknown strategy '" + std::string(text) +
                          "' (expected exhaustive, greedy, ga or distance)");
}

void GaParams::validate() const {
    if (population < 2) throw InvalidArgument("GA population must be at least 2");
    if (generations < 1) throw InvalidArgument("GA generations must be at least 1");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
        throw InvalidArgument("GA crossover probability must lie in [0, 1]");
}

void SelectionSpec::validate(std::size_t n, std::size_t m) const {
    if (k < 1 || k > n)
        throw InvalidArgument("k must lie in [1, " + std::to_string(n) + "], got " + std::to_string(k));
    if (indicator == Indicator::hv) {
        if (!reference) throw InvalidArgument("the hv indicator requires a reference point");
        if (reference->dim() != m) throw InvalidArgument("reference point dimension does not match the points");
    } else if (reference && strategy != Strategy::distance) {
        throw InvalidArgument("a reference point is only meaningful for the hv indicator");
    }
    if (strategy == Strategy::ga) ga.validate();
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // c * (n-k+i) / i without overflow: i / gcd(c, i) divides (n-k+i).
        const std::uint64_t g = std::gcd(c, i);
        const std::uint64_t factor = (n - k + i) / (i / g);
        c /= g;
        if (c > kMax / factor) return kMax;
        c *= factor;
    }
    return c;
}

SubsetEvaluator::SubsetEvaluator(const PointSet& points, Indicator indicator,
                                 std::optional<ReferencePoint> reference)
    : points_(&points), indicator_(indicator), reference_(std::move(reference)) {
    if (points.empty()) throw InvalidArgument("SubsetEvaluator: empty point set");
    if (indicator_ == Indicator::hv) {
        if (!reference_) throw InvalidArgument("SubsetEvaluator: hv requires a reference point");
        if (reference_->dim() != points.dim()) throw InvalidArgument("SubsetEvaluator: reference dimension mismatch");
    } else {
        columns_ = kernels::PointColumns(points);
        running_.resize(points.size());
    }
}

double SubsetEvaluator::value(std::span<const std::size_t> sorted_indices) const {
    if (sorted_indices.empty()) throw InvalidArgument("SubsetEvaluator: empty subset");
    if (indicator_ == Indicator::hv) return hv(points_->subset(sorted_indices), *reference_);
    const auto kind = indicator_ == Indicator::igd ? kernels::LossKind::euclidean : kernels::LossKind::truncated;
    detail::nearest_sq_loss(kind, *points_, sorted_indices, columns_, running_);
    return detail::mean_sqrt(running_);
}

}  // namespace subsel
