#include <algorithm>
#include <numeric>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/indicators.hpp"
#include "subsel/selection.hpp"

namespace subsel {

SelectionResult select_pipeline(const PointSet& s, std::span<const PipelineStage> stages, std::uint64_t seed,
                                std::uint64_t exhaustive_budget) {
    if (stages.empty()) throw InvalidArgument("pipeline: at least one stage required");
    for (std::size_t i = 1; i < stages.size(); ++i)
        if (stages[i].k >= stages[i - 1].k) throw InvalidArgument("pipeline: stage sizes must strictly decrease");

    PointSet current = s;
    std::vector<std::size_t> origin(s.size());
    std::iota(origin.begin(), origin.end(), std::size_t{0});
    SelectionResult last;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const auto& stage = stages[i];
        if (stage.k > current.size())
            throw InvalidArgument("pipeline: stage " + std::to_string(i + 1) + " asks for " +
                                  std::to_string(stage.k) + " of " + std::to_string(current.size()) + " points");
        SelectionSpec spec;
        spec.strategy = stage.strategy;
        spec.indicator = stage.indicator;
        spec.k = stage.k;
        spec.reference = stage.reference;
        spec.ga = stage.ga;
        spec.seed = seed;  // every stage restarts from the root seed
        spec.exhaustive_budget = exhaustive_budget;
        last = select(current, spec);

        const auto picked = last.mask.indices();
        std::vector<std::size_t> next_origin;
        next_origin.reserve(picked.size());
        for (std::size_t p : picked) next_origin.push_back(origin[p]);
        current = current.subset(picked);
        origin = std::move(next_origin);
    }
    last.mask = SubsetMask::from_indices(s.size(), origin);
    last.seed = seed;
    return last;
}

SelectionResult optimal_linear_front_oracle(const PointSet& front, const ReferencePoint& r, std::size_t k,
                                            std::uint64_t budget) {
    SelectionSpec spec;
    spec.indicator = Indicator::hv;
    spec.strategy = Strategy::exhaustive;
    spec.k = k;
    spec.reference = r;
    spec.exhaustive_budget = budget;
    spec.validate(front.size(), front.dim());
    if (binomial(front.size(), k) <= budget) return select_exhaustive(front, spec);

    if (front.dim() != 2) throw BudgetExceeded("optimal_linear_front_oracle: enumeration over budget and m != 2");
    if (!is_mutually_non_dominated(front))
        throw InvalidArgument("optimal_linear_front_oracle: front sample must be mutually non-dominated");
    for (std::size_t p = 0; p < front.size(); ++p)
        if (!(front[p][0] < r[0] && front[p][1] < r[1]))
            throw InvalidArgument("optimal_linear_front_oracle: every point must dominate the reference point");

    // Sorted by f1 (so f2 decreases), a subset's HV is the sum over consecutive
    // members of (r1 - x_j) * (y_{j-1} - y_j), with y_0 = r2.
    const std::size_t n = front.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return front[a][0] != front[b][0] ? front[a][0] < front[b][0] : a < b;
    });
    auto x = [&](std::size_t j) { return front[order[j]][0]; };
    auto y = [&](std::size_t j) { return front[order[j]][1]; };

    constexpr double kNone = -1.0;
    std::vector<std::vector<double>> best(k, std::vector<double>(n, kNone));
    std::vector<std::vector<std::size_t>> from(k, std::vector<std::size_t>(n, n));
    for (std::size_t j = 0; j < n; ++j) best[0][j] = (r[0] - x(j)) * (r[1] - y(j));
    for (std::size_t c = 1; c < k; ++c)
        for (std::size_t j = c; j < n; ++j)
            for (std::size_t i = c - 1; i < j; ++i) {
                if (best[c - 1][i] == kNone) continue;
                const double v = best[c - 1][i] + (r[0] - x(j)) * (y(i) - y(j));
                if (v > best[c][j]) {
                    best[c][j] = v;
                    from[c][j] = i;
                }
            }

    std::size_t end = k - 1;
    for (std::size_t j = k - 1; j < n; ++j)
        if (best[k - 1][j] > best[k - 1][end]) end = j;
    std::vector<std::size_t> picked;
    for (std::size_t c = k, j = end; c-- > 0; j = from[c][j]) picked.push_back(order[j]);
    std::sort(picked.begin(), picked.end());

    auto mask = SubsetMask::from_indices(n, picked);
    const double value = hv(front.subset(picked), r);
    return {std::move(mask), value, {}, 0, "none"};
}

}  // namespace subsel
