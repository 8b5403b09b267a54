#include <numeric>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/selection.hpp"

namespace subsel {

SelectionResult select_exhaustive(const PointSet& s, const SelectionSpec& spec) {
    spec.validate(s.size(), s.dim());
    const std::size_t n = s.size();
    const std::size_t k = spec.k;
    const std::uint64_t total = binomial(n, k);
    if (total > spec.exhaustive_budget)
        throw BudgetExceeded("exhaustive selection needs C(" + std::to_string(n) + ", " + std::to_string(k) +
                             ") subsets, budget is " + std::to_string(spec.exhaustive_budget));

    SubsetEvaluator eval(s, spec.indicator, spec.reference);

    // Combinations in lexicographic order; only strict improvements replace the
    // incumbent, so ties keep the smallest mask.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<std::size_t> best = idx;
    double best_value = eval.value(idx);
    while (true) {
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
        const double v = eval.value(idx);
        if (eval.better(v, best_value)) {
            best_value = v;
            best = idx;
        }
    }
    return {SubsetMask::from_indices(n, best), best_value, {}, spec.seed, "none"};
}

}  // namespace subsel
