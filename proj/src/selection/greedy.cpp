#include "subsel/errors.hpp"
#include "subsel/selection.hpp"

#include <algorithm>

namespace subsel {

SelectionResult select_greedy(const PointSet& s, const SelectionSpec& spec) {
    spec.validate(s.size(), s.dim());
    const std::size_t n = s.size();
    SubsetEvaluator eval(s, spec.indicator, spec.reference);

    std::vector<std::uint8_t> chosen(n, 0);
    std::vector<std::size_t> current;
    std::vector<std::size_t> trial;
    double current_value = 0.0;
    for (std::size_t step = 0; step < spec.k; ++step) {
        std::size_t pick = n;
        double pick_value = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            if (chosen[c]) continue;
            trial = current;
            trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
            const double v = eval.value(trial);
            if (pick == n || eval.better(v, pick_value)) {
                pick = c;
                pick_value = v;
            }
        }
        chosen[pick] = 1;
        current.insert(std::upper_bound(current.begin(), current.end(), pick), pick);
        current_value = pick_value;
    }
    return {SubsetMask(std::move(chosen)), current_value, {}, spec.seed, "none"};
}

}  // namespace subsel
