#include <algorithm>
#include <limits>

#include "subsel/indicators.hpp"
#include "subsel/selection.hpp"

namespace subsel {

namespace {

double sq_distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        d = d + t * t;
    }
    return d;
}

}  // namespace

// The reported value is the expected loss (IGD+ against the whole set); the
// strategy itself does not optimize an indicator.
SelectionResult select_distance(const PointSet& s, std::size_t k, std::uint64_t seed) {
    SelectionSpec spec;
    spec.strategy = Strategy::distance;
    spec.indicator = Indicator::igd_plus;
    spec.k = k;
    spec.validate(s.size(), s.dim());
    const std::size_t n = s.size();

    std::vector<std::size_t> selected;
    for (std::size_t e : extreme_solutions(s))
        if (std::find(selected.begin(), selected.end(), e) == selected.end()) selected.push_back(e);
    if (selected.size() > k) selected.resize(k);

    std::vector<std::uint8_t> chosen(n, 0);
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    auto absorb = [&](std::size_t p) {
        chosen[p] = 1;
        for (std::size_t j = 0; j < n; ++j) nearest[j] = std::min(nearest[j], sq_distance(s[p], s[j]));
    };
    for (std::size_t p : selected) absorb(p);

    while (selected.size() < k) {
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!chosen[j] && (pick == n || nearest[j] > nearest[pick])) pick = j;
        selected.push_back(pick);
        absorb(pick);
    }

    auto mask = SubsetMask(std::move(chosen));
    const double value = SubsetEvaluator(s, Indicator::igd_plus, std::nullopt).value(mask);
    return {std::move(mask), value, {}, seed, "none"};
}

SelectionResult select(const PointSet& s, const SelectionSpec& spec) {
    switch (spec.strategy) {
        case Strategy::exhaustive:
            return select_exhaustive(s, spec);
        case Strategy::greedy:
            return select_greedy(s, spec);
        case Strategy::ga:
            return select_ga(s, spec);
        case Strategy::distance: {
            spec.validate(s.size(), s.dim());
            auto result = select_distance(s, spec.k, spec.seed);
            result.indicator_value = SubsetEvaluator(s, spec.indicator, spec.reference).value(result.mask);
            return result;
        }
    }
    return {};
}

}  // namespace subsel
