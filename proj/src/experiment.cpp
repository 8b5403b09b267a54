#include "subsel/experiment.hpp"

#include <numeric>

#include "subsel/errors.hpp"

namespace subsel {

std::size_t median_index(const std::vector<double>& values) {
    if (values.empty()) throw InvalidArgument("median_index: no values");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return order[(values.size() - 1) / 2];
}

ExperimentResult run_experiment(const PointSet& s, const SelectionSpec& spec, std::size_t repeats,
                                std::size_t threads) {
    if (repeats < 1) throw InvalidArgument("run_experiment: repeats must be at least 1");
    spec.validate(s.size(), s.dim());
    ExperimentResult out;
    out.seeds.resize(repeats);
    out.runs.resize(repeats);
    for (std::size_t i = 0; i < repeats; ++i) out.seeds[i] = spec.seed + i;
    parallel_for(repeats, threads, [&](std::size_t i) {
        SelectionSpec run = spec;
        run.seed = out.seeds[i];
        out.runs[i] = select(s, run);
    });
    std::vector<double> values;
    values.reserve(repeats);
    for (const auto& r : out.runs) values.push_back(r.indicator_value);
    out.median_run = median_index(values);
    return out;
}

}  // namespace subsel
