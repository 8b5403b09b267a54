#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subsel/geometry.hpp"
#include "subsel/kernels.hpp"

namespace subsel {

enum class Indicator { hv, igd, igd_plus };
enum class Strategy { exhaustive, greedy, ga, distance };

std::string_view to_string(Indicator indicator);
std::string_view to_string(Strategy strategy);
Indicator parse_indicator(std::string_view text);
Strategy parse_strategy(std::string_view text);

/// HV is maximized; IGD and IGD+ are minimized.
constexpr bool maximized(Indicator indicator) { return indicator == Indicator::hv; }

struct GaParams {
    std::size_t population = 100;
    std::size_t generations = 2000;
    double crossover_prob = 1.0;

    void validate() const;
};

struct SelectionSpec {
    Indicator indicator = Indicator::igd_plus;
    Strategy strategy = Strategy::ga;
    std::size_t k = 9;
    std::optional<ReferencePoint> reference;  ///< required iff indicator == hv
    GaParams ga;
    std::uint64_t seed = 1;
    std::uint64_t exhaustive_budget = 10'000'000;

    /// Throws InvalidArgument if k is out of [1, n] or the reference point does not match the indicator.
    void validate(std::size_t n, std::size_t m) const;
};

struct SelectionResult {
    SubsetMask mask;
    double indicator_value = 0.0;
    std::vector<double> history;  ///< best-so-far value after each GA generation
    std::uint64_t seed = 0;
    std::string rng;              ///< generator algorithm behind `seed`
};

/// Indicator value of index subsets of a fixed candidate set.
///
/// IGD and IGD+ use the full candidate set as reference set. Subset rows are
/// visited in ascending index order, which makes values bit-identical to
/// igd / igd_plus / hv evaluated on `points.subset(indices)`.
class SubsetEvaluator {
public:
    SubsetEvaluator(const PointSet& points, Indicator indicator, std::optional<ReferencePoint> reference);

    double value(std::span<const std::size_t> sorted_indices) const;
    double value(const SubsetMask& mask) const { return value(mask.indices()); }

    /// True when value a is strictly better than value b.
    bool better(double a, double b) const { return maximized(indicator_) ? a > b : a < b; }

    Indicator indicator() const noexcept { return indicator_; }
    const PointSet& points() const noexcept { return *points_; }

private:
    const PointSet* points_;
    Indicator indicator_;
    std::optional<ReferencePoint> reference_;
    kernels::PointColumns columns_;
    mutable std::vector<double> running_;
};

/// Optimum over all C(n, k) subsets; ties resolved to the smallest mask.
/// Throws BudgetExceeded if C(n, k) exceeds spec.exhaustive_budget.
SelectionResult select_exhaustive(const PointSet& s, const SelectionSpec& spec);

/// Incremental greedy: add, k times, the point that most improves the indicator
/// of the growing subset (lowest index on ties). For HV this is the classic
/// largest-contribution rule; for IGD / IGD+ it is the same rule applied to the
/// decrease of the indicator.
SelectionResult select_greedy(const PointSet& s, const SelectionSpec& spec);

/// Called once per generation with the post-update population (for invariant checks).
using GaObserver = std::function<void(std::size_t generation, std::span<const std::vector<std::uint8_t>> population)>;

/// Fixed-cardinality binary GA:
///  - mu distinct random masks with exactly k ones,
///  - binary tournament parent selection,
///  - one-point crossover,
///  - biased bit flip (1/k for 1->0, 1/(n-k) for 0->1),
///  - random repair back to exactly k ones,
///  - (mu+mu) truncation with duplicate removal,
/// returning the best mask ever evaluated.
SelectionResult select_ga(const PointSet& s, const SelectionSpec& spec, const GaObserver& observer = {});

/// Max-min distance selection seeded with the per-objective extreme solutions.
SelectionResult select_distance(const PointSet& s, std::size_t k, std::uint64_t seed);

/// Dispatches on spec.strategy.
SelectionResult select(const PointSet& s, const SelectionSpec& spec);

struct PipelineStage {
    Strategy strategy = Strategy::ga;
    Indicator indicator = Indicator::igd_plus;
    std::size_t k = 9;
    std::optional<ReferencePoint> reference;
    GaParams ga;
};

/// Runs the stages in order, each on the previous stage's output (which is also
/// that stage's IGD/IGD+ reference set). The result mask indexes the original set;
/// its value is the last stage's indicator on the last stage's input.
SelectionResult select_pipeline(const PointSet& s, std::span<const PipelineStage> stages, std::uint64_t seed,
                                std::uint64_t exhaustive_budget = 10'000'000);

/// Exact HV optimum for a 2-D front sample. Enumerates when C(n, k) is within
/// budget, otherwise solves the 2-D problem by dynamic programming over the
/// points sorted by the first objective.
SelectionResult optimal_linear_front_oracle(const PointSet& front, const ReferencePoint& r, std::size_t k,
                                            std::uint64_t budget = 10'000'000);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace subsel
