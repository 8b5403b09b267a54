#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/rng.hpp"
#include "subsel/selection.hpp"

namespace subsel {

namespace {

using Bits = std::vector<std::uint8_t>;

struct Individual {
    Bits bits;
    double value = 0.0;
};

class GaRun {
public:
    GaRun(const PointSet& s, const SelectionSpec& spec)
        : n_(s.size()), k_(spec.k), params_(spec.ga), eval_(s, spec.indicator, spec.reference), rng_(spec.seed) {
        ones_.reserve(n_);
        zeros_.reserve(n_);
    }

    SelectionResult run(const GaObserver& observer, std::uint64_t seed) {
        initialize();
        Individual best = population_.front();
        std::vector<double> history;
        history.reserve(params_.generations);

        for (std::size_t gen = 0; gen < params_.generations; ++gen) {
            std::vector<Individual> offspring;
            offspring.reserve(params_.population);
            while (offspring.size() < params_.population) {
                const Individual& a = tournament();
                const Individual& b = tournament();
                Bits c1 = a.bits;
                Bits c2 = b.bits;
                if (rng_.bernoulli(params_.crossover_prob)) {
                    const std::size_t cut = rng_.between(1, n_ - 1);
                    std::swap_ranges(c1.begin() + static_cast<std::ptrdiff_t>(cut), c1.end(),
                                     c2.begin() + static_cast<std::ptrdiff_t>(cut));
                }
                offspring.push_back(make_child(std::move(c1)));
                if (offspring.size() < params_.population) offspring.push_back(make_child(std::move(c2)));
            }
            update(std::move(offspring));
            if (ranks_before(population_.front(), best)) best = population_.front();
            history.push_back(best.value);
            if (observer) {
                std::vector<Bits> view;
                view.reserve(population_.size());
                for (const auto& ind : population_) view.push_back(ind.bits);
                observer(gen, view);
            }
        }
        return {SubsetMask(best.bits), best.value, std::move(history), seed, std::string(Rng::algorithm)};
    }

private:
    bool ranks_before(const Individual& a, const Individual& b) const {
        if (a.value != b.value) return eval_.better(a.value, b.value);
        return SubsetMask::mask_less(a.bits, b.bits);
    }

    double evaluate(const Bits& bits) {
        indices_.clear();
        for (std::size_t i = 0; i < n_; ++i)
            if (bits[i]) indices_.push_back(i);
        return eval_.value(indices_);
    }

    Bits random_mask() {
        std::vector<std::size_t> pool(n_);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        Bits bits(n_, 0);
        for (std::size_t i : rng_.sample(pool, k_)) bits[i] = 1;
        return bits;
    }

    // Adds fresh random masks not already present until the population holds mu members.
    void fill(std::set<Bits>& seen) {
        while (population_.size() < params_.population) {
            Bits bits = random_mask();
            if (!seen.insert(bits).second) continue;
            const double v = evaluate(bits);
            population_.push_back({std::move(bits), v});
        }
        sort_population();
    }

    void initialize() {
        population_.clear();
        std::set<Bits> seen;
        fill(seen);
    }

    void sort_population() {
        std::sort(population_.begin(), population_.end(),
                  [this](const Individual& a, const Individual& b) { return ranks_before(a, b); });
    }

    const Individual& tournament() {
        const std::size_t mu = population_.size();
        const std::size_t i = rng_.below(mu);
        std::size_t j = rng_.below(mu - 1);
        if (j >= i) ++j;
        return ranks_before(population_[j], population_[i]) ? population_[j] : population_[i];
    }

    Individual make_child(Bits bits) {
        // Biased bit flip: ones leave with 1/k, zeros enter with 1/(n-k).
        const double p_off = 1.0 / static_cast<double>(k_);
        const double p_on = 1.0 / static_cast<double>(n_ - k_);
        for (auto& b : bits)
            if (rng_.bernoulli(b ? p_off : p_on)) b ^= 1;

        ones_.clear();
        zeros_.clear();
        for (std::size_t i = 0; i < n_; ++i) (bits[i] ? ones_ : zeros_).push_back(i);
        if (ones_.size() > k_) {
            for (std::size_t i : rng_.sample(ones_, ones_.size() - k_)) bits[i] = 0;
        } else if (ones_.size() < k_) {
            for (std::size_t i : rng_.sample(zeros_, k_ - ones_.size())) bits[i] = 1;
        }
        const double v = evaluate(bits);
        return {std::move(bits), v};
    }

    void update(std::vector<Individual> offspring) {
        for (auto& child : offspring) population_.push_back(std::move(child));
        sort_population();
        // Equal masks have equal values, so duplicates sit next to each other after the sort.
        auto last = std::unique(population_.begin(), population_.end(),
                                [](const Individual& a, const Individual& b) { return a.bits == b.bits; });
        population_.erase(last, population_.end());
        if (population_.size() > params_.population) {
            population_.resize(params_.population);
        } else if (population_.size() < params_.population) {
            std::set<Bits> seen;
            for (const auto& ind : population_) seen.insert(ind.bits);
            fill(seen);
        }
    }

    std::size_t n_;
    std::size_t k_;
    GaParams params_;
    SubsetEvaluator eval_;
    Rng rng_;
    std::vector<Individual> population_;
    std::vector<std::size_t> indices_;
    std::vector<std::size_t> ones_;
    std::vector<std::size_t> zeros_;
};

}  // namespace

SelectionResult select_ga(const PointSet& s, const SelectionSpec& spec, const GaObserver& observer) {
    spec.validate(s.size(), s.dim());
    spec.ga.validate();
    const std::size_t n = s.size();
    if (spec.k == n) {
        SubsetEvaluator eval(s, spec.indicator, spec.reference);
        auto mask = SubsetMask::full(n);
        const double v = eval.value(mask);
        return {std::move(mask), v, std::vector<double>(spec.ga.generations, v), spec.seed,
                std::string(Rng::algorithm)};
    }
    if (spec.ga.population > binomial(n, spec.k))
        throw InvalidArgument("GA population " + std::to_string(spec.ga.population) + " exceeds C(" +
                              std::to_string(n) + ", " + std::to_string(spec.k) +
                              "): distinct initialization impossible");
    GaRun run(s, spec);
    return run.run(observer, spec.seed);
}

}  // namespace subsel
