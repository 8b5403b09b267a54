#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "subsel/errors.hpp"
#include "subsel/indicators.hpp"
#include "subsel/selection.hpp"

using namespace subsel;

namespace {

const PointSet kTriple{{0, 1}, {1, 0}, {0.5, 0.5}};

SelectionSpec make_spec(Indicator ind, Strategy strat, std::size_t k, std::optional<ReferencePoint> r = {}) {
    SelectionSpec spec;
    spec.indicator = ind;
    spec.strategy = strat;
    spec.k = k;
    spec.reference = std::move(r);
    return spec;
}

PointSet linear_front(std::size_t n) {
    PointSet s(2);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        s.push_back(std::vector<double>{t, 1.0 - t});
    }
    return s;
}

double recompute(const PointSet& s, const SelectionSpec& spec, const SubsetMask& mask) {
    auto sub = s.subset(mask.indices());
    switch (spec.indicator) {
        case Indicator::hv: return hv(sub, *spec.reference);
        case Indicator::igd: return igd(sub, s);
        case Indicator::igd_plus: return igd_plus(sub, s);
    }
    return 0;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(make_spec(Indicator::hv, Strategy::greedy, 1).validate(3, 2), InvalidArgument);
    CHECK_THROWS_AS(make_spec(Indicator::igd, Strategy::greedy, 1, ReferencePoint{2, 2}).validate(3, 2),
                    InvalidArgument);
    CHECK_THROWS_AS(make_spec(Indicator::igd, Strategy::greedy, 0).validate(3, 2), InvalidArgument);
    CHECK_THROWS_AS(make_spec(Indicator::igd, Strategy::greedy, 4).validate(3, 2), InvalidArgument);
    CHECK_THROWS_AS(make_spec(Indicator::hv, Strategy::greedy, 1, ReferencePoint{2, 2, 2}).validate(3, 2),
                    InvalidArgument);
    CHECK_NOTHROW(make_spec(Indicator::hv, Strategy::greedy, 1, ReferencePoint{2, 2}).validate(3, 2));
    GaParams bad;
    bad.population = 1;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    CHECK(parse_indicator("igdplus") == Indicator::igd_plus);
    CHECK_THROWS_AS(parse_strategy("random"), InvalidArgument);
}

TEST_CASE("binomial") {
    CHECK(binomial(20, 3) == 1140);
    CHECK(binomial(201, 2) == 20100);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(1000, 500) == UINT64_MAX);
}

TEST_CASE("exhaustive selection") {
    // Single-subset case.
    auto all = select_exhaustive(kTriple, make_spec(Indicator::igd_plus, Strategy::exhaustive, 3));
    CHECK(all.mask.count() == 3);
    CHECK(all.indicator_value == 0.0);

    // k = 1, HV: singleton volumes 2, 2 and 2.25.
    auto hv1 = select_exhaustive(kTriple, make_spec(Indicator::hv, Strategy::exhaustive, 1, ReferencePoint{2, 2}));
    CHECK(hv1.mask.indices() == std::vector<std::size_t>{2});
    CHECK(hv1.indicator_value == 2.25);

    // k = 1, IGD+: singleton losses 0.5, 0.5 and 1/3.
    auto ip1 = select_exhaustive(kTriple, make_spec(Indicator::igd_plus, Strategy::exhaustive, 1));
    CHECK(ip1.mask.indices() == std::vector<std::size_t>{2});
    CHECK(ip1.indicator_value == doctest::Approx(1.0 / 3.0));
    CHECK(expected_loss(PointSet{{0, 1}}, kTriple) == doctest::Approx(0.5));

    // Tie: (0,1) and (1,0) are equally good alone under HV with r = (2, 2) once (0.5,0.5) is gone.
    auto tie = select_exhaustive(PointSet{{0, 1}, {1, 0}},
                                 make_spec(Indicator::hv, Strategy::exhaustive, 1, ReferencePoint{2, 2}));
    CHECK(tie.mask.indices() == std::vector<std::size_t>{0});

    auto over = make_spec(Indicator::igd, Strategy::exhaustive, 5);
    over.exhaustive_budget = 100;
    std::mt19937_64 gen(1);
    CHECK_THROWS_AS(select_exhaustive(oracle::random_front_2d(gen, 30), over), BudgetExceeded);
}

TEST_CASE("greedy selection") {
    auto hv_spec = make_spec(Indicator::hv, Strategy::greedy, 1, ReferencePoint{2, 2});
    CHECK(select_greedy(kTriple, hv_spec).mask == select_exhaustive(kTriple, hv_spec).mask);

    auto full = select_greedy(kTriple, make_spec(Indicator::igd, Strategy::greedy, 3));
    CHECK(full.mask.count() == 3);
    CHECK(full.indicator_value == igd(kTriple, kTriple));

    // Linear front: greedy keeps the centre at k = 2, the optimum does not.
    auto front = linear_front(201);
    auto g2 = select_greedy(front, make_spec(Indicator::hv, Strategy::greedy, 2, ReferencePoint{2, 2}));
    auto ex2 = select_exhaustive(front, make_spec(Indicator::hv, Strategy::exhaustive, 2, ReferencePoint{2, 2}));
    CHECK(g2.mask.test(100));
    CHECK_FALSE(ex2.mask.test(100));
    CHECK(ex2.indicator_value > g2.indicator_value);
}

TEST_CASE("linear front oracle") {
    auto front = linear_front(201);
    auto one = optimal_linear_front_oracle(front, {2, 2}, 1);
    CHECK(one.mask.indices() == std::vector<std::size_t>{100});
    CHECK(one.indicator_value == doctest::Approx(2.25));
    auto all = optimal_linear_front_oracle(front, {2, 2}, 201);
    CHECK(all.mask.count() == 201);

    // Dynamic programming path agrees with enumeration.
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = oracle::random_front_2d(gen, 18);
        for (std::size_t k : {2u, 3u, 4u}) {
            auto exact = optimal_linear_front_oracle(s, {1.2, 1.2}, k);
            auto dp = optimal_linear_front_oracle(s, {1.2, 1.2}, k, /*budget=*/1);
            CHECK(dp.indicator_value == doctest::Approx(exact.indicator_value).epsilon(1e-12));
            CHECK(dp.mask.count() == k);
        }
    }
}

TEST_CASE("ga basics") {
    std::mt19937_64 gen(3);
    auto s = oracle::random_front_2d(gen, 20);
    auto spec = make_spec(Indicator::igd_plus, Strategy::ga, 3);
    spec.ga.generations = 60;
    spec.seed = 42;

    std::size_t generations_seen = 0;
    bool popcount_ok = true;
    bool distinct_ok = true;
    auto result = select_ga(s, spec, [&](std::size_t, std::span<const std::vector<std::uint8_t>> pop) {
        ++generations_seen;
        std::vector<std::vector<std::uint8_t>> copy(pop.begin(), pop.end());
        for (const auto& b : copy) popcount_ok = popcount_ok && std::count(b.begin(), b.end(), 1) == 3;
        std::sort(copy.begin(), copy.end());
        distinct_ok = distinct_ok && std::adjacent_find(copy.begin(), copy.end()) == copy.end();
        CHECK(pop.size() == spec.ga.population);
    });
    CHECK(generations_seen == 60);
    CHECK(popcount_ok);
    CHECK(distinct_ok);
    CHECK(result.mask.count() == 3);
    CHECK(result.history.size() == 60);
    CHECK(std::is_sorted(result.history.rbegin(), result.history.rend()));  // non-increasing
    CHECK(result.indicator_value == doctest::Approx(recompute(s, spec, result.mask)).epsilon(1e-12));
    CHECK(result.rng == "mt19937_64");

    auto again = select_ga(s, spec);
    CHECK(again.mask == result.mask);
    CHECK(again.history == result.history);

    auto hv_spec = make_spec(Indicator::hv, Strategy::ga, 3, ReferencePoint{1.1, 1.1});
    hv_spec.ga.generations = 40;
    auto hv_res = select_ga(s, hv_spec);
    CHECK(std::is_sorted(hv_res.history.begin(), hv_res.history.end()));  // non-decreasing

    auto full = make_spec(Indicator::igd, Strategy::ga, 20);
    full.ga.generations = 5;
    auto fr = select_ga(s, full);
    CHECK(fr.mask.count() == 20);
    CHECK(fr.history.size() == 5);

    auto crowded = make_spec(Indicator::igd, Strategy::ga, 1);
    crowded.ga.population = 21;
    CHECK_THROWS_AS(select_ga(s, crowded), InvalidArgument);
}

TEST_CASE("ga finds the exhaustive optimum on a small instance") {
    std::mt19937_64 gen(10);
    auto s = oracle::random_front_2d(gen, 20);
    for (Indicator ind : {Indicator::hv, Indicator::igd, Indicator::igd_plus}) {
        std::optional<ReferencePoint> r;
        if (ind == Indicator::hv) r = ReferencePoint{1.1, 1.1};
        auto exact = select_exhaustive(s, make_spec(ind, Strategy::exhaustive, 3, r));
        auto spec = make_spec(ind, Strategy::ga, 3, r);
        spec.ga.generations = 300;
        auto ga = select_ga(s, spec);
        CHECK(ga.indicator_value == doctest::Approx(exact.indicator_value).epsilon(1e-12));
    }
}

TEST_CASE("distance-based selection") {
    PointSet s{{0, 1}, {0.3, 0.6}, {0.5, 0.5}, {1, 0}};
    auto ext = select_distance(s, 2, 0);
    CHECK(ext.mask.indices() == std::vector<std::size_t>{0, 3});

    PointSet line{{0, 2}, {1, 1}, {2, 0}};
    CHECK(select_distance(line, 3, 0).mask.count() == 3);

    // Extremes beyond k are truncated to the first ones.
    PointSet three{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {0.5, 0.5, 0.5}};
    CHECK(select_distance(three, 2, 0).mask.indices() == std::vector<std::size_t>{0, 1});

    // Max-min growth: third pick is the one farthest from both extremes.
    auto third = select_distance(s, 3, 0);
    CHECK(third.mask.indices() == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("pipeline") {
    std::mt19937_64 gen(21);
    auto s = oracle::random_front_2d(gen, 60);

    std::vector<PipelineStage> single{{Strategy::greedy, Indicator::igd_plus, 5, {}, {}}};
    auto direct = select_greedy(s, make_spec(Indicator::igd_plus, Strategy::greedy, 5));
    auto piped = select_pipeline(s, single, 1);
    CHECK(piped.mask == direct.mask);
    CHECK(piped.indicator_value == direct.indicator_value);

    std::vector<PipelineStage> identity{{Strategy::distance, Indicator::igd_plus, 60, {}, {}}};
    CHECK(select_pipeline(s, identity, 1).mask.count() == 60);

    GaParams quick;
    quick.generations = 50;
    std::vector<PipelineStage> two{{Strategy::distance, Indicator::igd_plus, 20, {}, {}},
                                   {Strategy::ga, Indicator::igd_plus, 4, {}, quick}};
    auto staged = select_pipeline(s, two, 3);
    CHECK(staged.mask.size() == 60);
    CHECK(staged.mask.count() == 4);
    auto first = select_distance(s, 20, 3).mask;
    for (std::size_t i : staged.mask.indices()) CHECK(first.test(i));

    std::vector<PipelineStage> growing{{Strategy::distance, Indicator::igd_plus, 5, {}, {}},
                                       {Strategy::distance, Indicator::igd_plus, 5, {}, {}}};
    CHECK_THROWS_AS(select_pipeline(s, growing, 1), InvalidArgument);
    std::vector<PipelineStage> too_big{{Strategy::distance, Indicator::igd_plus, 61, {}, {}}};
    CHECK_THROWS_AS(select_pipeline(s, too_big, 1), InvalidArgument);
}

TEST_CASE("result values match recomputation for every strategy") {
    std::mt19937_64 gen(17);
    auto s = oracle::random_front_2d(gen, 15);
    for (Indicator ind : {Indicator::hv, Indicator::igd, Indicator::igd_plus})
        for (Strategy st : {Strategy::exhaustive, Strategy::greedy, Strategy::ga, Strategy::distance}) {
            std::optional<ReferencePoint> r;
            if (ind == Indicator::hv) r = ReferencePoint{1.1, 1.1};
            auto spec = make_spec(ind, st, 4, r);
            spec.ga.generations = 30;
            auto res = select(s, spec);
            CHECK(res.mask.count() == 4);
            CHECK(res.indicator_value == doctest::Approx(recompute(s, spec, res.mask)).epsilon(1e-12));
        }
}

TEST_CASE("exhaustive and greedy are permutation robust") {
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = oracle::random_front_2d(gen, 12);
        std::vector<std::size_t> perm(s.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), gen);
        auto shuffled = s.subset(perm);
        for (Indicator ind : {Indicator::hv, Indicator::igd, Indicator::igd_plus})
            for (Strategy st : {Strategy::exhaustive, Strategy::greedy}) {
                std::optional<ReferencePoint> r;
                if (ind == Indicator::hv) r = ReferencePoint{1.1, 1.1};
                auto spec = make_spec(ind, st, 3, r);
                auto a = select(s, spec);
                auto b = select(shuffled, spec).mask.indices();
                std::vector<std::size_t> mapped;
                for (std::size_t i : b) mapped.push_back(perm[i]);
                std::sort(mapped.begin(), mapped.end());
                // Reordering only changes summation order, so the subsets agree
                // unless two candidates tie to within rounding.
                SubsetEvaluator eval(s, ind, r);
                CHECK(eval.value(mapped) == doctest::Approx(a.indicator_value).epsilon(1e-12));
            }
    }
}

TEST_CASE("strategies beat random subsets") {
    std::mt19937_64 gen(33);
    auto s = oracle::random_front_2d(gen, 40);
    for (Indicator ind : {Indicator::hv, Indicator::igd, Indicator::igd_plus}) {
        std::optional<ReferencePoint> r;
        if (ind == Indicator::hv) r = ReferencePoint{1.1, 1.1};
        SubsetEvaluator eval(s, ind, r);
        std::vector<double> random_values;
        for (int t = 0; t < 31; ++t) {
            std::vector<std::size_t> idx(s.size());
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            std::shuffle(idx.begin(), idx.end(), gen);
            idx.resize(5);
            std::sort(idx.begin(), idx.end());
            random_values.push_back(eval.value(idx));
        }
        std::nth_element(random_values.begin(), random_values.begin() + 15, random_values.end());
        const double random_median = random_values[15];
        for (Strategy st : {Strategy::greedy, Strategy::ga}) {
            auto spec = make_spec(ind, st, 5, r);
            spec.ga.generations = 100;
            const double v = select(s, spec).indicator_value;
            CHECK((v == random_median || eval.better(v, random_median)));
        }
    }
}
