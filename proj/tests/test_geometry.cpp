#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "subsel/errors.hpp"
#include "subsel/geometry.hpp"

using namespace subsel;

TEST_CASE("dominates") {
    CHECK(dominates(ObjectivePoint{1, 2}, ObjectivePoint{2, 3}));
    CHECK_FALSE(dominates(ObjectivePoint{1, 2}, ObjectivePoint{1, 2}));
    CHECK_FALSE(dominates(ObjectivePoint{1, 3}, ObjectivePoint{2, 2}));
    CHECK_FALSE(dominates(ObjectivePoint{2, 2}, ObjectivePoint{1, 3}));
    CHECK(dominates(ObjectivePoint{1, 2}, ObjectivePoint{1, 3}));
    CHECK_THROWS_AS(dominates(ObjectivePoint{1, 2}, ObjectivePoint{1, 2, 3}), InvalidArgument);
}

TEST_CASE("dominance is irreflexive, asymmetric and transitive") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        // Coarse grid values so that dominance and ties actually occur.
        std::uniform_int_distribution<int> u(0, 3);
        auto pick = [&] { return ObjectivePoint{double(u(gen)), double(u(gen)), double(u(gen))}; };
        auto a = pick(), b = pick(), c = pick();
        CHECK_FALSE(dominates(a, a));
        CHECK_FALSE((dominates(a, b) && dominates(b, a)));
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
    }
}

TEST_CASE("points reject bad input") {
    CHECK_THROWS_AS(ObjectivePoint({1.0}), InvalidArgument);
    CHECK_THROWS_AS(ObjectivePoint({1.0, std::nan("")}), InvalidArgument);
    CHECK_THROWS_AS(ObjectivePoint({1.0, INFINITY}), InvalidArgument);
    PointSet s{{0, 1}};
    CHECK_THROWS_AS(s.push_back(std::vector<double>{1, 2, 3}), InvalidArgument);
}

TEST_CASE("ideal and nadir") {
    PointSet s{{0, 1}, {1, 0}};
    CHECK(ideal_point(s) == ObjectivePoint{0, 0});
    CHECK(nadir_point(s) == ObjectivePoint{1, 1});
    PointSet single{{2, 3, 4}};
    CHECK(ideal_point(single) == ObjectivePoint{2, 3, 4});
    CHECK(nadir_point(single) == ObjectivePoint{2, 3, 4});
    CHECK_THROWS_AS(ideal_point(PointSet{}), InvalidArgument);
    CHECK_THROWS_AS(nadir_point(PointSet{}), InvalidArgument);

    std::mt19937_64 gen(3);
    auto r = oracle::random_points(gen, 40, 4);
    auto lo = ideal_point(r), hi = nadir_point(r);
    for (std::size_t p = 0; p < r.size(); ++p)
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(lo[i] <= r[p][i]);
            CHECK(r[p][i] <= hi[i]);
        }
}

TEST_CASE("normalize") {
    PointSet s{{0, 1}, {1, 0}};
    CHECK(normalize(s, {0, 0}, {1, 1}) == s);
    CHECK(normalize(PointSet{{2, 4}}, {2, 2}, {4, 4}) == PointSet{{0, 1}});
    CHECK_THROWS_AS(normalize(PointSet{{1, 1}}, {1, 3}, {1, 5}), InvalidArgument);

    std::mt19937_64 gen(11);
    auto r = oracle::random_points(gen, 50, 3);
    ObjectivePoint lo{-2.0, 0.5, 3.0}, hi{5.0, 0.75, 10.0};
    auto back = denormalize(normalize(r, lo, hi), lo, hi);
    for (std::size_t p = 0; p < r.size(); ++p)
        for (std::size_t i = 0; i < 3; ++i) CHECK(back[p][i] == doctest::Approx(r[p][i]).epsilon(1e-12));
}

TEST_CASE("extreme solutions") {
    CHECK(extreme_solutions(PointSet{{0, 1}, {1, 0}, {0.5, 0.5}}) == std::vector<std::size_t>{0, 1});
    CHECK(extreme_solutions(PointSet{{3, 4, 5}}) == std::vector<std::size_t>{0, 0, 0});
    CHECK(extreme_solutions(PointSet{{0, 1}, {0, 2}})[0] == 0);
    CHECK_THROWS_AS(extreme_solutions(PointSet{}), InvalidArgument);

    std::mt19937_64 gen(5);
    auto r = oracle::random_points(gen, 60, 5);
    auto ext = extreme_solutions(r);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t p = 0; p < r.size(); ++p) CHECK(r[ext[i]][i] <= r[p][i]);
}

TEST_CASE("filter_non_dominated") {
    CHECK(filter_non_dominated(PointSet{{0, 1}, {1, 0}, {1, 1}}) == PointSet{{0, 1}, {1, 0}});
    PointSet nd{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    CHECK(filter_non_dominated(nd) == nd);
    CHECK(filter_non_dominated(PointSet{{0, 0}, {0, 0}}) == PointSet{{0, 0}});
    CHECK(non_dominated_indices(PointSet{{1, 1}, {0, 2}, {1, 1}}) == std::vector<std::size_t>{0, 1});

    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto r = oracle::random_points(gen, 80, 3);
        auto f = filter_non_dominated(r);
        CHECK(is_mutually_non_dominated(f));
        CHECK(filter_non_dominated(f) == f);
    }
}

TEST_CASE("subset mask") {
    auto m = SubsetMask::from_indices(5, std::vector<std::size_t>{3, 1});
    CHECK(m.count() == 2);
    CHECK(m.indices() == std::vector<std::size_t>{1, 3});
    CHECK_THROWS_AS(SubsetMask(std::vector<std::uint8_t>{0, 0}), InvalidArgument);
    CHECK_THROWS_AS(SubsetMask::from_indices(3, std::vector<std::size_t>{3}), InvalidArgument);

    // Index-list order: {0,1,2} < {0,1,3} < {0,2,3} < {1,2,3}.
    auto a = SubsetMask::from_indices(4, std::vector<std::size_t>{0, 1, 2});
    auto b = SubsetMask::from_indices(4, std::vector<std::size_t>{0, 1, 3});
    auto c = SubsetMask::from_indices(4, std::vector<std::size_t>{0, 2, 3});
    auto d = SubsetMask::from_indices(4, std::vector<std::size_t>{1, 2, 3});
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK_FALSE(b < a);
    CHECK_FALSE(a < a);
}
