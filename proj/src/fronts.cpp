#include "subsel/fronts.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/rng.hpp"

namespace subsel::fronts {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_n(std::size_t n) {
    if (n < 1) throw InvalidArgument("front sample count must be at least 1");
}

void check_wave(int j, double amplitude) {
    if (j < 1) throw InvalidArgument("wave: oscillation count must be at least 1");
    if (amplitude < 0.0) throw InvalidArgument("wave: amplitude must be non-negative");
    if (!(amplitude * 2.0 * std::numbers::pi * j < 1.0))
        throw InvalidArgument("wave: amplitude * 2 pi j must stay below 1 (monotone front)");
}

}  // namespace

std::string_view to_string(FrontKind kind) {
    switch (kind) {
        case FrontKind::dtlz2_2d: return "dtlz2-2d";
        case FrontKind::minus_dtlz2_2d: return "minus-dtlz2-2d";
        case FrontKind::minus_dtlz1_3d: return "minus-dtlz1-3d";
        case FrontKind::wave: return "wave";
        case FrontKind::distmin_5: return "distmin-5";
    }
    return "?";
}

FrontKind parse_front_kind(std::string_view text) {
    for (FrontKind k : {FrontKind::dtlz2_2d, FrontKind::minus_dtlz2_2d, FrontKind::minus_dtlz1_3d, FrontKind::wave,
                        FrontKind::distmin_5})
        if (to_string(k) == text) return k;
    throw InvalidArgument("unknown front '" + std::string(text) +
                          "' (expected dtlz2-2d, minus-dtlz2-2d, minus-dtlz1-3d, wave or distmin-5)");
}

std::array<double, 2> dtlz2_point(double theta) { return {std::cos(theta), std::sin(theta)}; }

PointSet gen_dtlz2_2d(std::size_t n, std::uint64_t seed) {
    check_n(n);
    Rng rng(seed);
    PointSet out(2);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(dtlz2_point(rng.uniform(0.0, kHalfPi)));
    return out;
}

std::array<double, 2> minus_dtlz2_point(double theta) { return {1.0 - std::cos(theta), 1.0 - std::sin(theta)}; }

PointSet gen_minus_dtlz2_2d(std::size_t n, std::uint64_t seed) {
    check_n(n);
    Rng rng(seed);
    PointSet out(2);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(minus_dtlz2_point(rng.uniform(0.0, kHalfPi)));
    return out;
}

PointSet gen_minus_dtlz1_3d(std::size_t n, std::uint64_t seed) {
    check_n(n);
    Rng rng(seed);
    PointSet out(3);
    out.reserve(n);
    while (out.size() < n) {
        // Uniform on the simplex f1 + f2 + f3 = 2, f_i >= 0, via reflected unit-square draws.
        double u = rng.unit();
        double v = rng.unit();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        const double f1 = 2.0 * u;
        const double f2 = 2.0 * v;
        const double f3 = 2.0 - f1 - f2;
        if (f1 > 1.0 || f2 > 1.0 || f3 > 1.0) continue;
        out.push_back(std::array{f1, f2, f3});
    }
    return out;
}

std::array<double, 2> wave_point(double t, int j, double amplitude) {
    return {t, 1.0 - t + amplitude * std::sin(2.0 * std::numbers::pi * j * t)};
}

PointSet gen_wave(int j, double amplitude, std::size_t n, std::uint64_t seed) {
    check_n(n);
    check_wave(j, amplitude);
    Rng rng(seed);
    PointSet out(2);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(wave_point(rng.unit(), j, amplitude));
    return out;
}

std::vector<Interval> wave_knee_intervals(int j) {
    if (j < 1) throw InvalidArgument("wave: oscillation count must be at least 1");
    std::vector<Interval> out;
    const double period = 1.0 / j;
    for (int p = 0; p < j; ++p) out.push_back({(p + 0.5) * period, (p + 1.0) * period});
    return out;
}

const std::array<std::array<double, 2>, 5>& distmin_anchors() {
    static const std::array<std::array<double, 2>, 5> anchors{{
        {0.0, 1.0},
        {0.95, 0.31},
        {0.59, -0.81},
        {-0.59, -0.81},
        {-0.95, 0.31},
    }};
    return anchors;
}

DecisionSample distmin_evaluate(std::array<double, 2> x) {
    DecisionSample out;
    out.x = x;
    const auto& a = distmin_anchors();
    for (std::size_t i = 0; i < a.size(); ++i) out.objectives[i] = std::hypot(x[0] - a[i][0], x[1] - a[i][1]);
    return out;
}

bool inside_pentagon(std::array<double, 2> x) {
    // Anchors run clockwise; inside means on the right of (or on) every edge.
    const auto& a = distmin_anchors();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& p = a[i];
        const auto& q = a[(i + 1) % a.size()];
        const double cross = (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0]);
        if (cross > 1e-12) return false;
    }
    return true;
}

DistMinSample gen_distmin_5(std::size_t n, std::uint64_t seed) {
    check_n(n);
    const auto& a = distmin_anchors();
    std::array<double, 2> c{0.0, 0.0};
    for (const auto& v : a) {
        c[0] += v[0] / 5.0;
        c[1] += v[1] / 5.0;
    }
    std::array<double, 5> cumulative{};
    double total = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& p = a[i];
        const auto& q = a[(i + 1) % 5];
        total += 0.5 * std::abs((p[0] - c[0]) * (q[1] - c[1]) - (q[0] - c[0]) * (p[1] - c[1]));
        cumulative[i] = total;
    }

    Rng rng(seed);
    DistMinSample out{PointSet(5), {}};
    out.decisions.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        const double pick = rng.unit() * total;
        std::size_t tri = 0;
        while (tri < 4 && pick >= cumulative[tri]) ++tri;
        const auto& p = a[tri];
        const auto& q = a[(tri + 1) % 5];
        double u = rng.unit();
        double v = rng.unit();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        const std::array<double, 2> x{c[0] + u * (p[0] - c[0]) + v * (q[0] - c[0]),
                                      c[1] + u * (p[1] - c[1]) + v * (q[1] - c[1])};
        auto sample = distmin_evaluate(x);
        out.points.push_back(sample.objectives);
        out.decisions.push_back(sample);
    }
    return out;
}

GeneratedFront generate(const FrontSpec& spec) {
    switch (spec.kind) {
        case FrontKind::dtlz2_2d:
            return {gen_dtlz2_2d(spec.n, spec.seed), {0.0, 0.0}, {1.0, 1.0}, {}};
        case FrontKind::minus_dtlz2_2d:
            return {gen_minus_dtlz2_2d(spec.n, spec.seed), {0.0, 0.0}, {1.0, 1.0}, {}};
        case FrontKind::minus_dtlz1_3d:
            return {gen_minus_dtlz1_3d(spec.n, spec.seed), {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, {}};
        case FrontKind::wave:
            // f2 decreases monotonically from 1 (t = 0) to 0 (t = 1).
            return {gen_wave(spec.wave_j, spec.wave_amplitude, spec.n, spec.seed), {0.0, 0.0}, {1.0, 1.0}, {}};
        case FrontKind::distmin_5: {
            auto sample = gen_distmin_5(spec.n, spec.seed);
            // Each distance is zero at its own anchor and largest at the farthest vertex.
            std::vector<double> nadir(5, 0.0);
            for (std::size_t i = 0; i < 5; ++i)
                for (const auto& v : distmin_anchors()) nadir[i] = std::max(nadir[i], distmin_evaluate(v).objectives[i]);
            return {std::move(sample.points), ObjectivePoint(std::vector<double>(5, 0.0)),
                    ObjectivePoint(std::move(nadir)), std::move(sample.decisions)};
        }
    }
    throw InvalidArgument("unknown front kind");
}

}  // namespace subsel::fronts
