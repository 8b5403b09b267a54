#include <algorithm>
#include <cmath>
#include <string>

#include "subsel/errors.hpp"
#include "subsel/indicators.hpp"
#include "subsel/kernels.hpp"
#include "subsel/rng.hpp"

namespace subsel {

namespace {

using Row = const double*;

// Total order used before every sweep: primary key `axis`, then all axes in order.
struct AxisThenLex {
    std::size_t axis;
    std::size_t m;
    bool operator()(Row a, Row b) const {
        if (a[axis] != b[axis]) return a[axis] < b[axis];
        return std::lexicographical_compare(a, a + m, b, b + m);
    }
};

bool weakly_dominates(Row a, Row b, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

double hv_2d(std::vector<Row>& pts, const double* r) {
    std::sort(pts.begin(), pts.end(), AxisThenLex{0, 2});
    double area = 0.0;
    double ceiling = r[1];
    for (Row p : pts) {
        if (p[1] < ceiling) {
            area += (r[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    return area;
}

// Hypervolume over the first m objectives of pts; every point is strictly below r.
double hv_sweep(std::vector<Row>& pts, std::size_t m, const double* r) {
    if (pts.empty()) return 0.0;
    if (m == 2) return hv_2d(pts, r);

    const std::size_t last = m - 1;
    std::sort(pts.begin(), pts.end(), AxisThenLex{last, m});

    double volume = 0.0;
    std::vector<Row> front;  // non-dominated projection of the slice, first m-1 objectives
    std::vector<Row> scratch;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Row p = pts[i];
        const bool covered = std::any_of(front.begin(), front.end(),
                                         [&](Row q) { return weakly_dominates(q, p, last); });
        if (!covered) {
            std::erase_if(front, [&](Row q) { return weakly_dominates(p, q, last); });
            front.push_back(p);
        }
        const double upper = i + 1 < pts.size() ? pts[i + 1][last] : r[last];
        const double height = upper - p[last];
        if (height > 0.0) {
            scratch = front;
            volume += hv_sweep(scratch, last, r) * height;
        }
    }
    return volume;
}

void check_dims(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

}  // namespace

double hv_point(std::span<const double> s, const ReferencePoint& r) {
    check_dims(s.size(), r.dim(), "hv_point");
    double v = 1.0;
    for (std::size_t i = 0; i < s.size(); ++i) v *= std::max(0.0, r[i] - s[i]);
    return v;
}

double hv(const PointSet& s, const ReferencePoint& r) {
    if (s.empty()) return 0.0;
    check_dims(s.dim(), r.dim(), "hv");
    const std::size_t m = s.dim();
    std::vector<Row> pts;
    pts.reserve(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
        auto row = s[p];
        bool inside = true;
        for (std::size_t i = 0; i < m && inside; ++i) inside = row[i] < r[i];
        if (inside) pts.push_back(row.data());
    }
    return hv_sweep(pts, m, r.values().data());
}

double hv_contribution(std::size_t i, const PointSet& s, const ReferencePoint& r) {
    if (i >= s.size()) throw InvalidArgument("hv_contribution: index out of range");
    std::vector<std::size_t> rest;
    rest.reserve(s.size() - 1);
    for (std::size_t p = 0; p < s.size(); ++p)
        if (p != i) rest.push_back(p);
    const double without = rest.empty() ? 0.0 : hv(s.subset(rest), r);
    return hv(s, r) - without;
}

MonteCarloEstimate hv_montecarlo_oracle(const PointSet& s, const ReferencePoint& r,
                                        const ObjectivePoint& lower, std::size_t samples,
                                        std::uint64_t seed) {
    check_dims(lower.dim(), r.dim(), "hv_montecarlo_oracle");
    if (samples == 0) throw InvalidArgument("hv_montecarlo_oracle: samples must be >= 1");
    double box = 1.0;
    for (std::size_t i = 0; i < r.dim(); ++i) {
        if (!(r[i] > lower[i])) throw InvalidArgument("hv_montecarlo_oracle: empty sampling box");
        box *= r[i] - lower[i];
    }
    if (s.empty()) return {};
    check_dims(s.dim(), r.dim(), "hv_montecarlo_oracle");
    for (std::size_t p = 0; p < s.size(); ++p)
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (s[p][i] < lower[i])
                throw InvalidArgument("hv_montecarlo_oracle: lower bound must not exceed any point");

    const std::size_t m = r.dim();
    const auto& kernel = kernels::active();
    constexpr std::size_t kChunk = 4096;
    Rng rng(seed);
    std::size_t hits = 0;
    std::vector<double> rows(kChunk * m);
    for (std::size_t done = 0; done < samples; done += kChunk) {
        const std::size_t n = std::min(kChunk, samples - done);
        // Draw order: sample by sample, objective by objective.
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) rows[j * m + i] = rng.uniform(lower[i], r[i]);
        std::vector<double> cols(n * m);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) cols[i * n + j] = rows[j * m + i];
        hits += kernel.count_dominated(kernels::PointColumns(n, m, std::move(cols)), s);
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

}  // namespace subsel
