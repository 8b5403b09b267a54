#include <arm_neon.h>

#include <algorithm>

#include "subsel/kernels.hpp"

namespace subsel::kernels {

namespace {

constexpr std::size_t kLanes = 2;

template <bool Truncate>
void min_sq_loss_block(std::span<const double> a, const PointColumns& ref, std::span<double> running) {
    const std::size_t n = ref.size();
    const std::size_t m = ref.dim();
    const double* cols = ref.data().data();
    const float64x2_t zero = vdupq_n_f64(0.0);

    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        float64x2_t d = vdupq_n_f64(0.0);
        for (std::size_t i = 0; i < m; ++i) {
            float64x2_t t = vsubq_f64(vdupq_n_f64(a[i]), vld1q_f64(cols + i * n + j));
            if constexpr (Truncate) t = vmaxq_f64(t, zero);
            d = vaddq_f64(d, vmulq_f64(t, t));  // separate mul/add: no fused rounding
        }
        vst1q_f64(running.data() + j, vminq_f64(vld1q_f64(running.data() + j), d));
    }
    for (; j < n; ++j) {
        double d = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double t = a[i] - cols[i * n + j];
            if constexpr (Truncate) t = std::max(0.0, t);
            d = d + t * t;
        }
        running[j] = std::min(running[j], d);
    }
}

void min_sq_loss_neon(LossKind kind, std::span<const double> a, const PointColumns& ref,
                      std::span<double> running) {
    if (kind == LossKind::truncated)
        min_sq_loss_block<true>(a, ref, running);
    else
        min_sq_loss_block<false>(a, ref, running);
}

std::size_t count_dominated_neon(const PointColumns& samples, const PointSet& points) {
    const std::size_t n = samples.size();
    const std::size_t m = samples.dim();
    const double* cols = samples.data().data();
    std::size_t hits = 0;

    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        uint64x2_t covered = vdupq_n_u64(0);
        for (std::size_t p = 0; p < points.size(); ++p) {
            const auto row = points[p];
            uint64x2_t all_le = vdupq_n_u64(~0ULL);
            for (std::size_t i = 0; i < m; ++i)
                all_le = vandq_u64(all_le, vcleq_f64(vdupq_n_f64(row[i]), vld1q_f64(cols + i * n + j)));
            covered = vorrq_u64(covered, all_le);
            if ((vgetq_lane_u64(covered, 0) & vgetq_lane_u64(covered, 1)) != 0) break;
        }
        hits += (vgetq_lane_u64(covered, 0) != 0) + (vgetq_lane_u64(covered, 1) != 0);
    }
    for (; j < n; ++j) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            const auto row = points[p];
            bool hit = true;
            for (std::size_t i = 0; i < m && hit; ++i) hit = row[i] <= cols[i * n + j];
            if (hit) {
                ++hits;
                break;
            }
        }
    }
    return hits;
}

}  // namespace

const KernelTable& neon_table() {
    static const KernelTable t{&min_sq_loss_neon, &count_dominated_neon};
    return t;
}

}  // namespace subsel::kernels
