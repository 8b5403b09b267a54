#include <immintrin.h>

#include <algorithm>

#include "subsel/kernels.hpp"

namespace subsel::kernels {

namespace {

constexpr std::size_t kLanes = 4;

template <bool Truncate>
void min_sq_loss_block(std::span<const double> a, const PointColumns& ref, std::span<double> running) {
    const std::size_t n = ref.size();
    const std::size_t m = ref.dim();
    const double* cols = ref.data().data();
    const __m256d zero = _mm256_setzero_pd();

    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        __m256d d = _mm256_setzero_pd();
        for (std::size_t i = 0; i < m; ++i) {
            __m256d t = _mm256_sub_pd(_mm256_set1_pd(a[i]), _mm256_loadu_pd(cols + i * n + j));
            if constexpr (Truncate) t = _mm256_max_pd(t, zero);
            d = _mm256_add_pd(d, _mm256_mul_pd(t, t));
        }
        _mm256_storeu_pd(running.data() + j, _mm256_min_pd(_mm256_loadu_pd(running.data() + j), d));
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

void min_sq_loss_avx2(LossKind kind, std::span<const double> a, const PointColumns& ref,
                      std::span<double> running) {
    if (kind == LossKind::truncated)
        min_sq_loss_block<true>(a, ref, running);
    else
        min_sq_loss_block<false>(a, ref, running);
}

std::size_t count_dominated_avx2(const PointColumns& samples, const PointSet& points) {
    const std::size_t n = samples.size();
    const std::size_t m = samples.dim();
    const double* cols = samples.data().data();
    std::size_t hits = 0;

    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        int covered_lanes = 0;
        for (std::size_t p = 0; p < points.size() && covered_lanes != 0xF; ++p) {
            const auto row = points[p];
            __m256d all_le = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
            for (std::size_t i = 0; i < m; ++i) {
                const __m256d le = _mm256_cmp_pd(_mm256_set1_pd(row[i]), _mm256_loadu_pd(cols + i * n + j), _CMP_LE_OQ);
                all_le = _mm256_and_pd(all_le, le);
            }
            covered_lanes |= _mm256_movemask_pd(all_le);
        }
        hits += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(covered_lanes)));
    }
    for (; j < n; ++j) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            const auto row = points[p];
            bool covered = true;
            for (std::size_t i = 0; i < m && covered; ++i) covered = row[i] <= cols[i * n + j];
            if (covered) {
                ++hits;
                break;
            }
        }
    }
    return hits;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{&min_sq_loss_avx2, &count_dominated_avx2};
    return t;
}

}  // namespace subsel::kernels
