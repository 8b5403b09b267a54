#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "subsel/geometry.hpp"

// Data-parallel inner loops behind the indicators.
//
// Each kernel has a scalar reference and SIMD variants (AVX2 on x86-64, NEON
// on aarch64). Variants vectorize across reference points, one lane per
// point, and evaluate every lane in the same operation order as the scalar
// reference without fused multiply-add, so all variants are bit-identical.
// The active variant is chosen once at startup from CPU features; set
// SUBSEL_ISA=scalar|avx2|neon to force one.

namespace subsel::kernels {

enum class Isa { scalar, avx2, neon };

enum class LossKind {
    truncated,  ///< sum of max(0, a_i - s_i)^2 (IGD+ / expected loss)
    euclidean,  ///< sum of (a_i - s_i)^2 (IGD)
};

/// Column-major copy of a PointSet: column i holds objective i of every point.
class PointColumns {
public:
    PointColumns() = default;
    explicit PointColumns(const PointSet& s);
    /// Adopts `cols` laid out as m consecutive columns of n values.
    PointColumns(std::size_t n, std::size_t m, std::vector<double> cols);

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return m_; }
    std::span<const double> column(std::size_t i) const { return {cols_.data() + i * n_, n_}; }
    std::span<const double> data() const noexcept { return cols_; }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<double> cols_;
};

struct KernelTable {
    /// running[j] = min(running[j], squared loss of `a` against reference point j).
    void (*min_sq_loss)(LossKind kind, std::span<const double> a, const PointColumns& ref,
                        std::span<double> running);

    /// Number of samples (column-major, `samples.dim()` objectives) weakly dominated
    /// by at least one row of `points`.
    std::size_t (*count_dominated)(const PointColumns& samples, const PointSet& points);
};

const KernelTable& scalar_table();
#if defined(SUBSEL_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(SUBSEL_HAVE_NEON)
const KernelTable& neon_table();
#endif

/// True when the variant is compiled in and the running CPU supports it.
bool available(Isa isa);
const KernelTable& table(Isa isa);
std::string_view name(Isa isa);

/// The variant selected for this process.
Isa active_isa();
const KernelTable& active();

}  // namespace subsel::kernels
