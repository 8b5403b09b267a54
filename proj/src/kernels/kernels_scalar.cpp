#include <algorithm>

#include "subsel/errors.hpp"
#include "subsel/kernels.hpp"

namespace subsel::kernels {

PointColumns::PointColumns(const PointSet& s) : n_(s.size()), m_(s.dim()), cols_(n_ * m_) {
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < m_; ++i) cols_[i * n_ + j] = s[j][i];
}

PointColumns::PointColumns(std::size_t n, std::size_t m, std::vector<double> cols)
    : n_(n), m_(m), cols_(std::move(cols)) {
    if (cols_.size() != n_ * m_) throw InvalidArgument("PointColumns: size mismatch");
}

namespace {

void min_sq_loss_scalar(LossKind kind, std::span<const double> a, const PointColumns& ref,
                        std::span<double> running) {
    const std::size_t n = ref.size();
    const std::size_t m = ref.dim();
    const double* cols = ref.data().data();
    if (kind == LossKind::truncated) {
        for (std::size_t j = 0; j < n; ++j) {
            double d = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double t = std::max(0.0, a[i] - cols[i * n + j]);
                d = d + t * t;
            }
            running[j] = std::min(running[j], d);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            double d = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double t = a[i] - cols[i * n + j];
                d = d + t * t;
            }
            running[j] = std::min(running[j], d);
        }
    }
}

std::size_t count_dominated_scalar(const PointColumns& samples, const PointSet& points) {
    const std::size_t n = samples.size();
    const std::size_t m = samples.dim();
    const double* cols = samples.data().data();
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
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

const KernelTable& scalar_table() {
    static const KernelTable t{&min_sq_loss_scalar, &count_dominated_scalar};
    return t;
}

}  // namespace subsel::kernels
