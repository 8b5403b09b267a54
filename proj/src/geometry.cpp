#include "subsel/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subsel/errors.hpp"

namespace subsel {

namespace {

void check_components(std::span<const double> values, const char* what) {
    if (values.size() < 2)
        throw InvalidArgument(std::string(what) + ": at least two objectives required");
    for (double v : values)
        if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + ": non-finite component");
}

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw InvalidArgument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                              " vs " + std::to_string(b) + ")");
}

}  // namespace

ObjectivePoint::ObjectivePoint(std::vector<double> values) : values_(std::move(values)) {
    check_components(values_, "ObjectivePoint");
}

ObjectivePoint::ObjectivePoint(std::initializer_list<double> values)
    : ObjectivePoint(std::vector<double>(values)) {}

ReferencePoint::ReferencePoint(std::vector<double> values) : values_(std::move(values)) {
    check_components(values_, "ReferencePoint");
}

ReferencePoint::ReferencePoint(std::initializer_list<double> values)
    : ReferencePoint(std::vector<double>(values)) {}

PointSet::PointSet(std::size_t dim) : dim_(dim) {
    if (dim < 2) throw InvalidArgument("PointSet: at least two objectives required");
}

PointSet::PointSet(std::initializer_list<std::initializer_list<double>> rows) {
    for (const auto& row : rows) push_back(std::vector<double>(row));
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
    PointSet out;
    for (const auto& row : rows) out.push_back(row);
    return out;
}

void PointSet::push_back(std::span<const double> point) {
    check_components(point, "PointSet");
    if (dim_ == 0) dim_ = point.size();
    check_same_dim(dim_, point.size(), "PointSet");
    data_.insert(data_.end(), point.begin(), point.end());
}

ObjectivePoint PointSet::point(std::size_t i) const {
    if (i >= size()) throw InvalidArgument("PointSet: index out of range");
    auto row = (*this)[i];
    return ObjectivePoint(std::vector<double>(row.begin(), row.end()));
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
    PointSet out;
    out.dim_ = dim_;
    out.data_.reserve(indices.size() * dim_);
    for (std::size_t i : indices) {
        if (i >= size()) throw InvalidArgument("PointSet::subset: index out of range");
        auto row = (*this)[i];
        out.data_.insert(out.data_.end(), row.begin(), row.end());
    }
    return out;
}

SubsetMask::SubsetMask(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) {
        if (b > 1) throw InvalidArgument("SubsetMask: bits must be 0 or 1");
        k_ += b;
    }
    if (k_ < 1) throw InvalidArgument("SubsetMask: at least one bit must be set");
}

SubsetMask SubsetMask::from_indices(std::size_t n, std::span<const std::size_t> indices) {
    std::vector<std::uint8_t> bits(n, 0);
    for (std::size_t i : indices) {
        if (i >= n) throw InvalidArgument("SubsetMask: index out of range");
        if (bits[i]) throw InvalidArgument("SubsetMask: duplicate index");
        bits[i] = 1;
    }
    return SubsetMask(std::move(bits));
}

SubsetMask SubsetMask::full(std::size_t n) { return SubsetMask(std::vector<std::uint8_t>(n, 1)); }

std::vector<std::size_t> SubsetMask::indices() const {
    std::vector<std::size_t> out;
    out.reserve(k_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(i);
    return out;
}

bool SubsetMask::mask_less(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i];  // the mask holding the smaller index comes first
    return a.size() < b.size();
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    check_same_dim(a.size(), b.size(), "dominates");
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

ObjectivePoint ideal_point(const PointSet& s) {
    if (s.empty()) throw InvalidArgument("ideal_point: empty set");
    std::vector<double> out(s[0].begin(), s[0].end());
    for (std::size_t p = 1; p < s.size(); ++p)
        for (std::size_t i = 0; i < s.dim(); ++i) out[i] = std::min(out[i], s[p][i]);
    return ObjectivePoint(std::move(out));
}

ObjectivePoint nadir_point(const PointSet& s) {
    if (s.empty()) throw InvalidArgument("nadir_point: empty set");
    std::vector<double> out(s[0].begin(), s[0].end());
    for (std::size_t p = 1; p < s.size(); ++p)
        for (std::size_t i = 0; i < s.dim(); ++i) out[i] = std::max(out[i], s[p][i]);
    return ObjectivePoint(std::move(out));
}

namespace {

void check_box(const PointSet& s, const ObjectivePoint& ideal, const ObjectivePoint& nadir) {
    check_same_dim(ideal.dim(), nadir.dim(), "normalize");
    if (!s.empty()) check_same_dim(s.dim(), ideal.dim(), "normalize");
    for (std::size_t i = 0; i < ideal.dim(); ++i)
        if (!(nadir[i] > ideal[i]))
            throw InvalidArgument("normalize: degenerate axis " + std::to_string(i) +
                                  " (nadir must exceed ideal)");
}

}  // namespace

PointSet normalize(const PointSet& s, const ObjectivePoint& ideal, const ObjectivePoint& nadir) {
    check_box(s, ideal, nadir);
    PointSet out;
    std::vector<double> row(ideal.dim());
    for (std::size_t p = 0; p < s.size(); ++p) {
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = (s[p][i] - ideal[i]) / (nadir[i] - ideal[i]);
        out.push_back(row);
    }
    return out;
}

PointSet denormalize(const PointSet& s, const ObjectivePoint& ideal, const ObjectivePoint& nadir) {
    check_box(s, ideal, nadir);
    PointSet out;
    std::vector<double> row(ideal.dim());
    for (std::size_t p = 0; p < s.size(); ++p) {
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = ideal[i] + s[p][i] * (nadir[i] - ideal[i]);
        out.push_back(row);
    }
    return out;
}

std::vector<std::size_t> extreme_solutions(const PointSet& s) {
    if (s.empty()) throw InvalidArgument("extreme_solutions: empty set");
    std::vector<std::size_t> best(s.dim(), 0);
    for (std::size_t p = 1; p < s.size(); ++p)
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (s[p][i] < s[best[i]][i]) best[i] = p;
    return best;
}

std::vector<std::size_t> non_dominated_indices(const PointSet& s) {
    std::vector<std::size_t> keep;
    for (std::size_t p = 0; p < s.size(); ++p) {
        bool drop = false;
        for (std::size_t q = 0; q < s.size() && !drop; ++q) {
            if (q == p) continue;
            if (dominates(s[q], s[p])) drop = true;
            else if (q < p && std::ranges::equal(s[q], s[p])) drop = true;
        }
        if (!drop) keep.push_back(p);
    }
    return keep;
}

PointSet filter_non_dominated(const PointSet& s) {
    const auto keep = non_dominated_indices(s);
    return s.subset(keep);
}

bool is_mutually_non_dominated(const PointSet& s) {
    for (std::size_t p = 0; p < s.size(); ++p)
        for (std::size_t q = 0; q < s.size(); ++q)
            if (p != q && dominates(s[p], s[q])) return false;
    return true;
}

}  // namespace subsel
