#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace subsel {

/// A point in objective space, minimization convention. At least two finite components.
class ObjectivePoint {
public:
    ObjectivePoint() = default;
    explicit ObjectivePoint(std::vector<double> values);
    ObjectivePoint(std::initializer_list<double> values);

    std::size_t dim() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;

private:
    std::vector<double> values_;
};

/// HV bounding point. Kept distinct from ObjectivePoint so the two cannot be swapped silently.
class ReferencePoint {
public:
    ReferencePoint() = default;
    explicit ReferencePoint(std::vector<double> values);
    ReferencePoint(std::initializer_list<double> values);

    std::size_t dim() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const ReferencePoint&, const ReferencePoint&) = default;

private:
    std::vector<double> values_;
};

/// Ordered, row-major collection of points sharing one dimension.
/// Indices are identities: SubsetMask bit i refers to row i.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim);
    PointSet(std::initializer_list<std::initializer_list<double>> rows);

    static PointSet from_rows(const std::vector<std::vector<double>>& rows);

    void push_back(std::span<const double> point);
    void push_back(const ObjectivePoint& point) { push_back(point.values()); }
    void reserve(std::size_t n) { data_.reserve(n * dim_); }

    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return data_.empty(); }

    std::span<const double> operator[](std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    ObjectivePoint point(std::size_t i) const;
    std::span<const double> data() const noexcept { return data_; }

    /// Rows at the given indices, in the given order.
    PointSet subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// Fixed-cardinality subset of a PointSet, stored as one byte per candidate.
///
/// Ordering is lexicographic on the ascending index lists, so {0,1,2} < {0,1,3} < {0,2,3}.
/// Every tie-break in selection uses this order.
class SubsetMask {
public:
    SubsetMask() = default;
    explicit SubsetMask(std::vector<std::uint8_t> bits);

    static SubsetMask from_indices(std::size_t n, std::span<const std::size_t> indices);
    static SubsetMask full(std::size_t n);

    std::size_t size() const noexcept { return bits_.size(); }
    std::size_t count() const noexcept { return k_; }
    bool test(std::size_t i) const { return bits_[i] != 0; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::vector<std::size_t> indices() const;

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    friend bool operator<(const SubsetMask& a, const SubsetMask& b) { return mask_less(a.bits_, b.bits_); }

    /// Index-list lexicographic order on raw bit vectors of equal popcount.
    static bool mask_less(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

private:
    std::vector<std::uint8_t> bits_;
    std::size_t k_ = 0;
};

/// True iff a is no worse than b everywhere and strictly better somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);
inline bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) { return dominates(a.values(), b.values()); }

ObjectivePoint ideal_point(const PointSet& s);
ObjectivePoint nadir_point(const PointSet& s);

/// Maps each axis to (v - ideal) / (nadir - ideal).
PointSet normalize(const PointSet& s, const ObjectivePoint& ideal, const ObjectivePoint& nadir);
/// Inverse of normalize.
PointSet denormalize(const PointSet& s, const ObjectivePoint& ideal, const ObjectivePoint& nadir);

/// Per objective, the index of the point with the smallest value (lowest index on ties).
std::vector<std::size_t> extreme_solutions(const PointSet& s);

/// Indices of points not dominated by any other; exact duplicates keep their first copy.
std::vector<std::size_t> non_dominated_indices(const PointSet& s);
PointSet filter_non_dominated(const PointSet& s);

/// O(n^2 m) check that no point of s dominates another.
bool is_mutually_non_dominated(const PointSet& s);

}  // namespace subsel
