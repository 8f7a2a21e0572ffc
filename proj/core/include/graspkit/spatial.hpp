#pragma once

#include <cstdint>
#include <vector>

#include "graspkit/geometry.hpp"

namespace graspkit {

// Immutable uniform-grid index over a cloud. The grid only accelerates the
// scan: query semantics are exact, boundary inclusive, and independent of
// cell_size. Queries return ascending point indices.
class SpatialIndex {
 public:
  static constexpr double kDefaultCellSize = 0.05;

  // Throws ErrorKind::empty_cloud on an empty cloud and
  // ErrorKind::precondition on a non-positive cell size.
  explicit SpatialIndex(const LabeledCloud& cloud,
                        double cell_size = kDefaultCellSize);

  const LabeledCloud& cloud() const { return *cloud_; }
  double cell_size() const { return cell_size_; }
  std::size_t cell_count() const { return cell_keys_.size(); }

  // i in result  <=>  |points[i] - center| <= r.
  std::vector<int> ball_query(const Point3& center, double r) const;
  void ball_query(const Point3& center, double r, std::vector<int>& out) const;

  // i in result  <=>  with d = points[i] - center and a = d.axis:
  // h_lo <= a <= h_hi and |d - a*axis| <= r.
  std::vector<int> cylinder_query(const Point3& center, const UnitVec3& axis,
                                  double r, double h_lo, double h_hi) const;
  void cylinder_query(const Point3& center, const UnitVec3& axis, double r,
                      double h_lo, double h_hi, std::vector<int>& out) const;

  // Unsorted gather of every index whose point lies within r of center.
  // Iteration order is deterministic (cell order); hot paths that only do
  // order-independent reductions use this to skip the sort.
  void gather_ball_unsorted(const Point3& center, double r,
                            std::vector<int>& out) const;

  // Visits all points stored in cells overlapping the AABB [lo, hi].
  // Candidate superset; callers apply the exact predicate.
  template <typename Fn>
  void for_candidates_in_aabb(const Point3& lo, const Point3& hi,
                              Fn&& fn) const {
    std::int64_t x0 = cell_coord(lo.x), x1 = cell_coord(hi.x);
    std::int64_t y0 = cell_coord(lo.y), y1 = cell_coord(hi.y);
    std::int64_t z0 = cell_coord(lo.z), z1 = cell_coord(hi.z);
    for (std::int64_t cx = x0; cx <= x1; ++cx)
      for (std::int64_t cy = y0; cy <= y1; ++cy)
        for (std::int64_t cz = z0; cz <= z1; ++cz) {
          auto [begin, end] = cell_range(pack(cx, cy, cz));
          for (std::uint32_t k = begin; k < end; ++k) fn(point_ids_[k]);
        }
  }

 private:
  std::int64_t cell_coord(double v) const {
    return std::int64_t(std::floor(v / cell_size_));
  }
  static std::uint64_t pack(std::int64_t x, std::int64_t y, std::int64_t z);
  std::pair<std::uint32_t, std::uint32_t> cell_range(std::uint64_t key) const;

  const LabeledCloud* cloud_;
  double cell_size_;
  // CSR layout: sorted unique cell keys, per-cell [start, end) into
  // point_ids_, point indices ascending within a cell.
  std::vector<std::uint64_t> cell_keys_;
  std::vector<std::uint32_t> cell_starts_;
  std::vector<std::uint32_t> point_ids_;
};

}  // namespace graspkit
