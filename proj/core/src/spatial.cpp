#include "graspkit/spatial.hpp"

#include <algorithm>
#include <cmath>

namespace graspkit {

namespace {
// 21 bits per axis, offset binary. Covers +/- 2^20 cells; with the default
// 5 cm cell that is a ~50 km workspace.
constexpr std::int64_t kOffset = std::int64_t(1) << 20;
}  // namespace

std::uint64_t SpatialIndex::pack(std::int64_t x, std::int64_t y,
                                 std::int64_t z) {
  std::uint64_t ux = std::uint64_t(x + kOffset) & 0x1fffff;
  std::uint64_t uy = std::uint64_t(y + kOffset) & 0x1fffff;
  std::uint64_t uz = std::uint64_t(z + kOffset) & 0x1fffff;
  return (ux << 42) | (uy << 21) | uz;
}

SpatialIndex::SpatialIndex(const LabeledCloud& cloud, double cell_size)
    : cloud_(&cloud), cell_size_(cell_size) {
  if (cloud.empty())
    throw Error(ErrorKind::empty_cloud, "cannot index an empty cloud");
  if (!(cell_size > 0.0))
    throw Error(ErrorKind::precondition, "cell_size must be positive");

  const std::size_t n = cloud.size();
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3& p = cloud.points[i];
    std::int64_t cx = cell_coord(p.x), cy = cell_coord(p.y),
                 cz = cell_coord(p.z);
    if (std::abs(cx) >= kOffset || std::abs(cy) >= kOffset ||
        std::abs(cz) >= kOffset)
      throw Error(ErrorKind::precondition, "point outside indexable range");
    entries[i] = {pack(cx, cy, cz), std::uint32_t(i)};
  }
  std::sort(entries.begin(), entries.end());

  point_ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    point_ids_[i] = entries[i].second;
    if (i == 0 || entries[i].first != entries[i - 1].first) {
      cell_keys_.push_back(entries[i].first);
      cell_starts_.push_back(std::uint32_t(i));
    }
  }
  cell_starts_.push_back(std::uint32_t(n));
}

std::pair<std::uint32_t, std::uint32_t> SpatialIndex::cell_range(
    std::uint64_t key) const {
  auto it = std::lower_bound(cell_keys_.begin(), cell_keys_.end(), key);
  if (it == cell_keys_.end() || *it != key) return {0, 0};
  std::size_t slot = std::size_t(it - cell_keys_.begin());
  return {cell_starts_[slot], cell_starts_[slot + 1]};
}

void SpatialIndex::gather_ball_unsorted(const Point3& center, double r,
                                        std::vector<int>& out) const {
  out.clear();
  const double r2 = r * r;
  const auto& pts = cloud_->points;
  for_candidates_in_aabb(center - Vec3{r, r, r}, center + Vec3{r, r, r},
                         [&](int i) {
                           if ((pts[i] - center).squared_norm() <= r2)
                             out.push_back(i);
                         });
}

void SpatialIndex::ball_query(const Point3& center, double r,
                              std::vector<int>& out) const {
  gather_ball_unsorted(center, r, out);
  std::sort(out.begin(), out.end());
}

std::vector<int> SpatialIndex::ball_query(const Point3& center,
                                          double r) const {
  std::vector<int> out;
  ball_query(center, r, out);
  return out;
}

void SpatialIndex::cylinder_query(const Point3& center, const UnitVec3& axis,
                                  double r, double h_lo, double h_hi,
                                  std::vector<int>& out) const {
  out.clear();
  if (!(h_lo < h_hi))
    throw Error(ErrorKind::precondition, "cylinder requires h_lo < h_hi");

  // AABB of the capped cylinder, padded by r on every axis.
  Point3 a = center + axis * h_lo;
  Point3 b = center + axis * h_hi;
  Point3 lo{std::min(a.x, b.x) - r, std::min(a.y, b.y) - r,
            std::min(a.z, b.z) - r};
  Point3 hi{std::max(a.x, b.x) + r, std::max(a.y, b.y) + r,
            std::max(a.z, b.z) + r};

  const double r2 = r * r;
  const auto& pts = cloud_->points;
  for_candidates_in_aabb(lo, hi, [&](int i) {
    Vec3 d = pts[i] - center;
    double along = d.dot(axis);
    if (along < h_lo || along > h_hi) return;
    if ((d - axis * along).squared_norm() <= r2) out.push_back(i);
  });
  std::sort(out.begin(), out.end());
}

std::vector<int> SpatialIndex::cylinder_query(const Point3& center,
                                              const UnitVec3& axis, double r,
                                              double h_lo, double h_hi) const {
  std::vector<int> out;
  cylinder_query(center, axis, r, h_lo, h_hi, out);
  return out;
}

}  // namespace graspkit
