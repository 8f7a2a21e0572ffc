#include "graspkit/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace graspkit {

Rotation3 Rotation3::axis_angle(const UnitVec3& axis, double angle) {
  double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  double x = axis.x, y = axis.y, z = axis.z;
  Rotation3 r;
  r.m = {t * x * x + c,     t * x * y - s * z, t * x * z + s * y,
         t * x * y + s * z, t * y * y + c,     t * y * z - s * x,
         t * x * z - s * y, t * y * z + s * x, t * z * z + c};
  return r;
}

bool Rotation3::is_rotation(double tol) const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double d = col(i).dot(col(j));
      double expect = i == j ? 1.0 : 0.0;
      if (std::fabs(d - expect) > tol) return false;
    }
  double det = col(0).cross(col(1)).dot(col(2));
  return std::fabs(det - 1.0) <= tol;
}

double geodesic_angle(const Rotation3& a, const Rotation3& b) {
  double tr = a.transposed().compose(b).trace();
  double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

void GripperModel::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(max_width) || !positive(finger_length) ||
      !positive(finger_thickness) || !positive(finger_height) ||
      !positive(base_depth)) {
    throw Error(ErrorKind::precondition, "gripper dimensions must be positive");
  }
  if (depth_set.empty())
    throw Error(ErrorKind::precondition, "gripper depth_set must be non-empty");
  for (std::size_t i = 0; i < depth_set.size(); ++i) {
    if (!positive(depth_set[i]))
      throw Error(ErrorKind::precondition, "gripper depths must be positive");
    if (i > 0 && depth_set[i] <= depth_set[i - 1])
      throw Error(ErrorKind::precondition,
                  "gripper depth_set must be strictly increasing");
  }
  if (depth_set.back() > finger_length)
    throw Error(ErrorKind::precondition,
                "max gripper depth exceeds finger length");
}

std::vector<int> LabeledCloud::object_labels() const {
  std::vector<int> out;
  for (int l : labels)
    if (l >= 0) out.push_back(l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void LabeledCloud::validate() const {
  if (normals.size() != points.size() || labels.size() != points.size())
    throw Error(ErrorKind::precondition,
                "cloud arrays must have equal length");
  if (has_graspness() && graspness.size() != points.size())
    throw Error(ErrorKind::precondition,
                "graspness array length mismatch");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_finite(points[i]))
      throw Error(ErrorKind::precondition, "non-finite point coordinate");
    if (!is_unit(normals[i]))
      throw Error(ErrorKind::precondition, "normal is not unit length");
  }
  for (double g : graspness)
    if (!(g >= 0.0 && g <= 1.0))
      throw Error(ErrorKind::precondition, "graspness outside [0, 1]");
}

namespace {
constexpr Vec3 kWorldUp{0.0, 0.0, 1.0};
constexpr Vec3 kWorldX{1.0, 0.0, 0.0};
}  // namespace

Rotation3 in_plane_pose(const UnitVec3& approach, double angle) {
  if (!is_unit(approach))
    throw Error(ErrorKind::precondition, "approach vector must be unit length");

  // Deterministic reference rule: world up unless the approach is (anti-)
  // parallel to it within 1e-6.
  Vec3 ref = kWorldUp;
  double d_up = (approach - kWorldUp).norm();
  double d_down = (approach + kWorldUp).norm();
  if (std::min(d_up, d_down) < 1e-6) ref = kWorldX;

  Vec3 closing0 = ref.cross(approach).normalized();
  Vec3 height0 = approach.cross(closing0);

  double c = std::cos(angle), s = std::sin(angle);
  Vec3 closing = closing0 * c + height0 * s;
  Vec3 height = closing0 * (-s) + height0 * c;
  return Rotation3::from_columns(approach, closing, height);
}

}  // namespace graspkit
