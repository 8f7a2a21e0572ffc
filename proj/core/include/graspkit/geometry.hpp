#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "graspkit/error.hpp"

namespace graspkit {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }

  Vec3 normalized() const {
    double n = norm();
    if (n == 0.0)
      throw Error(ErrorKind::precondition, "cannot normalize zero vector");
    return {x / n, y / n, z / n};
  }

  bool operator==(const Vec3& o) const = default;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Grasp coordinates (X, Y, Z).
using Point3 = Vec3;
// Unit-norm direction, e.g. the approach vector V. The norm invariant is
// checked at module boundaries rather than by the type itself.
using UnitVec3 = Vec3;

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

inline bool is_unit(const Vec3& v, double tol = 1e-9) {
  return std::fabs(v.norm() - 1.0) <= tol;
}

// 3x3 rotation, row-major.
struct Rotation3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Rotation3 identity() { return {}; }

  static Rotation3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Rotation3 r;
    r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
    return r;
  }

  static Rotation3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Rotation3 r;
    r.m = {r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z};
    return r;
  }

  // Rodrigues formula; axis must be unit.
  static Rotation3 axis_angle(const UnitVec3& axis, double angle);

  // Intrinsic rotations about world axes.
  static Rotation3 rot_x(double a) {
    double c = std::cos(a), s = std::sin(a);
    Rotation3 r;
    r.m = {1, 0, 0, 0, c, -s, 0, s, c};
    return r;
  }
  static Rotation3 rot_y(double a) {
    double c = std::cos(a), s = std::sin(a);
    Rotation3 r;
    r.m = {c, 0, s, 0, 1, 0, -s, 0, c};
    return r;
  }
  static Rotation3 rot_z(double a) {
    double c = std::cos(a), s = std::sin(a);
    Rotation3 r;
    r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
    return r;
  }

  Vec3 col(int j) const { return {m[j], m[3 + j], m[6 + j]}; }
  Vec3 row(int i) const { return {m[3 * i], m[3 * i + 1], m[3 * i + 2]}; }

  Vec3 apply(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  // R^T v, the inverse rotation.
  Vec3 apply_transposed(const Vec3& v) const {
    return {m[0] * v.x + m[3] * v.y + m[6] * v.z,
            m[1] * v.x + m[4] * v.y + m[7] * v.z,
            m[2] * v.x + m[5] * v.y + m[8] * v.z};
  }

  Rotation3 compose(const Rotation3& o) const {
    Rotation3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        r.m[3 * i + j] = m[3 * i] * o.m[j] + m[3 * i + 1] * o.m[3 + j] +
                         m[3 * i + 2] * o.m[6 + j];
      }
    return r;
  }

  Rotation3 transposed() const {
    return from_rows(col(0), col(1), col(2));
  }

  double trace() const { return m[0] + m[4] + m[8]; }

  // Orthonormal within tol and determinant +1 within tol.
  bool is_rotation(double tol = 1e-9) const;

  bool operator==(const Rotation3& o) const = default;
};

// Geodesic angle between two rotations, in [0, pi].
double geodesic_angle(const Rotation3& a, const Rotation3& b);

// 6-DoF grasp: rotation column 0 is the approach axis V, column 1 the
// closing axis, column 2 the finger-height axis (gripper coordinate system).
struct GraspPose {
  Point3 center;
  Rotation3 rotation;
  double width = 0.0;
  double depth = 0.0;
  double score = 0.0;

  UnitVec3 approach_axis() const { return rotation.col(0); }
  UnitVec3 closing_axis() const { return rotation.col(1); }
  UnitVec3 height_axis() const { return rotation.col(2); }
};

// Parallel-jaw gripper geometry. Depths are the discrete insertion depths
// enumerated per candidate.
struct GripperModel {
  double max_width = 0.10;
  double finger_length = 0.06;
  double finger_thickness = 0.01;
  double finger_height = 0.02;
  double base_depth = 0.02;
  std::vector<double> depth_set{0.01, 0.02, 0.03, 0.04};

  double max_depth() const { return depth_set.back(); }

  // Throws ErrorKind::precondition on violation.
  void validate() const;

  bool operator==(const GripperModel& o) const = default;
};

// Scene representation consumed by every module: parallel arrays of points,
// outward unit normals, object labels (-1 = table/background) and an
// optional per-point graspness value in [0, 1].
struct LabeledCloud {
  std::vector<Point3> points;
  std::vector<UnitVec3> normals;
  std::vector<int> labels;
  std::vector<double> graspness;  // empty when absent

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool has_graspness() const { return !graspness.empty(); }

  // Distinct labels >= 0, ascending.
  std::vector<int> object_labels() const;

  void validate() const;
};

// Frame changes between world and the gripper frame of a pose.
inline Point3 to_local(const GraspPose& pose, const Point3& p) {
  return pose.rotation.apply_transposed(p - pose.center);
}

inline Point3 to_world(const GraspPose& pose, const Point3& p) {
  return pose.rotation.apply(p) + pose.center;
}

// Full grasp rotation from an approach vector and the scalar in-plane angle.
// Column 1 at angle 0 is normalize(world_up x approach); if the approach is
// within 1e-6 of +/-world_up the reference falls back to world x. Increasing
// the angle rotates columns 1-2 about the approach axis.
Rotation3 in_plane_pose(const UnitVec3& approach, double angle);

}  // namespace graspkit
