#pragma once

#include <array>

#include "graspkit/geometry.hpp"
#include "graspkit/spatial.hpp"

namespace graspkit {

struct OrientedBox {
  Point3 center;
  Rotation3 rotation;
  Vec3 half_extents;

  // Strict interior test; boundary points do not collide.
  bool contains_strict(const Point3& p) const {
    Vec3 local = rotation.apply_transposed(p - center);
    return std::fabs(local.x) < half_extents.x &&
           std::fabs(local.y) < half_extents.y &&
           std::fabs(local.z) < half_extents.z;
  }

  void aabb(Point3& lo, Point3& hi) const;
};

struct CollisionReport {
  bool colliding = false;
  int offending_count = 0;  // points strictly inside any gripper box
  int inner_count = 0;      // points in the jaw gap
  bool admissible = false;  // !colliding && inner_count >= min_inner
};

// Gripper volume in the pose frame (x = approach, y = closing, z = finger
// height). Fingers span [-base_depth, depth] axially and sit just outside
// the jaw gap of the pose's width; the base closes the back.
struct GripperRegions {
  double half_width;      // jaw inner half-gap = width / 2
  double finger_outer;    // half_width + finger_thickness
  double half_height;     // finger_height / 2
  double axial_lo;        // -base_depth
  double axial_hi;        // pose depth
  double base_lo;         // axial_lo - finger_thickness

  GripperRegions(double width, double depth, const GripperModel& g)
      : half_width(width / 2.0),
        finger_outer(width / 2.0 + g.finger_thickness),
        half_height(g.finger_height / 2.0),
        axial_lo(-g.base_depth),
        axial_hi(depth),
        base_lo(-g.base_depth - g.finger_thickness) {}

  // Jaw gap: strictly between the finger inner planes, within the axial and
  // height extents of the fingers.
  bool in_jaw(const Vec3& local) const {
    return std::fabs(local.y) < half_width &&
           std::fabs(local.z) <= half_height && local.x >= axial_lo &&
           local.x <= axial_hi;
  }

  // Strictly inside either finger or the base plate.
  bool in_gripper_body(const Vec3& local) const {
    if (std::fabs(local.z) >= half_height) return false;
    double ay = std::fabs(local.y);
    if (ay > half_width && ay < finger_outer && local.x > axial_lo &&
        local.x < axial_hi)
      return true;
    return ay < finger_outer && local.x > base_lo && local.x < axial_lo;
  }
};

// Two fingers plus back base, rigid with the pose; finger inner planes are
// width apart and the depth extent follows pose.depth.
std::array<OrientedBox, 3> gripper_boxes(const GraspPose& pose,
                                         const GripperModel& gripper);

// Collision label for a grasp: colliding iff any scene point lies strictly
// inside one of the three boxes. inner_count counts jaw-gap points; the
// grasp is admissible iff collision-free with inner_count >= min_inner.
CollisionReport check_collision(const SpatialIndex& index,
                                const GraspPose& pose,
                                const GripperModel& gripper,
                                int min_inner = 1);

}  // namespace graspkit
