#pragma once

#include <span>
#include <vector>

#include "graspkit/geometry.hpp"

namespace graspkit {

// Parameters for scene-point sampling. A point counts as graspable when its
// graspness is strictly above the threshold. FPS seeding follows one fixed
// deterministic rule everywhere: start at the lowest index of the candidate
// subset.
struct SamplePlan {
  int count = 256;                   // M
  double graspness_threshold = 0.1;  // in [0, 1]

  void validate() const;
};

// Greedy farthest point sampling over a subset of cloud indices.
// result[0] = start; each later pick maximizes the minimum distance to the
// already-picked set, ties broken by lowest index.
// Throws ErrorKind::insufficient_points when m > |subset|.
std::vector<int> fps(const LabeledCloud& cloud, std::span<const int> subset,
                     int m, int start);

// Per-object balanced sampling in the graspable space. Objects are the
// distinct labels >= 0; each gets a quota of floor(M/idx) plus one of the
// M mod idx remainders in ascending label order. Per object, with N_g its
// graspable-point count and q its quota:
//   N_g = 0       -> quota filled by FPS over the object's points
//   0 < N_g < q   -> all graspable points, remainder by FPS over the
//                    object's non-graspable points
//   N_g >= q      -> FPS over the object's graspable points
// Objects smaller than their quota contribute everything they have and the
// shortfall is redistributed round-robin (ascending label) to objects with
// spare points. Table points (label -1) are never sampled.
// Throws ErrorKind::no_objects when the cloud has no object points.
std::vector<int> balanced_sample(const LabeledCloud& cloud,
                                 const SamplePlan& plan);

// Training-mode sampling: FPS over the scene-wide graspable set. When the
// graspable set is smaller than M it is taken whole and the remainder comes
// from FPS over the non-graspable points.
// Throws ErrorKind::empty_graspable when no point is graspable.
std::vector<int> training_sample(const LabeledCloud& cloud,
                                 const SamplePlan& plan);

}  // namespace graspkit
