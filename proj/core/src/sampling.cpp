#include "graspkit/sampling.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace graspkit {

void SamplePlan::validate() const {
  if (count < 1)
    throw Error(ErrorKind::precondition, "sample count must be >= 1");
  if (!(graspness_threshold >= 0.0 && graspness_threshold <= 1.0))
    throw Error(ErrorKind::precondition,
                "graspness threshold must be in [0, 1]");
}

std::vector<int> fps(const LabeledCloud& cloud, std::span<const int> subset,
                     int m, int start) {
  if (m < 1)
    throw Error(ErrorKind::precondition, "fps requires m >= 1");
  if (std::size_t(m) > subset.size())
    throw Error(ErrorKind::insufficient_points,
                "fps: m=" + std::to_string(m) + " exceeds subset size " +
                    std::to_string(subset.size()));
  std::size_t start_slot = subset.size();
  for (std::size_t i = 0; i < subset.size(); ++i)
    if (subset[i] == start) {
      start_slot = i;
      break;
    }
  if (start_slot == subset.size())
    throw Error(ErrorKind::precondition, "fps start index not in subset");

  const auto& pts = cloud.points;
  std::vector<double> min_d2(subset.size(),
                             std::numeric_limits<double>::infinity());
  std::vector<char> taken(subset.size(), 0);
  std::vector<int> picked;
  picked.reserve(std::size_t(m));

  std::size_t last = start_slot;
  picked.push_back(subset[last]);
  taken[last] = 1;

  for (int k = 1; k < m; ++k) {
    const Point3& last_p = pts[subset[last]];
    // Update min distances against the newest pick, then take the argmax
    // over the remaining candidates; ties go to the lowest cloud index.
    double best = -1.0;
    int best_index = 0;
    std::size_t best_slot = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      double d2 = (pts[subset[i]] - last_p).squared_norm();
      if (d2 < min_d2[i]) min_d2[i] = d2;
      if (taken[i]) continue;
      if (min_d2[i] > best || (min_d2[i] == best && subset[i] < best_index)) {
        best = min_d2[i];
        best_index = subset[i];
        best_slot = i;
      }
    }
    last = best_slot;
    picked.push_back(subset[last]);
    taken[last] = 1;
  }
  return picked;
}

namespace {

std::vector<int> fps_lowest_start(const LabeledCloud& cloud,
                                  const std::vector<int>& subset, int m) {
  return fps(cloud, subset, m, subset.front());
}

}  // namespace

std::vector<int> balanced_sample(const LabeledCloud& cloud,
                                 const SamplePlan& plan) {
  plan.validate();
  if (!cloud.has_graspness())
    throw Error(ErrorKind::precondition,
                "balanced_sample requires graspness annotations");
  std::vector<int> labels = cloud.object_labels();
  if (labels.empty())
    throw Error(ErrorKind::no_objects, "no object points in cloud");

  const std::size_t idx = labels.size();
  const int M = plan.count;

  // Per-object point lists, ascending cloud index.
  std::vector<std::vector<int>> object_points(idx);
  std::vector<std::vector<int>> graspable(idx);
  std::vector<std::vector<int>> rest(idx);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    int l = cloud.labels[i];
    if (l < 0) continue;
    std::size_t j = std::size_t(
        std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    object_points[j].push_back(int(i));
    if (cloud.graspness[i] > plan.graspness_threshold)
      graspable[j].push_back(int(i));
    else
      rest[j].push_back(int(i));
  }

  // Quotas: floor(M/idx) each, remainder one extra in ascending label order,
  // capped at object size with round-robin redistribution of the shortfall.
  std::vector<int> quota(idx, M / int(idx));
  for (std::size_t j = 0; j < std::size_t(M) % idx; ++j) quota[j] += 1;
  for (std::size_t j = 0; j < idx; ++j)
    quota[j] = std::min(quota[j], int(object_points[j].size()));

  int assigned = 0;
  for (int q : quota) assigned += q;
  int leftover = M - assigned;
  while (leftover > 0) {
    bool placed = false;
    for (std::size_t j = 0; j < idx && leftover > 0; ++j) {
      if (quota[j] < int(object_points[j].size())) {
        quota[j] += 1;
        --leftover;
        placed = true;
      }
    }
    if (!placed) break;  // scene smaller than M; take everything there is
  }

  std::vector<int> out;
  out.reserve(std::size_t(M));
  for (std::size_t j = 0; j < idx; ++j) {
    int q = quota[j];
    if (q == 0) continue;
    int n_g = int(graspable[j].size());
    if (n_g == 0) {
      auto picks = fps_lowest_start(cloud, object_points[j], q);
      out.insert(out.end(), picks.begin(), picks.end());
    } else if (n_g < q) {
      out.insert(out.end(), graspable[j].begin(), graspable[j].end());
      auto picks = fps_lowest_start(cloud, rest[j], q - n_g);
      out.insert(out.end(), picks.begin(), picks.end());
    } else {
      auto picks = fps_lowest_start(cloud, graspable[j], q);
      out.insert(out.end(), picks.begin(), picks.end());
    }
  }
  return out;
}

std::vector<int> training_sample(const LabeledCloud& cloud,
                                 const SamplePlan& plan) {
  plan.validate();
  if (!cloud.has_graspness())
    throw Error(ErrorKind::precondition,
                "training_sample requires graspness annotations");

  std::vector<int> graspable, rest;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (cloud.graspness[i] > plan.graspness_threshold)
      graspable.push_back(int(i));
    else
      rest.push_back(int(i));
  }
  if (graspable.empty())
    throw Error(ErrorKind::empty_graspable, "no graspable points in cloud");

  const int M = plan.count;
  if (int(graspable.size()) >= M) return fps_lowest_start(cloud, graspable, M);

  // Fallback: whole graspable set plus FPS over the remaining points.
  std::vector<int> out = graspable;
  int need = std::min(M - int(graspable.size()), int(rest.size()));
  if (need > 0) {
    auto picks = fps_lowest_start(cloud, rest, need);
    out.insert(out.end(), picks.begin(), picks.end());
  }
  return out;
}

}  // namespace graspkit
