// Copyright 2026 The Curtain Planner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CURTAIN__BELIEF_HPP_
#define CURTAIN__BELIEF_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"
#include "curtain/simulator.hpp"
#include "curtain/uncertainty.hpp"

namespace curtain
{

// Factorized occupancy belief over the anchor grid: one independent
// Bernoulli per cell, standing in for the detector's per-anchor confidence.
struct OccupancyBelief
{
  GridGeometry geometry;
  std::vector<double> p;
  double prior_p{0.3};
};

// Cells a sensing action resolved. Both lists are sorted and unique, and
// hit_cells is a subset of covered_cells.
struct SensingReport
{
  std::vector<std::size_t> covered_cells;
  std::vector<std::size_t> hit_cells;

  void normalize()
  {
    const auto tidy = [](std::vector<std::size_t> & v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      };
    tidy(hit_cells);
    covered_cells.insert(covered_cells.end(), hit_cells.begin(), hit_cells.end());
    tidy(covered_cells);
  }

  bool is_hit(std::size_t cell) const
  {
    return std::binary_search(hit_cells.begin(), hit_cells.end(), cell);
  }
};

inline OccupancyBelief init_belief(const GridGeometry & geometry, double prior_p)
{
  geometry.validate();
  if (!(prior_p > 0.0 && prior_p < 1.0)) {
    throw ArgumentError("prior must lie strictly between 0 and 1");
  }
  return {geometry, std::vector<double>(geometry.size(), prior_p), prior_p};
}

namespace detail
{

inline void check_report(const OccupancyBelief & belief, const SensingReport & report)
{
  for (const std::size_t c : report.covered_cells) {
    if (c >= belief.p.size()) {
      throw ArgumentError("sensing report references a cell outside the grid");
    }
  }
  if (!std::includes(
      report.covered_cells.begin(), report.covered_cells.end(),
      report.hit_cells.begin(), report.hit_cells.end()))
  {
    throw ArgumentError("hit cells must be a subset of covered cells");
  }
}

}  // namespace detail

// Sensing resolves every covered cell completely and leaves the rest alone.
inline OccupancyBelief ideal_update(OccupancyBelief belief, const SensingReport & report)
{
  detail::check_report(belief, report);
  for (const std::size_t c : report.covered_cells) {
    belief.p[c] = report.is_hit(c) ? 1.0 : 0.0;
  }
  return belief;
}

// Bernoulli-likelihood Bayes step on the covered cells: posterior odds are
// prior odds times L = hit_likelihood / miss_likelihood on a hit and 1/L on
// a miss.
inline OccupancyBelief noisy_update(
  OccupancyBelief belief, const SensingReport & report, double hit_likelihood, double miss_likelihood)
{
  if (!(hit_likelihood > 0.0 && hit_likelihood < 1.0 && miss_likelihood > 0.0 &&
    miss_likelihood < 1.0))
  {
    throw ArgumentError("likelihoods must lie strictly between 0 and 1");
  }
  if (!(hit_likelihood > miss_likelihood)) {
    throw ArgumentError("hit likelihood must exceed miss likelihood");
  }
  detail::check_report(belief, report);
  const double ratio = hit_likelihood / miss_likelihood;
  for (const std::size_t c : report.covered_cells) {
    const double r = report.is_hit(c) ? ratio : 1.0 / ratio;
    const double p = belief.p[c];
    // p' = odds' / (1 + odds'); p = 0 and p = 1 are fixed points.
    belief.p[c] = (p * r) / (p * r + (1.0 - p));
  }
  return belief;
}

inline ConfidenceGrid confidence_grid(const OccupancyBelief & belief)
{
  return ConfidenceGrid(belief.geometry, belief.p);
}

inline double total_entropy(const OccupancyBelief & belief)
{
  double sum = 0.0;
  for (const double p : belief.p) {
    sum += binary_entropy(p);
  }
  return sum;
}

// Each control point covers its nearest cell; points off the grid cover
// nothing.
inline std::vector<std::size_t> covered_cells(const GridGeometry & geometry, const CurtainPlacement & placement)
{
  std::vector<std::size_t> cells;
  for (const ControlPoint & cp : placement.points) {
    if (const auto c = geometry.nearest_cell(cp.position)) {
      cells.push_back(*c);
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

// Entropy removed if the placement's cells were resolved under ideal sensing.
inline double expected_information_gain(const OccupancyBelief & belief, const CurtainPlacement & placement)
{
  SensingReport report{covered_cells(belief.geometry, placement), {}};
  const OccupancyBelief posterior = ideal_update(belief, report);
  return total_entropy(belief) - total_entropy(posterior);
}

// A curtain resolves the control-point cell of every ray; rays that returned
// a point mark their cell occupied.
inline SensingReport curtain_report(
  const GridGeometry & geometry, const CurtainPlacement & placement, const PointCloud & returns)
{
  SensingReport report;
  std::vector<char> returned(placement.size(), 0);
  for (const SensedPoint & pt : returns.points) {
    if (pt.ray_index < returned.size()) {
      returned[pt.ray_index] = 1;
    }
  }
  for (std::size_t t = 0; t < placement.size(); ++t) {
    if (const auto c = geometry.nearest_cell(placement.points[t].position)) {
      report.covered_cells.push_back(*c);
      if (returned[t]) {
        report.hit_cells.push_back(*c);
      }
    }
  }
  report.normalize();
  return report;
}

// LiDAR evidence. Each cast ray marks its first-hit cell occupied and carves
// free space: every cell whose center lies within half a cell of the segment
// from the camera to the hit (or to max_range when nothing is hit) is a miss.
inline SensingReport lidar_report(
  const GridGeometry & geometry, std::span<const Ray> rays, std::size_t stride,
  const PointCloud & returns, double max_range)
{
  if (stride < 1) {
    throw ArgumentError("lidar stride must be at least 1");
  }
  std::vector<double> end(rays.size(), max_range);
  std::vector<char> hit(rays.size(), 0);
  for (const SensedPoint & pt : returns.points) {
    if (pt.source == PointSource::kLidar && pt.ray_index < rays.size()) {
      end[pt.ray_index] = pt.range;
      hit[pt.ray_index] = 1;
    }
  }

  SensingReport report;
  const double radius = 0.5 * std::min(geometry.dx(), geometry.dz());
  const auto index_range = [](double lo_v, double hi_v, double g_min, double step, std::size_t n) {
      const double a = std::floor((lo_v - g_min) / step);
      const double b = std::floor((hi_v - g_min) / step);
      return std::pair<std::size_t, std::size_t>(
        static_cast<std::size_t>(std::clamp(a, 0.0, static_cast<double>(n - 1))),
        static_cast<std::size_t>(std::clamp(b, 0.0, static_cast<double>(n - 1))));
    };
  std::vector<std::size_t> misses;
  for (std::size_t t = 0; t < rays.size(); t += stride) {
    const Vec2 tip = rays[t].at(end[t]);
    std::optional<std::size_t> hit_cell;
    if (hit[t]) {
      hit_cell = geometry.nearest_cell(tip);
      if (hit_cell) {
        report.hit_cells.push_back(*hit_cell);
      }
    }
    const auto [ix0, ix1] = index_range(
      std::min(0.0, tip.x) - radius, std::max(0.0, tip.x) + radius, geometry.x_min, geometry.dx(), geometry.nx);
    const auto [iz0, iz1] = index_range(
      std::min(0.0, tip.z) - radius, std::max(0.0, tip.z) + radius, geometry.z_min, geometry.dz(), geometry.nz);
    for (std::size_t iz = iz0; iz <= iz1; ++iz) {
      for (std::size_t ix = ix0; ix <= ix1; ++ix) {
        const Vec2 c = geometry.center(ix, iz);
        // Distance from the cell center to the segment [0, tip].
        const double along = std::clamp(c.dot(rays[t].unit_dir), 0.0, end[t]);
        if ((c - rays[t].at(along)).norm() <= radius) {
          const std::size_t flat = geometry.index(ix, iz);
          if (flat != hit_cell) {
            misses.push_back(flat);
          }
        }
      }
    }
  }
  report.covered_cells = std::move(misses);
  report.normalize();
  return report;
}

}  // namespace curtain

#endif  // CURTAIN__BELIEF_HPP_
