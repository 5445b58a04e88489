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

// Plans one curtain over a synthetic uncertainty map with a bright band at
// 25 m and prints the resulting control points next to a frontoparallel
// baseline.

#include <cmath>
#include <cstdio>

#include "curtain/curtain.hpp"

int main()
{
  using namespace curtain;
  const SensorConfig sensor;
  const auto graph = sensor.build_graph();

  const GridGeometry grid = GridGeometry::with_resolution(-40.0, 40.0, 0.0, 70.4, 0.5);
  ConfidenceGrid confidence = ConfidenceGrid::constant(grid, 0.02);
  for (std::size_t iz = 0; iz < grid.nz; ++iz) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Vec2 c = grid.center(ix, iz);
      if (std::abs(c.norm() - 25.0 - 5.0 * std::sin(c.x / 4.0)) < 1.0) {
        confidence.values[grid.index(ix, iz)] = 0.5;
      }
    }
  }
  const EntropyMap map = entropy_map(confidence);

  const DpResult best = optimize_dp(*graph, map);
  const CurtainPlacement flat = frontoparallel_uncertainty(map, graph->lattice());
  const PlacementScore flat_score = objective(flat, map);

  std::printf("rays=%zu candidates=%zu B_avg=%.1f\n", graph->num_rays(), graph->points_per_ray(), graph->avg_degree());
  std::printf("dp:             J=%.3f bits  smoothness=%.5f rad^2\n", best.score.total_entropy, best.score.smoothness_penalty);
  std::printf("fp-uncertainty: J=%.3f bits  smoothness=%.5f rad^2\n", flat_score.total_entropy, flat_score.smoothness_penalty);
  for (std::size_t t = 0; t < best.placement.size(); t += 16) {
    const ControlPoint & cp = best.placement.points[t];
    std::printf("  ray %3zu  range %6.2f m  (x=%6.2f, z=%6.2f)  laser %7.3f deg\n", t, cp.range, cp.position.x,
      cp.position.z, rad_to_deg(cp.laser_angle));
  }
  return 0;
}
