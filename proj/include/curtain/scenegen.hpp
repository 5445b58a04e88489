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

#ifndef CURTAIN__SCENEGEN_HPP_
#define CURTAIN__SCENEGEN_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"
#include "curtain/simulator.hpp"

namespace curtain
{

struct SceneGenParams
{
  Bounds bounds;
  // Objects are placed inside this wedge of the view.
  double half_fov_deg{36.0};
  double z_near{6.0};
  double z_far{50.0};
  double car_length{4.5};
  double car_width{1.9};
  double clutter_r_min{0.4};
  double clutter_r_max{1.2};
  double clearance{0.5};
  std::size_t max_attempts{2000};
};

// Separating-axis test on convex polygons: true when some edge normal
// separates the projections by more than the clearance.
inline bool polygons_separated(const Obstacle & a, const Obstacle & b, double clearance = 0.0)
{
  const auto separated_along_edges = [clearance](const Obstacle & p, const Obstacle & q) {
      const std::size_t n = p.vertices.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = p.vertices[(i + 1) % n] - p.vertices[i];
        const double len = e.norm();
        const Vec2 axis{e.z / len, -e.x / len};
        double p_lo = std::numeric_limits<double>::infinity(), p_hi = -p_lo;
        double q_lo = p_lo, q_hi = -p_lo;
        for (const Vec2 v : p.vertices) {
          p_lo = std::min(p_lo, axis.dot(v));
          p_hi = std::max(p_hi, axis.dot(v));
        }
        for (const Vec2 v : q.vertices) {
          q_lo = std::min(q_lo, axis.dot(v));
          q_hi = std::max(q_hi, axis.dot(v));
        }
        if (q_lo > p_hi + clearance || p_lo > q_hi + clearance) {
          return true;
        }
      }
      return false;
    };
  return separated_along_edges(a, b) || separated_along_edges(b, a);
}

namespace detail
{

inline Obstacle rectangle(std::string id, Vec2 c, double length, double width, double yaw)
{
  const double cy = std::cos(yaw), sy = std::sin(yaw);
  const Vec2 corners[4] = {{-length / 2, -width / 2}, {length / 2, -width / 2},
    {length / 2, width / 2}, {-length / 2, width / 2}};
  Obstacle o{std::move(id), {}, true};
  for (const Vec2 k : corners) {
    o.vertices.push_back({c.x + cy * k.x - sy * k.z, c.z + sy * k.x + cy * k.z});
  }
  return o;
}

// Vertices on a circle at sorted, well-separated angles: strictly convex and
// counterclockwise by construction.
inline Obstacle blob(std::string id, Vec2 c, double radius, std::size_t sides, std::mt19937_64 & rng)
{
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(sides);
  const double start = phase(rng);
  Obstacle o{std::move(id), {}, false};
  for (std::size_t i = 0; i < sides; ++i) {
    const double phi = start + step * (static_cast<double>(i) + jitter(rng));
    o.vertices.push_back({c.x + radius * std::cos(phi), c.z + radius * std::sin(phi)});
  }
  return o;
}

}  // namespace detail

// Random pairwise-disjoint scene: car-sized rectangles as targets and small
// convex blobs as clutter. Deterministic in the seed.
inline Scene generate_scene(
  std::uint64_t seed, std::size_t n_targets, std::size_t n_clutter, const SceneGenParams & params = {})
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> depth(params.z_near, params.z_far);
  std::uniform_real_distribution<double> lateral(-1.0, 1.0);
  std::uniform_real_distribution<double> yaw(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> radius(params.clutter_r_min, params.clutter_r_max);
  std::uniform_int_distribution<std::size_t> sides(5, 7);
  const double slope = std::tan(deg_to_rad(params.half_fov_deg));

  Scene scene;
  scene.bounds = params.bounds;
  const auto place = [&](bool target, std::size_t index) {
      for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        const double z = depth(rng);
        const Vec2 c{lateral(rng) * z * slope, z};
        Obstacle o = target ?
          detail::rectangle("car_" + std::to_string(index), c, params.car_length, params.car_width, yaw(rng)) :
          detail::blob("clutter_" + std::to_string(index), c, radius(rng), sides(rng), rng);
        const bool inside = std::all_of(
          o.vertices.begin(), o.vertices.end(),
          [&](Vec2 v) {return scene.bounds.contains(v) && v.z > 0.0;});
        const bool clear = std::all_of(
          scene.objects.begin(), scene.objects.end(),
          [&](const Obstacle & other) {return polygons_separated(o, other, params.clearance);});
        if (inside && clear) {
          scene.objects.push_back(std::move(o));
          return;
        }
      }
      throw GenerationError(
              "could not place " + std::string(target ? "target " : "clutter ") + std::to_string(index) +
              " without overlap");
    };
  for (std::size_t i = 0; i < n_targets; ++i) {
    place(true, i);
  }
  for (std::size_t i = 0; i < n_clutter; ++i) {
    place(false, i);
  }
  scene.validate();
  return scene;
}

}  // namespace curtain

#endif  // CURTAIN__SCENEGEN_HPP_
