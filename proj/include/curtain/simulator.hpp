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

#ifndef CURTAIN__SIMULATOR_HPP_
#define CURTAIN__SIMULATOR_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"

namespace curtain
{

struct Bounds
{
  double x_min{-40.0};
  double x_max{40.0};
  double z_min{0.0};
  double z_max{70.4};

  bool contains(Vec2 p) const
  {
    return p.x >= x_min && p.x <= x_max && p.z >= z_min && p.z <= z_max;
  }
  friend bool operator==(const Bounds &, const Bounds &) = default;
};

// Convex polygon footprint in the xz-plane, counterclockwise when x is the
// first axis and z the second.
struct Obstacle
{
  std::string id;
  std::vector<Vec2> vertices;
  bool is_target{false};

  void validate() const
  {
    const std::size_t n = vertices.size();
    if (n < 3) {
      throw ArgumentError("obstacle '" + id + "' needs at least three vertices");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 a = vertices[i];
      const Vec2 b = vertices[(i + 1) % n];
      const Vec2 c = vertices[(i + 2) % n];
      if (!((b - a).cross(c - b) > 0.0)) {
        throw ArgumentError("obstacle '" + id + "' is not strictly convex and counterclockwise");
      }
    }
  }
};

struct Scene
{
  std::vector<Obstacle> objects;
  Bounds bounds;

  void validate() const
  {
    for (const Obstacle & o : objects) {
      o.validate();
      for (const Vec2 v : o.vertices) {
        if (!bounds.contains(v) || !(v.z > 0.0)) {
          throw ArgumentError("obstacle '" + o.id + "' leaves the scene bounds or the z > 0 half-plane");
        }
      }
    }
  }
};

enum class PointSource
{
  kLidar,
  kCurtain,
};

struct SensedPoint
{
  Vec2 position;
  std::size_t ray_index{0};
  PointSource source{PointSource::kLidar};
  // Curtain number k >= 1 for curtain returns, 0 for LiDAR.
  std::size_t curtain{0};
  double range{0.0};

  friend bool operator==(const SensedPoint &, const SensedPoint &) = default;
};

// Unified point cloud: points are only ever appended.
struct PointCloud
{
  std::vector<SensedPoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  void append(const PointCloud & other)
  {
    points.insert(points.end(), other.points.begin(), other.points.end());
  }
};

struct NoiseConfig
{
  double dropout_prob{0.0};
  double range_sigma{0.0};
  std::uint64_t seed{0};

  // 10% of curtain returns dropped plus 0.1 m range jitter.
  static NoiseConfig standard_preset(std::uint64_t seed)
  {
    return {0.1, 0.1, seed};
  }

  void validate() const
  {
    if (!(dropout_prob >= 0.0 && dropout_prob <= 1.0)) {
      throw ArgumentError("dropout probability must lie in [0, 1]");
    }
    if (!(range_sigma >= 0.0)) {
      throw ArgumentError("range sigma must be non-negative");
    }
  }
};

// Range at which the ray from the camera origin enters the polygon
// (Cyrus-Beck clipping against the edge half-planes).
inline std::optional<double> ray_enter_polygon(const Obstacle & obstacle, Vec2 dir)
{
  double t_enter = 0.0;
  double t_exit = std::numeric_limits<double>::infinity();
  const std::size_t n = obstacle.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = obstacle.vertices[i];
    const Vec2 e = obstacle.vertices[(i + 1) % n] - a;
    const Vec2 outward{e.z, -e.x};
    const double num = outward.dot(a);  // outward . (a - origin)
    const double den = outward.dot(dir);
    if (den == 0.0) {
      if (num < 0.0) {
        return std::nullopt;
      }
      continue;
    }
    const double t = num / den;
    if (den < 0.0) {
      t_enter = std::max(t_enter, t);
    } else {
      t_exit = std::min(t_exit, t);
    }
    if (t_enter > t_exit) {
      return std::nullopt;
    }
  }
  return t_enter;
}

inline std::optional<double> raycast_first_hit(const Scene & scene, const Ray & ray)
{
  std::optional<double> best;
  for (const Obstacle & o : scene.objects) {
    const auto r = ray_enter_polygon(o, ray.unit_dir);
    if (r && *r > 0.0 && scene.bounds.contains(ray.at(*r)) && (!best || *r < *best)) {
      best = r;
    }
  }
  return best;
}

// Single-beam LiDAR: the first hit of every stride-th camera ray.
inline PointCloud lidar_scan(const Scene & scene, std::span<const Ray> rays, std::size_t stride)
{
  if (stride < 1) {
    throw ArgumentError("lidar stride must be at least 1");
  }
  PointCloud cloud;
  for (std::size_t t = 0; t < rays.size(); t += stride) {
    if (const auto hit = raycast_first_hit(scene, rays[t])) {
      cloud.points.push_back({rays[t].at(*hit), t, PointSource::kLidar, 0, *hit});
    }
  }
  return cloud;
}

inline PointCloud lidar_scan(const Scene & scene, const CameraModel & camera, std::size_t stride)
{
  const auto rays = build_rays(camera);
  return lidar_scan(scene, rays, stride);
}

// Returns the visible surface points within epsilon of the curtain on each
// ray. With noise, each return is dropped with dropout_prob and survivors get
// Gaussian range jitter, clipped to [0, first visible surface].
inline PointCloud image_curtain(
  const Scene & scene, const ConstraintGraph & graph, const CurtainPlacement & placement,
  double epsilon, const std::optional<NoiseConfig> & noise = std::nullopt, std::size_t curtain = 1)
{
  if (!(epsilon > 0.0)) {
    throw ArgumentError("curtain hit tolerance must be positive");
  }
  if (!is_feasible(graph, placement)) {
    throw ArgumentError("curtain placement violates the galvanometer bound");
  }
  std::mt19937_64 rng;
  if (noise) {
    noise->validate();
    std::seed_seq seq{
      static_cast<std::uint32_t>(noise->seed), static_cast<std::uint32_t>(noise->seed >> 32),
      static_cast<std::uint32_t>(curtain)};
    rng.seed(seq);
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::normal_distribution<double> jitter(0.0, 1.0);

  const auto & rays = graph.lattice().rays();
  PointCloud cloud;
  for (std::size_t t = 0; t < placement.size(); ++t) {
    const auto hit = raycast_first_hit(scene, rays[t]);
    if (!hit || std::abs(*hit - placement.points[t].range) > epsilon) {
      continue;
    }
    double range = *hit;
    if (noise) {
      // Coin and jitter are drawn for every return.
      const bool dropped = coin(rng) < noise->dropout_prob;
      const double offset = noise->range_sigma * jitter(rng);
      if (dropped) {
        continue;
      }
      range = std::clamp(range + offset, 0.0, *hit);
    }
    cloud.points.push_back({rays[t].at(range), t, PointSource::kCurtain, curtain, range});
  }
  return cloud;
}

}  // namespace curtain

#endif  // CURTAIN__SIMULATOR_HPP_
