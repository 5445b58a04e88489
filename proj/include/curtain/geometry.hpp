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

#ifndef CURTAIN__GEOMETRY_HPP_
#define CURTAIN__GEOMETRY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "curtain/errors.hpp"

// Top-down (xz-plane) model of a rolling-shutter camera paired with a
// galvanometer-steered laser sheet. The camera sits at the origin looking
// down +z; azimuths are measured from +z, positive toward +x.

namespace curtain
{

struct Vec2
{
  double x{0.0};
  double z{0.0};

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.z}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;

  constexpr double dot(Vec2 o) const { return x * o.x + z * o.z; }
  // z-component of the 3D cross product when (x, z) is read as a right-handed 2D frame.
  constexpr double cross(Vec2 o) const { return x * o.z - z * o.x; }
  double norm() const { return std::hypot(x, z); }
};

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

struct CameraModel
{
  std::size_t num_rays{128};
  double fov_deg{80.0};
  Vec2 origin{0.0, 0.0};

  void validate() const
  {
    if (num_rays < 1) {
      throw ArgumentError("camera needs at least one ray");
    }
    if (!(fov_deg > 0.0 && fov_deg < 180.0)) {
      throw ArgumentError("camera field of view must lie in (0, 180) degrees");
    }
    if (origin != Vec2{0.0, 0.0}) {
      throw ArgumentError("camera origin is fixed at (0, 0)");
    }
  }
};

// The galvanometer bound is stored as the per-column angle budget
// delta_theta_max = omega_max * delta_t.
class LaserModel
{
public:
  LaserModel() : LaserModel(from_delta({0.2, 0.0}, deg_to_rad(1.5))) {}

  static LaserModel from_velocity(Vec2 position, double omega_max, double delta_t)
  {
    if (!(omega_max > 0.0) || !(delta_t > 0.0)) {
      throw ArgumentError("omega_max and delta_t must be positive");
    }
    return LaserModel(position, omega_max, delta_t);
  }

  // Direct angle budget with a nominal 1 s column interval. A zero budget is
  // a frozen mirror, an infinite one an unconstrained mirror.
  static LaserModel from_delta(Vec2 position, double delta_theta_max)
  {
    if (!(delta_theta_max >= 0.0)) {
      throw ArgumentError("delta_theta_max must be non-negative");
    }
    return LaserModel(position, delta_theta_max, 1.0);
  }

  Vec2 position() const { return position_; }
  double omega_max() const { return omega_max_; }
  double delta_t() const { return delta_t_; }
  double delta_theta_max() const { return delta_theta_max_; }

private:
  LaserModel(Vec2 position, double omega_max, double delta_t)
  : position_(position), omega_max_(omega_max), delta_t_(delta_t),
    delta_theta_max_(omega_max * delta_t)
  {
  }

  Vec2 position_;
  double omega_max_;
  double delta_t_;
  double delta_theta_max_;
};

struct Ray
{
  std::size_t index{0};
  double azimuth{0.0};
  Vec2 unit_dir{0.0, 1.0};

  Vec2 at(double range) const { return range * unit_dir; }
};

struct ControlPoint
{
  std::size_t ray_index{0};
  std::size_t candidate{0};
  double range{0.0};
  Vec2 position;
  double laser_angle{0.0};
};

// Index-ordered rays, left (-fov/2) to right (+fov/2). Ray indices are 0-based.
// A single-ray camera looks straight down +z.
inline std::vector<Ray> build_rays(const CameraModel & camera)
{
  camera.validate();
  if (camera.num_rays == 1) {
    return {Ray{0, 0.0, {0.0, 1.0}}};
  }
  const double half = deg_to_rad(camera.fov_deg) / 2.0;
  const double step = deg_to_rad(camera.fov_deg) / static_cast<double>(camera.num_rays - 1);
  std::vector<Ray> rays;
  rays.reserve(camera.num_rays);
  for (std::size_t t = 0; t < camera.num_rays; ++t) {
    // The last ray is pinned to +fov/2.
    const double azimuth = (t + 1 == camera.num_rays) ? half : -half + step * static_cast<double>(t);
    rays.push_back({t, azimuth, {std::sin(azimuth), std::cos(azimuth)}});
  }
  return rays;
}

// Azimuth of the laser sheet that passes through p.
inline double laser_angle(const LaserModel & laser, Vec2 p)
{
  const Vec2 d = p - laser.position();
  if (!(d.z > 0.0)) {
    throw DomainError("point is not in front of the laser");
  }
  return std::atan2(d.x, d.z);
}

// The candidate set D_t on every ray: n control points equally spaced in
// range over [r_min, r_max].
class CandidateLattice
{
public:
  CandidateLattice(
    const CameraModel & camera, const LaserModel & laser, std::size_t n, double r_min, double r_max)
  : camera_(camera), laser_(laser), rays_(build_rays(camera)), n_(n), r_min_(r_min), r_max_(r_max)
  {
    if (n < 2) {
      throw ArgumentError("lattice needs at least two candidates per ray");
    }
    if (!(r_min > 0.0 && r_min < r_max) || !std::isfinite(r_max)) {
      throw ArgumentError("lattice bounds must satisfy 0 < r_min < r_max");
    }
    points_.reserve(rays_.size() * n_);
    const double step = (r_max - r_min) / static_cast<double>(n - 1);
    for (const Ray & ray : rays_) {
      for (std::size_t k = 0; k < n; ++k) {
        const double range = (k + 1 == n) ? r_max : r_min + step * static_cast<double>(k);
        const Vec2 pos = ray.at(range);
        points_.push_back({ray.index, k, range, pos, laser_angle(laser, pos)});
      }
    }
  }

  std::size_t num_rays() const { return rays_.size(); }
  std::size_t points_per_ray() const { return n_; }
  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  const CameraModel & camera() const { return camera_; }
  const LaserModel & laser() const { return laser_; }
  const std::vector<Ray> & rays() const { return rays_; }

  std::span<const ControlPoint> candidates(std::size_t ray) const
  {
    return std::span<const ControlPoint>(points_).subspan(ray * n_, n_);
  }
  const ControlPoint & at(std::size_t ray, std::size_t k) const { return points_[ray * n_ + k]; }

private:
  CameraModel camera_;
  LaserModel laser_;
  std::vector<Ray> rays_;
  std::size_t n_;
  double r_min_;
  double r_max_;
  std::vector<ControlPoint> points_;  // ray-major
};

inline CandidateLattice build_lattice(
  const CameraModel & camera, const LaserModel & laser, std::size_t n, double r_min, double r_max)
{
  return CandidateLattice(camera, laser, n, r_min, r_max);
}

// One control point per ray, index-ordered.
struct CurtainPlacement
{
  std::vector<ControlPoint> points;
  std::vector<std::size_t> candidate_indices;

  std::size_t size() const { return points.size(); }
};

inline CurtainPlacement make_placement(
  const CandidateLattice & lattice, std::span<const std::size_t> indices)
{
  if (indices.size() != lattice.num_rays()) {
    throw ArgumentError("placement must have exactly one candidate per ray");
  }
  CurtainPlacement placement;
  placement.points.reserve(indices.size());
  placement.candidate_indices.assign(indices.begin(), indices.end());
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] >= lattice.points_per_ray()) {
      throw ArgumentError("candidate index out of range on ray " + std::to_string(t));
    }
    placement.points.push_back(lattice.at(t, indices[t]));
  }
  return placement;
}

// Feasible transitions between consecutive rays, stored in compressed sparse
// rows. Successor lists are sorted by candidate index.
class ConstraintGraph
{
public:
  ConstraintGraph(CandidateLattice lattice, double delta_theta_max)
  : lattice_(std::move(lattice)), delta_theta_max_(delta_theta_max)
  {
    const std::size_t num_rays = lattice_.num_rays();
    const std::size_t n = lattice_.points_per_ray();
    offsets_.reserve((num_rays - 1) * n + 1);
    offsets_.push_back(0);
    for (std::size_t t = 0; t + 1 < num_rays; ++t) {
      const auto from = lattice_.candidates(t);
      const auto to = lattice_.candidates(t + 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (std::abs(to[j].laser_angle - from[i].laser_angle) <= delta_theta_max_) {
            targets_.push_back(static_cast<std::uint32_t>(j));
          }
        }
        offsets_.push_back(targets_.size());
      }
    }
    const std::size_t sources = (num_rays - 1) * n;
    avg_degree_ = sources == 0 ? 0.0 : static_cast<double>(targets_.size()) / static_cast<double>(sources);
  }

  const CandidateLattice & lattice() const { return lattice_; }
  std::size_t num_rays() const { return lattice_.num_rays(); }
  std::size_t points_per_ray() const { return lattice_.points_per_ray(); }
  double delta_theta_max() const { return delta_theta_max_; }
  std::size_t num_edges() const { return targets_.size(); }
  // B_avg: mean out-degree over the nodes of rays 0..T-2.
  double avg_degree() const { return avg_degree_; }

  // Successors of candidate i on ray t (t < T-1), as candidate indices on ray t+1.
  std::span<const std::uint32_t> successors(std::size_t t, std::size_t i) const
  {
    const std::size_t row = t * lattice_.points_per_ray() + i;
    return std::span<const std::uint32_t>(targets_).subspan(
      offsets_[row], offsets_[row + 1] - offsets_[row]);
  }

  bool has_edge(std::size_t t, std::size_t i, std::size_t j) const
  {
    const auto succ = successors(t, i);
    return std::binary_search(succ.begin(), succ.end(), static_cast<std::uint32_t>(j));
  }

private:
  CandidateLattice lattice_;
  double delta_theta_max_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
  double avg_degree_{0.0};
};

inline ConstraintGraph build_constraint_graph(const CandidateLattice & lattice, const LaserModel & laser)
{
  if (!(laser.position() == lattice.laser().position())) {
    throw ArgumentError("laser position differs from the one the lattice angles were computed for");
  }
  return ConstraintGraph(lattice, laser.delta_theta_max());
}

inline ConstraintGraph build_constraint_graph(const CandidateLattice & lattice)
{
  return build_constraint_graph(lattice, lattice.laser());
}

inline bool is_feasible(const ConstraintGraph & graph, const CurtainPlacement & placement)
{
  const std::size_t num_rays = graph.num_rays();
  if (placement.points.size() != num_rays || placement.candidate_indices.size() != num_rays) {
    throw ArgumentError("placement does not have one point per ray");
  }
  for (std::size_t t = 0; t < num_rays; ++t) {
    const std::size_t k = placement.candidate_indices[t];
    if (k >= graph.points_per_ray() || placement.points[t].ray_index != t ||
      placement.points[t].candidate != k)
    {
      throw ArgumentError("placement point " + std::to_string(t) + " is not drawn from the lattice");
    }
  }
  for (std::size_t t = 0; t + 1 < num_rays; ++t) {
    if (!graph.has_edge(t, placement.candidate_indices[t], placement.candidate_indices[t + 1])) {
      return false;
    }
  }
  return true;
}

}  // namespace curtain

#endif  // CURTAIN__GEOMETRY_HPP_
