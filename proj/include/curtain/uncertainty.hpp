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

#ifndef CURTAIN__UNCERTAINTY_HPP_
#define CURTAIN__UNCERTAINTY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"

namespace curtain
{

// Uniform ground-plane grid of anchor cells. Cell (ix, iz) covers
// [x_min + ix*dx, x_min + (ix+1)*dx) x [z_min + iz*dz, ...) and its anchor
// sits at the cell center. Storage is row-major with rows along z:
// index = iz * nx + ix.
struct GridGeometry
{
  double x_min{-40.0};
  double x_max{40.0};
  double z_min{0.0};
  double z_max{70.4};
  std::size_t nx{160};
  std::size_t nz{141};

  static GridGeometry with_resolution(
    double x_min, double x_max, double z_min, double z_max, double resolution)
  {
    if (!(resolution > 0.0)) {
      throw ArgumentError("grid resolution must be positive");
    }
    const auto cells = [resolution](double lo, double hi) {
        return static_cast<std::size_t>(std::max(1.0, std::round((hi - lo) / resolution)));
      };
    GridGeometry g{x_min, x_max, z_min, z_max, cells(x_min, x_max), cells(z_min, z_max)};
    g.validate();
    return g;
  }

  void validate() const
  {
    if (nx < 1 || nz < 1) {
      throw ArgumentError("grid needs at least one cell per axis");
    }
    if (!(x_min < x_max) || !(z_min < z_max)) {
      throw ArgumentError("grid extent must satisfy min < max on both axes");
    }
  }

  std::size_t size() const { return nx * nz; }
  double dx() const { return (x_max - x_min) / static_cast<double>(nx); }
  double dz() const { return (z_max - z_min) / static_cast<double>(nz); }
  std::size_t index(std::size_t ix, std::size_t iz) const { return iz * nx + ix; }

  Vec2 center(std::size_t ix, std::size_t iz) const
  {
    return {x_min + (static_cast<double>(ix) + 0.5) * dx(), z_min + (static_cast<double>(iz) + 0.5) * dz()};
  }
  Vec2 center(std::size_t flat) const { return center(flat % nx, flat / nx); }

  bool contains(Vec2 p) const
  {
    return p.x >= x_min && p.x <= x_max && p.z >= z_min && p.z <= z_max;
  }

  // Flat index of the cell whose center is nearest to p; ties go to the
  // lower index on each axis. Empty outside the extent.
  std::optional<std::size_t> nearest_cell(Vec2 p) const
  {
    if (!contains(p)) {
      return std::nullopt;
    }
    const auto axis = [](double v, double lo, double step, std::size_t n) {
        // Round half down in center coordinates.
        const double u = (v - lo) / step - 0.5;
        const double k = std::ceil(u - 0.5);
        return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(n - 1)));
      };
    return index(axis(p.x, x_min, dx(), nx), axis(p.z, z_min, dz(), nz));
  }

  friend bool operator==(const GridGeometry &, const GridGeometry &) = default;
};

// Per-anchor detection probability p.
struct ConfidenceGrid
{
  GridGeometry geometry;
  std::vector<double> values;

  ConfidenceGrid() = default;
  ConfidenceGrid(GridGeometry g, std::vector<double> v)
  : geometry(g), values(std::move(v))
  {
    geometry.validate();
    if (values.size() != geometry.size()) {
      throw ArgumentError("confidence grid value count does not match its shape");
    }
    for (double p : values) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("confidence values must lie in [0, 1]");
      }
    }
  }

  static ConfidenceGrid constant(GridGeometry g, double p)
  {
    return ConfidenceGrid(g, std::vector<double>(g.size(), p));
  }
};

// Per-anchor binary entropy in bits, the "uncertainty map".
struct EntropyMap
{
  GridGeometry geometry;
  std::vector<double> values;

  double total() const
  {
    double sum = 0.0;
    for (double h : values) {
      sum += h;
    }
    return sum;
  }
};

inline double binary_entropy(double p)
{
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binary_entropy expects a probability in [0, 1]");
  }
  if (p == 0.0 || p == 1.0) {
    return 0.0;
  }
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

inline EntropyMap entropy_map(const ConfidenceGrid & grid)
{
  EntropyMap map{grid.geometry, {}};
  map.values.reserve(grid.values.size());
  for (double p : grid.values) {
    map.values.push_back(binary_entropy(p));
  }
  return map;
}

// Nearest-neighbor imputation; zero outside the grid where no anchor exists.
inline double lookup_entropy(const EntropyMap & map, Vec2 p)
{
  const auto cell = map.geometry.nearest_cell(p);
  return cell ? map.values[*cell] : 0.0;
}

}  // namespace curtain

#endif  // CURTAIN__UNCERTAINTY_HPP_
