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

#ifndef CURTAIN__IO_HPP_
#define CURTAIN__IO_HPP_

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "curtain/belief.hpp"
#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"
#include "curtain/loop.hpp"
#include "curtain/planner.hpp"
#include "curtain/simulator.hpp"
#include "curtain/uncertainty.hpp"

// File formats. Doubles are written in shortest round-trip form and read
// back bit-identical.

namespace curtain::io
{

using json = nlohmann::json;

inline std::string format_double(double v)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s)
{
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw FormatError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

inline std::size_t parse_size(std::string_view s)
{
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw FormatError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view line, char sep = ',')
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

inline std::string read_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string & path, const std::string & contents)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FormatError("cannot write '" + path + "'");
  }
  out << contents;
}

inline json parse_json(const std::string & text, const std::string & what)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error & e) {
    throw FormatError(what + ": " + e.what());
  }
}

inline bool ends_with(std::string_view s, std::string_view suffix)
{
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// ---------------------------------------------------------------------------
// Sensor configuration
//
// {camera: {num_rays, fov_deg}, laser: {x, z, delta_theta_max_deg |
//  (omega_max_deg_s, delta_t_us)}, lattice: {n, r_min, r_max}}
// Every key is optional and falls back to the defaults.

inline SensorConfig sensor_config_from_json(const json & j)
{
  SensorConfig cfg;
  try {
    if (j.contains("camera")) {
      const json & c = j.at("camera");
      cfg.camera.num_rays = c.value("num_rays", cfg.camera.num_rays);
      cfg.camera.fov_deg = c.value("fov_deg", cfg.camera.fov_deg);
    }
    if (j.contains("laser")) {
      const json & l = j.at("laser");
      const Vec2 pos{l.value("x", cfg.laser.position().x), l.value("z", cfg.laser.position().z)};
      const bool has_delta = l.contains("delta_theta_max_deg");
      const bool has_velocity = l.contains("omega_max_deg_s") || l.contains("delta_t_us");
      if (has_delta && has_velocity) {
        throw FormatError("laser: give either delta_theta_max_deg or omega_max_deg_s + delta_t_us");
      }
      if (has_velocity) {
        cfg.laser = LaserModel::from_velocity(
          pos, deg_to_rad(l.at("omega_max_deg_s").get<double>()),
          l.at("delta_t_us").get<double>() * 1e-6);
      } else {
        cfg.laser = LaserModel::from_delta(
          pos, has_delta ? deg_to_rad(l.at("delta_theta_max_deg").get<double>()) :
          cfg.laser.delta_theta_max());
      }
    }
    if (j.contains("lattice")) {
      const json & t = j.at("lattice");
      cfg.lattice_n = t.value("n", cfg.lattice_n);
      cfg.r_min = t.value("r_min", cfg.r_min);
      cfg.r_max = t.value("r_max", cfg.r_max);
    }
  } catch (const json::exception & e) {
    throw FormatError(std::string("sensor config: ") + e.what());
  }
  cfg.camera.validate();
  return cfg;
}

inline SensorConfig load_sensor_config(const std::string & path)
{
  return sensor_config_from_json(parse_json(read_file(path), path));
}

// ---------------------------------------------------------------------------
// Grids: JSON {x_min, x_max, z_min, z_max, nx, nz, values: [...row-major...]}
// or CSV with a two-line header followed by nz rows of nx values.

struct GridFile
{
  GridGeometry geometry;
  std::vector<double> values;
  json metadata = json::object();
};

inline json geometry_to_json(const GridGeometry & g)
{
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"z_min", g.z_min}, {"z_max", g.z_max},
    {"nx", g.nx}, {"nz", g.nz}};
}

inline GridGeometry geometry_from_json(const json & j)
{
  GridGeometry g{j.at("x_min").get<double>(), j.at("x_max").get<double>(),
    j.at("z_min").get<double>(), j.at("z_max").get<double>(),
    j.at("nx").get<std::size_t>(), j.at("nz").get<std::size_t>()};
  g.validate();
  return g;
}

inline std::string grid_to_json(const GridFile & grid)
{
  json j = grid.metadata;
  j.update(geometry_to_json(grid.geometry));
  j["values"] = grid.values;
  return j.dump() + "\n";
}

inline std::string grid_to_csv(const GridFile & grid)
{
  const GridGeometry & g = grid.geometry;
  std::string out = "x_min,x_max,z_min,z_max,nx,nz\n";
  out += format_double(g.x_min) + "," + format_double(g.x_max) + "," + format_double(g.z_min) + "," +
    format_double(g.z_max) + "," + std::to_string(g.nx) + "," + std::to_string(g.nz) + "\n";
  for (std::size_t iz = 0; iz < g.nz; ++iz) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      if (ix) {
        out += ',';
      }
      out += format_double(grid.values[g.index(ix, iz)]);
    }
    out += '\n';
  }
  return out;
}

inline GridFile grid_from_json(const std::string & text)
{
  const json j = parse_json(text, "grid");
  GridFile grid;
  try {
    grid.geometry = geometry_from_json(j);
    grid.values = j.at("values").get<std::vector<double>>();
    const json header = geometry_to_json(grid.geometry);
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() != "values" && !header.contains(it.key())) {
        grid.metadata[it.key()] = it.value();
      }
    }
  } catch (const json::exception & e) {
    throw FormatError(std::string("grid: ") + e.what());
  }
  if (grid.values.size() != grid.geometry.size()) {
    throw FormatError("grid: value count does not match nx * nz");
  }
  return grid;
}

inline GridFile grid_from_csv(const std::string & text)
{
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "x_min,x_max,z_min,z_max,nx,nz") {
    throw FormatError("grid csv: bad header");
  }
  std::getline(in, line);
  const auto head = split(line);
  if (head.size() != 6) {
    throw FormatError("grid csv: bad extent line");
  }
  GridFile grid;
  grid.geometry = {parse_double(head[0]), parse_double(head[1]), parse_double(head[2]),
    parse_double(head[3]), parse_size(head[4]), parse_size(head[5])};
  grid.geometry.validate();
  grid.values.reserve(grid.geometry.size());
  for (std::size_t iz = 0; iz < grid.geometry.nz; ++iz) {
    if (!std::getline(in, line)) {
      throw FormatError("grid csv: missing rows");
    }
    const auto cells = split(line);
    if (cells.size() != grid.geometry.nx) {
      throw FormatError("grid csv: row " + std::to_string(iz) + " has the wrong width");
    }
    for (const auto c : cells) {
      grid.values.push_back(parse_double(c));
    }
  }
  return grid;
}

// Format picked by extension: .csv or anything else as JSON.
inline void save_grid(const std::string & path, const GridFile & grid)
{
  write_file(path, ends_with(path, ".csv") ? grid_to_csv(grid) : grid_to_json(grid));
}

inline GridFile load_grid(const std::string & path)
{
  const std::string text = read_file(path);
  return ends_with(path, ".csv") ? grid_from_csv(text) : grid_from_json(text);
}

inline ConfidenceGrid load_confidence_grid(const std::string & path)
{
  GridFile f = load_grid(path);
  return ConfidenceGrid(f.geometry, std::move(f.values));
}

inline GridFile belief_snapshot(const OccupancyBelief & belief)
{
  GridFile f{belief.geometry, belief.p, {{"kind", "occupancy_belief"}, {"prior_p", belief.prior_p}}};
  return f;
}

inline OccupancyBelief belief_from_snapshot(const GridFile & f)
{
  if (!f.metadata.contains("prior_p")) {
    throw FormatError("belief snapshot lacks prior_p");
  }
  OccupancyBelief b{f.geometry, f.values, f.metadata.at("prior_p").get<double>()};
  ConfidenceGrid(b.geometry, b.p);  // range check
  return b;
}

// ---------------------------------------------------------------------------
// Scenes: {bounds: {x_min, x_max, z_min, z_max},
//          objects: [{id, vertices: [[x, z], ...], is_target}]}

inline json scene_to_json(const Scene & scene)
{
  json objects = json::array();
  for (const Obstacle & o : scene.objects) {
    json verts = json::array();
    for (const Vec2 v : o.vertices) {
      verts.push_back({v.x, v.z});
    }
    objects.push_back({{"id", o.id}, {"vertices", verts}, {"is_target", o.is_target}});
  }
  const Bounds & b = scene.bounds;
  return {{"bounds", {{"x_min", b.x_min}, {"x_max", b.x_max}, {"z_min", b.z_min}, {"z_max", b.z_max}}},
    {"objects", objects}};
}

inline Scene scene_from_json(const json & j)
{
  Scene scene;
  try {
    const json & b = j.at("bounds");
    scene.bounds = {b.at("x_min").get<double>(), b.at("x_max").get<double>(),
      b.at("z_min").get<double>(), b.at("z_max").get<double>()};
    for (const json & o : j.at("objects")) {
      Obstacle ob;
      ob.id = o.at("id").get<std::string>();
      ob.is_target = o.value("is_target", false);
      for (const json & v : o.at("vertices")) {
        if (v.size() != 2) {
          throw FormatError("scene: vertex of '" + ob.id + "' is not an [x, z] pair");
        }
        ob.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
      }
      scene.objects.push_back(std::move(ob));
    }
  } catch (const json::exception & e) {
    throw FormatError(std::string("scene: ") + e.what());
  }
  scene.validate();
  return scene;
}

inline void save_scene(const std::string & path, const Scene & scene)
{
  write_file(path, scene_to_json(scene).dump(2) + "\n");
}

inline Scene load_scene(const std::string & path)
{
  return scene_from_json(parse_json(read_file(path), path));
}

// ---------------------------------------------------------------------------
// Placements: {points: [{ray_index, range_m, x, z, laser_angle_rad}],
//              score: {total_entropy, smoothness_penalty}}

inline json placement_to_json(const CurtainPlacement & placement, const PlacementScore & score)
{
  json points = json::array();
  for (const ControlPoint & cp : placement.points) {
    points.push_back(
      {{"ray_index", cp.ray_index}, {"range_m", cp.range}, {"x", cp.position.x},
        {"z", cp.position.z}, {"laser_angle_rad", cp.laser_angle}});
  }
  return {{"points", points},
    {"score", {{"total_entropy", score.total_entropy}, {"smoothness_penalty", score.smoothness_penalty}}}};
}

// ---------------------------------------------------------------------------
// Point clouds: CSV x,z,ray_index,source with source "lidar" or "curtain:<k>".

inline std::string cloud_to_csv(const PointCloud & cloud)
{
  std::string out = "x,z,ray_index,source\n";
  for (const SensedPoint & p : cloud.points) {
    out += format_double(p.position.x) + "," + format_double(p.position.z) + "," +
      std::to_string(p.ray_index) + "," +
      (p.source == PointSource::kLidar ? std::string("lidar") : "curtain:" + std::to_string(p.curtain)) +
      "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Episode logs. CSV keeps one row per step; JSON adds placements.

inline constexpr std::string_view kEpisodeCsvHeader = "k,entropy_bits,objective_bits,points_added,plan_time_s";

inline std::string episode_to_csv(const std::vector<EpisodeStep> & steps)
{
  std::string out(kEpisodeCsvHeader);
  out += '\n';
  for (const EpisodeStep & s : steps) {
    out += std::to_string(s.k) + "," + format_double(s.entropy_bits) + "," +
      format_double(s.objective_bits) + "," + std::to_string(s.points_added) + "," +
      format_double(s.plan_time_s) + "\n";
  }
  return out;
}

inline std::vector<EpisodeStep> episode_from_csv(const std::string & text)
{
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kEpisodeCsvHeader) {
    throw FormatError("episode csv: bad header");
  }
  std::vector<EpisodeStep> steps;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto f = split(line);
    if (f.size() != 5) {
      throw FormatError("episode csv: expected 5 fields");
    }
    EpisodeStep s;
    s.k = parse_size(f[0]);
    s.entropy_bits = parse_double(f[1]);
    s.objective_bits = parse_double(f[2]);
    s.points_added = parse_size(f[3]);
    s.plan_time_s = parse_double(f[4]);
    steps.push_back(std::move(s));
  }
  return steps;
}

inline json episode_to_json(const EpisodeLog & log)
{
  json steps = json::array();
  for (const EpisodeStep & s : log.steps) {
    json j = {{"k", s.k}, {"entropy_bits", s.entropy_bits}, {"objective_bits", s.objective_bits},
      {"points_added", s.points_added}, {"cloud_size", s.cloud_size}, {"plan_time_s", s.plan_time_s},
      {"step_time_s", s.step_time_s}};
    if (s.placement) {
      PlacementScore score{s.objective_bits, smoothness_penalty(*s.placement)};
      j["placement"] = placement_to_json(*s.placement, score);
    } else {
      j["placement"] = nullptr;
    }
    steps.push_back(std::move(j));
  }
  return {{"strategy", log.strategy}, {"steps", steps}};
}

// Reads the per-step scalars of a JSON log (placements are not rebuilt).
inline std::vector<EpisodeStep> episode_steps_from_json(const std::string & text)
{
  const json j = parse_json(text, "episode");
  std::vector<EpisodeStep> steps;
  try {
    for (const json & s : j.at("steps")) {
      EpisodeStep step;
      step.k = s.at("k").get<std::size_t>();
      step.entropy_bits = s.at("entropy_bits").get<double>();
      step.objective_bits = s.at("objective_bits").get<double>();
      step.points_added = s.at("points_added").get<std::size_t>();
      step.cloud_size = s.value("cloud_size", std::size_t{0});
      step.plan_time_s = s.at("plan_time_s").get<double>();
      step.step_time_s = s.value("step_time_s", 0.0);
      steps.push_back(std::move(step));
    }
  } catch (const json::exception & e) {
    throw FormatError(std::string("episode: ") + e.what());
  }
  return steps;
}

}  // namespace curtain::io

#endif  // CURTAIN__IO_HPP_
