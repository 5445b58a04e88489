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

// curtain: scene generation, closed-loop episodes and timing benchmarks.
//
// Exit codes: 0 success, 1 usage error, 2 runtime or planning error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "curtain/curtain.hpp"

namespace fs = std::filesystem;
using namespace curtain;

namespace
{

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct GlobalOptions
{
  std::string config_path;
  std::uint64_t seed{0};
  std::string out_dir{"."};
};

struct LoopOptions
{
  std::string strategy{"dp"};
  std::size_t k{3};
  std::optional<std::size_t> k_test;
  std::string noise{"none"};
  std::string update{"auto"};
  double prior{0.3};
  double resolution{0.5};
  double epsilon{0.3};
  std::size_t stride{4};
};

SensorConfig sensor_config(const GlobalOptions & g)
{
  return g.config_path.empty() ? SensorConfig{} : io::load_sensor_config(g.config_path);
}

void add_loop_options(CLI::App * cmd, LoopOptions & o)
{
  cmd->add_option("--strategy", o.strategy, "dp, greedy-random, greedy-minangle, random, fixed:<z>, fp-uncertainty");
  cmd->add_option("--k", o.k, "curtains per episode (K)");
  cmd->add_option("--prior", o.prior, "initial occupancy probability");
  cmd->add_option("--resolution", o.resolution, "belief grid cell size in meters");
  cmd->add_option("--epsilon", o.epsilon, "curtain hit tolerance in meters");
  cmd->add_option("--stride", o.stride, "LiDAR ray stride");
  cmd->add_option("--noise", o.noise, "none or standard (10% dropout, 0.1 m jitter)")
  ->check(CLI::IsMember({"none", "standard"}));
  cmd->add_option("--update", o.update, "ideal, bayes, or auto (bayes when noise is on)")
  ->check(CLI::IsMember({"auto", "ideal", "bayes"}));
}

EpisodeConfig episode_config(const GlobalOptions & g, const LoopOptions & o)
{
  EpisodeConfig c;
  c.k_max = o.k;
  c.strategy = Strategy::parse(o.strategy);
  c.seed = g.seed;
  c.graph = sensor_config(g).build_graph();
  c.grid = GridGeometry::with_resolution(-40.0, 40.0, 0.0, 70.4, o.resolution);
  c.prior_p = o.prior;
  c.epsilon = o.epsilon;
  c.lidar_stride = o.stride;
  if (o.noise == "standard") {
    c.noise = NoiseConfig::standard_preset(g.seed);
  }
  c.update = (o.update == "bayes" || (o.update == "auto" && c.noise)) ? UpdateModel::kBayes : UpdateModel::kIdeal;
  return c;
}

void ensure_dir(const std::string & dir)
{
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw FormatError("cannot create output directory '" + dir + "': " + ec.message());
  }
}

std::vector<Scene> load_scene_dir(const std::string & dir)
{
  if (!fs::is_directory(dir)) {
    throw ArgumentError("scene directory '" + dir + "' does not exist");
  }
  std::vector<fs::path> files;
  for (const auto & entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw ArgumentError("scene directory '" + dir + "' contains no .json scenes");
  }
  std::vector<Scene> scenes;
  for (const auto & f : files) {
    scenes.push_back(io::load_scene(f.string()));
  }
  return scenes;
}

std::vector<Strategy> parse_strategies(const std::string & list)
{
  std::vector<Strategy> out;
  for (const auto part : io::split(list)) {
    out.push_back(Strategy::parse(std::string(part)));
  }
  if (out.empty()) {
    throw ArgumentError("no strategies given");
  }
  return out;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Uncertainty-guided light curtain placement"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--config", g.config_path, "sensor configuration JSON");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out_dir, "output directory");

  std::size_t n_targets = 4, n_clutter = 3, count = 1;
  CLI::App * genscene = app.add_subcommand("genscene", "write random non-overlapping scenes");
  genscene->add_option("--targets", n_targets, "car-sized target rectangles");
  genscene->add_option("--clutter", n_clutter, "convex clutter polygons");
  genscene->add_option("--count", count, "number of scenes (seeds seed .. seed+count-1)");

  std::string scene_path;
  LoopOptions loop_opts;
  std::size_t k_test = 0;
  CLI::App * run = app.add_subcommand("run", "run one sense-plan-update episode");
  run->add_option("scene", scene_path, "scene JSON")->required();
  add_loop_options(run, loop_opts);
  CLI::Option * k_test_opt = run->add_option("--k-test", k_test, "curtains to place regardless of K");

  std::string grid_path;
  std::string plan_strategy = "dp";
  CLI::App * plan_cmd = app.add_subcommand("plan", "plan one curtain for a confidence grid file");
  plan_cmd->add_option("grid", grid_path, "confidence grid (JSON or CSV)")->required();
  plan_cmd->add_option("--strategy", plan_strategy, "planner");

  std::string scene_dir;
  std::string strategies = "dp,greedy-random,greedy-minangle,random,fixed:15,fixed:30,fixed:45,fp-uncertainty";
  std::size_t trials = 100, jobs = 0;
  LoopOptions bench_opts;
  CLI::App * bench = app.add_subcommand("bench", "timing benchmark over a scene directory");
  bench->add_option("scene_dir", scene_dir, "directory of scene JSON files")->required();
  bench->add_option("--strategies", strategies, "comma-separated planners");
  bench->add_option("--trials", trials, "trials per strategy (>= 2)");
  bench->add_option("--jobs", jobs, "worker threads (0 = all cores; capped by CURTAIN_THREADS)");
  add_loop_options(bench, bench_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (genscene->parsed()) {
      ensure_dir(g.out_dir);
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t seed = g.seed + i;
        const Scene scene = generate_scene(seed, n_targets, n_clutter);
        char name[64];
        std::snprintf(name, sizeof(name), "scene_%04llu.json", static_cast<unsigned long long>(seed));
        const std::string path = (fs::path(g.out_dir) / name).string();
        io::save_scene(path, scene);
        std::cout << path << "\n";
      }
    } else if (run->parsed()) {
      const Scene scene = io::load_scene(scene_path);
      const EpisodeConfig config = episode_config(g, loop_opts);
      ensure_dir(g.out_dir);
      const EpisodeLog log = k_test_opt->count() ? run_generalization(scene, config, k_test) : run_episode(scene, config);
      const fs::path out(g.out_dir);
      io::write_file((out / "episode.json").string(), io::episode_to_json(log).dump(2) + "\n");
      io::write_file((out / "episode.csv").string(), io::episode_to_csv(log.steps));
      io::write_file((out / "cloud.csv").string(), io::cloud_to_csv(log.cloud));
      io::save_grid((out / "belief.json").string(), io::belief_snapshot(log.belief));
      for (const EpisodeStep & s : log.steps) {
        std::cout << "k=" << s.k << " entropy=" << s.entropy_bits << " objective=" << s.objective_bits
                  << " points=" << s.points_added << "\n";
      }
    } else if (plan_cmd->parsed()) {
      const ConfidenceGrid grid = io::load_confidence_grid(grid_path);
      const auto graph = sensor_config(g).build_graph();
      const EntropyMap map = entropy_map(grid);
      const CurtainPlacement placement = plan(Strategy::parse(plan_strategy), *graph, map, g.seed);
      ensure_dir(g.out_dir);
      const std::string path = (fs::path(g.out_dir) / "placement.json").string();
      io::write_file(path, io::placement_to_json(placement, objective(placement, map)).dump(2) + "\n");
      std::cout << path << "\n";
    } else if (bench->parsed()) {
      const std::vector<Scene> scenes = load_scene_dir(scene_dir);
      const std::vector<Strategy> list = parse_strategies(strategies);
      const EpisodeConfig config = episode_config(g, bench_opts);
      const BenchReport report = run_bench(scenes, list, trials, config, jobs);
      ensure_dir(g.out_dir);
      const fs::path out(g.out_dir);
      io::write_file((out / "bench.csv").string(), bench_to_csv(report));
      io::write_file((out / "bench.json").string(), bench_to_json(report).dump(2) + "\n");
      io::write_file((out / "tradeoff.csv").string(), tradeoff_to_csv(report));
      std::cout << "workers=" << report.workers << " trials=" << report.trials << "\n" << bench_to_csv(report);
    }
  } catch (const ArgumentError & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
