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

#ifndef CURTAIN__LOOP_HPP_
#define CURTAIN__LOOP_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curtain/belief.hpp"
#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"
#include "curtain/planner.hpp"
#include "curtain/simulator.hpp"
#include "curtain/uncertainty.hpp"

namespace curtain
{

struct SensorConfig
{
  CameraModel camera;
  LaserModel laser;
  std::size_t lattice_n{80};
  double r_min{1.0};
  double r_max{70.4};

  // Builds the constraint graph once; it is shared read-only by every episode.
  std::shared_ptr<const ConstraintGraph> build_graph() const
  {
    return std::make_shared<const ConstraintGraph>(
      build_constraint_graph(build_lattice(camera, laser, lattice_n, r_min, r_max), laser));
  }
};

enum class UpdateModel
{
  kIdeal,  // covered cells collapse to 0 or 1
  kBayes,  // likelihood-ratio update of covered cells
};

struct EpisodeConfig
{
  std::size_t k_max{3};
  Strategy strategy;
  std::optional<NoiseConfig> noise;
  std::uint64_t seed{0};
  std::shared_ptr<const ConstraintGraph> graph;
  GridGeometry grid;
  double prior_p{0.3};
  double epsilon{0.3};
  std::size_t lidar_stride{4};
  double lidar_max_range{100.0};
  // Applied to curtain steps; the LiDAR bootstrap is noise-free and always
  // uses the ideal update.
  UpdateModel update{UpdateModel::kIdeal};
  double hit_likelihood{0.9};
  double miss_likelihood{0.1};

  void validate() const
  {
    if (!graph) {
      throw ArgumentError("episode config has no constraint graph");
    }
    grid.validate();
    if (!(epsilon > 0.0)) {
      throw ArgumentError("epsilon must be positive");
    }
    if (lidar_stride < 1) {
      throw ArgumentError("lidar stride must be at least 1");
    }
    if (noise) {
      noise->validate();
    }
  }
};

struct EpisodeStep
{
  std::size_t k{0};
  std::optional<CurtainPlacement> placement;  // absent on the LiDAR step
  std::size_t points_added{0};
  std::size_t cloud_size{0};
  double entropy_bits{0.0};    // belief entropy after this step's update
  double objective_bits{0.0};  // J of the placement under the map it was planned on
  double plan_time_s{0.0};
  double step_time_s{0.0};     // sensing + planning + update
};

struct EpisodeLog
{
  std::string strategy;
  std::vector<EpisodeStep> steps;
  PointCloud cloud;
  OccupancyBelief belief;
};

// Planning failure inside an episode, tagged with the step it happened at.
class EpisodeError : public PlanningError
{
public:
  EpisodeError(const PlanningError & cause, std::size_t step)
  : PlanningError("step " + std::to_string(step) + ": " + cause.what(), cause.ray()), step_(step)
  {
  }
  std::size_t step() const noexcept { return step_; }

private:
  std::size_t step_;
};

using StepObserver = std::function<void (const EpisodeStep &)>;

namespace detail
{

inline std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// Seed handed to the planner at curtain k.
inline std::uint64_t step_seed(std::uint64_t seed, std::size_t k)
{
  return detail::splitmix64(seed ^ detail::splitmix64(k));
}

// LiDAR bootstrap followed by num_curtains plan / sense / update rounds.
// Starts from the uniform prior unless an initial belief is given.
inline EpisodeLog run_loop(
  const Scene & scene, const EpisodeConfig & config, std::size_t num_curtains,
  std::optional<OccupancyBelief> initial = std::nullopt, const StepObserver & observer = {})
{
  config.validate();
  const ConstraintGraph & graph = *config.graph;
  const auto & rays = graph.lattice().rays();
  using clock = std::chrono::steady_clock;

  EpisodeLog log;
  log.strategy = config.strategy.name();
  log.belief = initial ? std::move(*initial) : init_belief(config.grid, config.prior_p);
  if (!(log.belief.geometry == config.grid)) {
    throw ArgumentError("initial belief grid differs from the configured grid");
  }

  {
    const auto t0 = clock::now();
    PointCloud lidar = lidar_scan(scene, rays, config.lidar_stride);
    const SensingReport report = lidar_report(
      config.grid, rays, config.lidar_stride, lidar, config.lidar_max_range);
    log.belief = ideal_update(std::move(log.belief), report);
    EpisodeStep step;
    step.points_added = lidar.size();
    log.cloud.append(lidar);
    step.cloud_size = log.cloud.size();
    step.entropy_bits = total_entropy(log.belief);
    step.step_time_s = detail::seconds_since(t0);
    log.steps.push_back(std::move(step));
    if (observer) {
      observer(log.steps.back());
    }
  }

  for (std::size_t k = 1; k <= num_curtains; ++k) {
    const auto t0 = clock::now();
    const EntropyMap map = entropy_map(confidence_grid(log.belief));
    const NodeEntropy h = node_entropies(graph.lattice(), map);

    const auto t_plan = clock::now();
    CurtainPlacement placement;
    try {
      placement = plan(config.strategy, graph, h, step_seed(config.seed, k));
    } catch (const PlanningError & e) {
      throw EpisodeError(e, k);
    }
    const double plan_time = detail::seconds_since(t_plan);

    PointCloud returns = image_curtain(scene, graph, placement, config.epsilon, config.noise, k);
    const SensingReport report = curtain_report(config.grid, placement, returns);
    if (config.update == UpdateModel::kIdeal) {
      log.belief = ideal_update(std::move(log.belief), report);
    } else {
      log.belief = noisy_update(
        std::move(log.belief), report, config.hit_likelihood, config.miss_likelihood);
    }

    EpisodeStep step;
    step.k = k;
    step.objective_bits = objective(placement, h).total_entropy;
    step.points_added = returns.size();
    log.cloud.append(returns);
    step.cloud_size = log.cloud.size();
    step.entropy_bits = total_entropy(log.belief);
    step.plan_time_s = plan_time;
    step.placement = std::move(placement);
    step.step_time_s = detail::seconds_since(t0);
    log.steps.push_back(std::move(step));
    if (observer) {
      observer(log.steps.back());
    }
  }
  return log;
}

inline EpisodeLog run_episode(const Scene & scene, const EpisodeConfig & config, const StepObserver & observer = {})
{
  return run_loop(scene, config, config.k_max, std::nullopt, observer);
}

// Keeps placing curtains past the training budget K.
inline EpisodeLog run_generalization(const Scene & scene, const EpisodeConfig & config, std::size_t k_test)
{
  return run_loop(scene, config, k_test);
}

// k drawn uniformly from {0, ..., K}.
inline std::size_t sample_curtain_count(std::size_t k_max, std::mt19937_64 & rng)
{
  std::uniform_int_distribution<std::size_t> dist(0, k_max);
  return dist(rng);
}

struct TrainingSample
{
  std::size_t k{0};
  PointCloud cloud;
};

inline TrainingSample training_sample_with(const Scene & scene, const EpisodeConfig & config, std::size_t k)
{
  if (k > config.k_max) {
    throw ArgumentError("training sample curtain count exceeds K");
  }
  return {k, run_loop(scene, config, k).cloud};
}

// Unified cloud after a uniformly sampled number of curtains.
inline TrainingSample generate_training_sample(
  const Scene & scene, const EpisodeConfig & config, std::mt19937_64 & rng)
{
  return training_sample_with(scene, config, sample_curtain_count(config.k_max, rng));
}

}  // namespace curtain

#endif  // CURTAIN__LOOP_HPP_
