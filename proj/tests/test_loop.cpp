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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "curtain/loop.hpp"
#include "curtain/scenegen.hpp"

namespace curtain
{
namespace
{

const std::shared_ptr<const ConstraintGraph> & shared_graph()
{
  static const auto graph = SensorConfig{}.build_graph();
  return graph;
}

EpisodeConfig make_config(const std::string & strategy = "dp", std::uint64_t seed = 7)
{
  EpisodeConfig c;
  c.strategy = Strategy::parse(strategy);
  c.seed = seed;
  c.graph = shared_graph();
  return c;
}

Scene four_cars()
{
  return generate_scene(11, 4, 0);
}

void expect_same_log(const EpisodeLog & a, const EpisodeLog & b)
{
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    EXPECT_EQ(a.steps[i].k, b.steps[i].k);
    EXPECT_EQ(a.steps[i].points_added, b.steps[i].points_added);
    EXPECT_EQ(a.steps[i].entropy_bits, b.steps[i].entropy_bits);
    EXPECT_EQ(a.steps[i].objective_bits, b.steps[i].objective_bits);
    EXPECT_EQ(a.steps[i].placement.has_value(), b.steps[i].placement.has_value());
    if (a.steps[i].placement) {
      EXPECT_EQ(a.steps[i].placement->candidate_indices, b.steps[i].placement->candidate_indices);
    }
  }
  EXPECT_EQ(a.cloud.points, b.cloud.points);
  EXPECT_EQ(a.belief.p, b.belief.p);
}

TEST(RunEpisode, ZeroCurtainsIsLidarOnly)
{
  EpisodeConfig c = make_config();
  c.k_max = 0;
  const EpisodeLog log = run_episode(four_cars(), c);
  ASSERT_EQ(log.steps.size(), 1u);
  EXPECT_EQ(log.steps[0].k, 0u);
  EXPECT_FALSE(log.steps[0].placement.has_value());
  EXPECT_GT(log.steps[0].points_added, 0u);
  for (const SensedPoint & p : log.cloud.points) {
    EXPECT_EQ(p.source, PointSource::kLidar);
  }
}

TEST(RunEpisode, EmptySceneCollapsesCoveredCells)
{
  const EpisodeConfig c = make_config();
  const EpisodeLog log = run_episode(Scene{}, c);
  ASSERT_EQ(log.steps.size(), 4u);
  EXPECT_EQ(log.cloud.size(), 0u);
  for (std::size_t k = 1; k < log.steps.size(); ++k) {
    EXPECT_LT(log.steps[k].entropy_bits, log.steps[k - 1].entropy_bits);
  }
  // Replay the first curtain to check its cells directly.
  EpisodeConfig one = c;
  one.k_max = 1;
  const EpisodeLog first = run_episode(Scene{}, one);
  for (const std::size_t cell : covered_cells(c.grid, *first.steps[1].placement)) {
    EXPECT_EQ(first.belief.p[cell], 0.0);
  }
}

TEST(RunEpisode, FourCarsStrictlyDecreasing)
{
  const EpisodeLog log = run_episode(four_cars(), make_config());
  ASSERT_EQ(log.steps.size(), 4u);
  EXPECT_EQ(log.strategy, "dp");
  for (std::size_t k = 1; k < log.steps.size(); ++k) {
    EXPECT_EQ(log.steps[k].k, k);
    ASSERT_TRUE(log.steps[k].placement.has_value());
    EXPECT_TRUE(is_feasible(*shared_graph(), *log.steps[k].placement));
    EXPECT_LT(log.steps[k].entropy_bits, log.steps[k - 1].entropy_bits);
    EXPECT_GT(log.steps[k].objective_bits, 0.0);
    EXPECT_GE(log.steps[k].plan_time_s, 0.0);
  }
}

TEST(RunEpisode, EntropyRemovedNeverExceedsObjective)
{
  // Deduplicated removal is at most J, which may count a cell twice.
  const EpisodeLog log = run_episode(four_cars(), make_config());
  for (std::size_t k = 1; k < log.steps.size(); ++k) {
    EXPECT_LE(log.steps[k - 1].entropy_bits - log.steps[k].entropy_bits, log.steps[k].objective_bits + 1e-9);
  }
}

TEST(RunGeneralization, TenCurtainsNonIncreasing)
{
  for (const char * strategy : {"dp", "greedy-random", "random", "fixed:15", "fp-uncertainty"}) {
    const EpisodeLog log = run_generalization(four_cars(), make_config(strategy), 10);
    ASSERT_EQ(log.steps.size(), 11u) << strategy;
    for (std::size_t k = 1; k < log.steps.size(); ++k) {
      EXPECT_LE(log.steps[k].entropy_bits, log.steps[k - 1].entropy_bits) << strategy << " k=" << k;
    }
  }
}

TEST(RunGeneralization, KTestEqualToKMatchesEpisode)
{
  const EpisodeConfig c = make_config("greedy-random", 3);
  expect_same_log(run_generalization(four_cars(), c, c.k_max), run_episode(four_cars(), c));
}

TEST(RunGeneralization, ResolvedBeliefStaysAtZero)
{
  const EpisodeConfig c = make_config();
  OccupancyBelief resolved = init_belief(c.grid, c.prior_p);
  std::fill(resolved.p.begin(), resolved.p.end(), 0.0);
  const EpisodeLog log = run_loop(Scene{}, c, 10, resolved);
  ASSERT_EQ(log.steps.size(), 11u);
  for (const EpisodeStep & s : log.steps) {
    EXPECT_EQ(s.entropy_bits, 0.0);
  }
}

TEST(RunEpisode, UnifiedCloudOnlyGrows)
{
  const EpisodeConfig c = make_config();
  std::vector<PointCloud> prefixes;
  for (std::size_t k = 0; k <= 3; ++k) {
    prefixes.push_back(training_sample_with(four_cars(), c, k).cloud);
  }
  for (std::size_t k = 1; k < prefixes.size(); ++k) {
    ASSERT_GE(prefixes[k].size(), prefixes[k - 1].size());
    for (std::size_t i = 0; i < prefixes[k - 1].size(); ++i) {
      EXPECT_EQ(prefixes[k].points[i], prefixes[k - 1].points[i]);
    }
  }
  const EpisodeLog log = run_episode(four_cars(), c);
  std::size_t running = 0;
  for (const EpisodeStep & s : log.steps) {
    running += s.points_added;
    EXPECT_EQ(s.cloud_size, running);
  }
}

TEST(RunEpisode, DeterministicUnderSeed)
{
  EpisodeConfig c = make_config("greedy-random", 99);
  c.noise = NoiseConfig::standard_preset(5);
  c.update = UpdateModel::kBayes;
  expect_same_log(run_episode(four_cars(), c), run_episode(four_cars(), c));
  EpisodeConfig r = make_config("random", 1);
  expect_same_log(run_episode(four_cars(), r), run_episode(four_cars(), r));
  EpisodeConfig other = r;
  other.seed = 2;
  EXPECT_NE(run_episode(four_cars(), r).steps[1].placement->candidate_indices,
    run_episode(four_cars(), other).steps[1].placement->candidate_indices);
}

TEST(RunEpisode, ObserverSeesEveryStep)
{
  std::vector<std::size_t> seen;
  run_episode(four_cars(), make_config(), [&](const EpisodeStep & s) {seen.push_back(s.k);});
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(RunEpisode, PlanningFailureCarriesStep)
{
  SensorConfig tight;
  tight.laser = LaserModel::from_delta({0.2, 0.0}, 0.0);
  EpisodeConfig c = make_config();
  c.graph = tight.build_graph();
  try {
    run_episode(Scene{}, c);
    FAIL() << "expected EpisodeError";
  } catch (const EpisodeError & e) {
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(RunEpisode, RejectsIncompleteConfig)
{
  EpisodeConfig c = make_config();
  c.graph.reset();
  EXPECT_THROW(run_episode(Scene{}, c), ArgumentError);
  c = make_config();
  c.epsilon = 0.0;
  EXPECT_THROW(run_episode(Scene{}, c), ArgumentError);
}

TEST(TrainingSample, CurtainCountIsUniform)
{
  std::mt19937_64 rng(123);
  const std::size_t k_max = 3;
  const int draws = 10000;
  std::vector<int> hist(k_max + 1, 0);
  for (int i = 0; i < draws; ++i) {
    const std::size_t k = sample_curtain_count(k_max, rng);
    ASSERT_LE(k, k_max);
    ++hist[k];
  }
  const double p = 1.0 / static_cast<double>(k_max + 1);
  const double mean = draws * p;
  const double sigma = std::sqrt(draws * p * (1.0 - p));
  for (const int h : hist) {
    EXPECT_NEAR(h, mean, 3.0 * sigma);
  }
}

TEST(TrainingSample, ForcedCountsMatchEpisode)
{
  const EpisodeConfig c = make_config();
  const TrainingSample none = training_sample_with(four_cars(), c, 0);
  EXPECT_EQ(none.k, 0u);
  for (const SensedPoint & p : none.cloud.points) {
    EXPECT_EQ(p.source, PointSource::kLidar);
  }
  EXPECT_EQ(training_sample_with(four_cars(), c, 3).cloud.points, run_episode(four_cars(), c).cloud.points);
  EXPECT_THROW(training_sample_with(four_cars(), c, 4), ArgumentError);

  std::mt19937_64 rng(8);
  const TrainingSample drawn = generate_training_sample(four_cars(), c, rng);
  EXPECT_LE(drawn.k, 3u);
  EXPECT_EQ(drawn.cloud.points, training_sample_with(four_cars(), c, drawn.k).cloud.points);
}

TEST(StepSeed, DistinctPerStep)
{
  EXPECT_EQ(step_seed(5, 1), step_seed(5, 1));
  EXPECT_NE(step_seed(5, 1), step_seed(5, 2));
  EXPECT_NE(step_seed(5, 1), step_seed(6, 1));
}

}  // namespace
}  // namespace curtain
