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

#ifndef CURTAIN__PLANNER_HPP_
#define CURTAIN__PLANNER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curtain/errors.hpp"
#include "curtain/geometry.hpp"
#include "curtain/uncertainty.hpp"

namespace curtain
{

// Entropy sums closer than this are treated as equal. Applies to the DP, the
// oracle and the greedy tie sets alike.
inline constexpr double kEntropyTieTol = 1e-9;
// Same for the squared-angle smoothness key.
inline constexpr double kSmoothnessTieTol = 1e-12;

struct PlacementScore
{
  double total_entropy{0.0};       // J, bits
  double smoothness_penalty{0.0};  // sum of squared laser-angle steps, rad^2
};

// H(X) for every lattice node, ray-major.
struct NodeEntropy
{
  std::size_t num_rays{0};
  std::size_t points_per_ray{0};
  std::vector<double> values;

  double at(std::size_t t, std::size_t k) const { return values[t * points_per_ray + k]; }
};

inline NodeEntropy node_entropies(const CandidateLattice & lattice, const EntropyMap & map)
{
  NodeEntropy h{lattice.num_rays(), lattice.points_per_ray(), {}};
  h.values.reserve(lattice.num_rays() * lattice.points_per_ray());
  for (std::size_t t = 0; t < lattice.num_rays(); ++t) {
    for (const ControlPoint & cp : lattice.candidates(t)) {
      h.values.push_back(lookup_entropy(map, cp.position));
    }
  }
  return h;
}

namespace detail
{

// Hierarchical order J_H: more entropy first, then less squared angle change.
// Returns -1 if a ranks above b, +1 if below, 0 when tied on both keys.
inline int compare_hierarchical(double j_a, double s_a, double j_b, double s_b)
{
  if (j_a > j_b + kEntropyTieTol) {return -1;}
  if (j_b > j_a + kEntropyTieTol) {return 1;}
  if (s_a < s_b - kSmoothnessTieTol) {return -1;}
  if (s_b < s_a - kSmoothnessTieTol) {return 1;}
  return 0;
}

inline double square(double v) { return v * v; }

inline void check_shape(const ConstraintGraph & graph, const NodeEntropy & h)
{
  if (h.num_rays != graph.num_rays() || h.points_per_ray != graph.points_per_ray() ||
    h.values.size() != graph.num_rays() * graph.points_per_ray())
  {
    throw ArgumentError("node entropies do not match the constraint graph");
  }
}

}  // namespace detail

inline double smoothness_penalty(const CurtainPlacement & placement)
{
  double s = 0.0;
  for (std::size_t t = 0; t + 1 < placement.points.size(); ++t) {
    s += detail::square(placement.points[t + 1].laser_angle - placement.points[t].laser_angle);
  }
  return s;
}

inline PlacementScore objective(const CurtainPlacement & placement, const EntropyMap & map)
{
  PlacementScore score;
  for (const ControlPoint & cp : placement.points) {
    score.total_entropy += lookup_entropy(map, cp.position);
  }
  score.smoothness_penalty = smoothness_penalty(placement);
  return score;
}

inline PlacementScore objective(const CurtainPlacement & placement, const NodeEntropy & h)
{
  PlacementScore score;
  for (std::size_t t = 0; t < placement.size(); ++t) {
    score.total_entropy += h.at(t, placement.candidate_indices[t]);
  }
  score.smoothness_penalty = smoothness_penalty(placement);
  return score;
}

// Tail values of the backward pass. Nodes with no feasible continuation to
// the last ray are marked non-viable.
struct ValueTable
{
  static constexpr std::size_t kNoSuccessor = std::numeric_limits<std::size_t>::max();

  std::size_t num_rays{0};
  std::size_t points_per_ray{0};
  std::vector<double> tail_entropy;     // J*_t(X)
  std::vector<double> tail_smoothness;  // smoothness of the J_H-best tail
  std::vector<std::size_t> successor;   // argmax on ray t+1
  std::vector<char> viable;

  std::size_t row(std::size_t t, std::size_t k) const { return t * points_per_ray + k; }
};

struct DpResult
{
  CurtainPlacement placement;
  PlacementScore score;
  ValueTable table;
};

// Exact maximizer of J = sum_t H(X_t) over feasible paths of the constraint
// graph, ranked by the hierarchical order (entropy, then smoothness, then
// lowest candidate index). Backward pass computes the tail optimum of every
// node from its successors; the forward pass reads the argmax chain.
// O(N * T * B_avg).
inline DpResult optimize_dp(const ConstraintGraph & graph, const NodeEntropy & h)
{
  detail::check_shape(graph, h);
  const std::size_t num_rays = graph.num_rays();
  const std::size_t n = graph.points_per_ray();
  const CandidateLattice & lattice = graph.lattice();

  ValueTable table;
  table.num_rays = num_rays;
  table.points_per_ray = n;
  table.tail_entropy.assign(num_rays * n, 0.0);
  table.tail_smoothness.assign(num_rays * n, 0.0);
  table.successor.assign(num_rays * n, ValueTable::kNoSuccessor);
  table.viable.assign(num_rays * n, 0);

  const std::size_t last = num_rays - 1;
  for (std::size_t k = 0; k < n; ++k) {
    table.tail_entropy[table.row(last, k)] = h.at(last, k);
    table.viable[table.row(last, k)] = 1;
  }

  for (std::size_t t = last; t-- > 0; ) {
    const auto here = lattice.candidates(t);
    const auto next = lattice.candidates(t + 1);
    bool any_viable = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = here[i].laser_angle;
      std::size_t best = ValueTable::kNoSuccessor;
      double best_j = 0.0;
      double best_s = 0.0;
      for (const std::uint32_t j : graph.successors(t, i)) {
        const std::size_t r = table.row(t + 1, j);
        if (!table.viable[r]) {
          continue;
        }
        const double cand_j = table.tail_entropy[r];
        const double cand_s = table.tail_smoothness[r] + detail::square(next[j].laser_angle - theta);
        // Successors arrive in increasing index order; only a strict
        // improvement replaces the incumbent.
        if (best == ValueTable::kNoSuccessor ||
          detail::compare_hierarchical(cand_j, cand_s, best_j, best_s) < 0)
        {
          best = j;
          best_j = cand_j;
          best_s = cand_s;
        }
      }
      if (best != ValueTable::kNoSuccessor) {
        const std::size_t r = table.row(t, i);
        table.tail_entropy[r] = h.at(t, i) + best_j;
        table.tail_smoothness[r] = best_s;
        table.successor[r] = best;
        table.viable[r] = 1;
        any_viable = true;
      }
    }
    if (!any_viable) {
      throw PlanningError(
              "no feasible curtain: no candidate on ray " + std::to_string(t) +
              " can reach the last ray", t);
    }
  }

  std::size_t start = ValueTable::kNoSuccessor;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = table.row(0, k);
    if (!table.viable[r]) {
      continue;
    }
    if (start == ValueTable::kNoSuccessor ||
      detail::compare_hierarchical(
        table.tail_entropy[r], table.tail_smoothness[r],
        table.tail_entropy[table.row(0, start)], table.tail_smoothness[table.row(0, start)]) < 0)
    {
      start = k;
    }
  }

  std::vector<std::size_t> path;
  path.reserve(num_rays);
  path.push_back(start);
  for (std::size_t t = 0; t < last; ++t) {
    path.push_back(table.successor[table.row(t, path.back())]);
  }

  DpResult result;
  result.placement = make_placement(lattice, path);
  result.score = objective(result.placement, h);
  result.table = std::move(table);
  return result;
}

inline DpResult optimize_dp(const ConstraintGraph & graph, const EntropyMap & map)
{
  return optimize_dp(graph, node_entropies(graph.lattice(), map));
}

struct OracleResult
{
  CurtainPlacement placement;
  PlacementScore score;
};

inline constexpr double kOracleMaxPaths = 1e7;

// Exhaustive search over every feasible path. Only for tiny instances; it is
// the reference the DP is tested against.
inline OracleResult brute_force_oracle(const ConstraintGraph & graph, const NodeEntropy & h)
{
  detail::check_shape(graph, h);
  const std::size_t num_rays = graph.num_rays();
  const std::size_t n = graph.points_per_ray();
  if (std::pow(static_cast<double>(n), static_cast<double>(num_rays)) > kOracleMaxPaths) {
    throw InstanceTooLargeError("brute-force oracle limited to N^T <= 1e7 placements");
  }
  const CandidateLattice & lattice = graph.lattice();

  std::vector<std::size_t> path(num_rays);
  std::vector<std::size_t> best_path;
  double best_j = 0.0;
  double best_s = 0.0;
  std::size_t deepest = 0;

  // Depth-first in lexicographic index order; only strict improvements
  // replace the incumbent.
  const auto visit = [&](auto && self, std::size_t t, double j, double s) -> void {
      deepest = std::max(deepest, t);
      if (t + 1 == num_rays) {
        if (best_path.empty() || detail::compare_hierarchical(j, s, best_j, best_s) < 0) {
          best_path = path;
          best_j = j;
          best_s = s;
        }
        return;
      }
      const double theta = lattice.at(t, path[t]).laser_angle;
      for (const std::uint32_t next : graph.successors(t, path[t])) {
        path[t + 1] = next;
        self(
          self, t + 1, j + h.at(t + 1, next),
          s + detail::square(lattice.at(t + 1, next).laser_angle - theta));
      }
    };

  for (std::size_t k = 0; k < n; ++k) {
    path[0] = k;
    visit(visit, 0, h.at(0, k), 0.0);
  }
  if (best_path.empty()) {
    throw PlanningError(
            "no feasible curtain: search never got past ray " + std::to_string(deepest), deepest);
  }
  OracleResult result;
  result.placement = make_placement(lattice, best_path);
  result.score = objective(result.placement, h);
  return result;
}

inline OracleResult brute_force_oracle(const ConstraintGraph & graph, const EntropyMap & map)
{
  return brute_force_oracle(graph, node_entropies(graph.lattice(), map));
}

enum class TieBreak
{
  kRandom,
  kMinAngleChange,
};

// Local baseline: highest-entropy start, then the highest-entropy successor at
// every step.
inline CurtainPlacement greedy(
  const ConstraintGraph & graph, const NodeEntropy & h, TieBreak tie_break, std::uint64_t seed = 0)
{
  detail::check_shape(graph, h);
  const CandidateLattice & lattice = graph.lattice();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> tied;

  const auto pick = [&](std::size_t t, auto && candidates, double prev_theta, bool has_prev) {
      double best = -1.0;
      for (const std::size_t k : candidates) {
        best = std::max(best, h.at(t, k));
      }
      tied.clear();
      for (const std::size_t k : candidates) {
        if (h.at(t, k) >= best - kEntropyTieTol) {
          tied.push_back(k);
        }
      }
      if (tie_break == TieBreak::kRandom) {
        std::uniform_int_distribution<std::size_t> dist(0, tied.size() - 1);
        return tied[dist(rng)];
      }
      if (!has_prev) {
        return tied.front();
      }
      std::size_t choice = tied.front();
      double best_delta = std::abs(lattice.at(t, choice).laser_angle - prev_theta);
      for (const std::size_t k : tied) {
        const double delta = std::abs(lattice.at(t, k).laser_angle - prev_theta);
        if (delta < best_delta) {
          best_delta = delta;
          choice = k;
        }
      }
      return choice;
    };

  std::vector<std::size_t> all(graph.points_per_ray());
  for (std::size_t k = 0; k < all.size(); ++k) {
    all[k] = k;
  }
  std::vector<std::size_t> path;
  path.reserve(graph.num_rays());
  path.push_back(pick(0, all, 0.0, false));
  std::vector<std::size_t> succ;
  for (std::size_t t = 0; t + 1 < graph.num_rays(); ++t) {
    const auto edges = graph.successors(t, path.back());
    if (edges.empty()) {
      throw PlanningError(
              "greedy dead end: candidate " + std::to_string(path.back()) + " on ray " +
              std::to_string(t) + " has no successor", t);
    }
    succ.assign(edges.begin(), edges.end());
    path.push_back(pick(t + 1, succ, lattice.at(t, path.back()).laser_angle, true));
  }
  return make_placement(lattice, path);
}

inline CurtainPlacement greedy(
  const ConstraintGraph & graph, const EntropyMap & map, TieBreak tie_break, std::uint64_t seed = 0)
{
  return greedy(graph, node_entropies(graph.lattice(), map), tie_break, seed);
}

// Depth range [lo, hi] that every ray of the lattice can reach.
struct DepthCoverage
{
  double lo;
  double hi;
};

inline DepthCoverage depth_coverage(const CandidateLattice & lattice)
{
  DepthCoverage c{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (std::size_t t = 0; t < lattice.num_rays(); ++t) {
    const auto cands = lattice.candidates(t);
    c.lo = std::max(c.lo, cands.front().position.z);
    c.hi = std::min(c.hi, cands.back().position.z);
  }
  return c;
}

// Candidate on ray t whose z is nearest to the given depth; lower index on
// ties. Candidate depth is increasing along every forward-facing ray.
inline std::size_t nearest_depth_candidate(const CandidateLattice & lattice, std::size_t t, double z)
{
  const auto cands = lattice.candidates(t);
  const auto it = std::lower_bound(
    cands.begin(), cands.end(), z,
    [](const ControlPoint & cp, double depth) {return cp.position.z < depth;});
  if (it == cands.begin()) {
    return 0;
  }
  if (it == cands.end()) {
    return cands.size() - 1;
  }
  const std::size_t hi = static_cast<std::size_t>(it - cands.begin());
  return (z - cands[hi - 1].position.z <= it->position.z - z) ? hi - 1 : hi;
}

inline CurtainPlacement frontoparallel_at(double z, const CandidateLattice & lattice)
{
  std::vector<std::size_t> path(lattice.num_rays());
  for (std::size_t t = 0; t < path.size(); ++t) {
    path[t] = nearest_depth_candidate(lattice, t, z);
  }
  return make_placement(lattice, path);
}

inline CurtainPlacement fixed_depth(double z, const CandidateLattice & lattice)
{
  const DepthCoverage c = depth_coverage(lattice);
  if (!(z >= c.lo && z <= c.hi)) {
    throw ArgumentError(
            "depth " + std::to_string(z) + " m is outside the lattice coverage [" +
            std::to_string(c.lo) + ", " + std::to_string(c.hi) + "]");
  }
  return frontoparallel_at(z, lattice);
}

namespace detail
{

inline bool within_budget(const CurtainPlacement & placement, double delta_theta_max)
{
  for (std::size_t t = 0; t + 1 < placement.size(); ++t) {
    if (std::abs(placement.points[t + 1].laser_angle - placement.points[t].laser_angle) > delta_theta_max) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline constexpr int kFrontoparallelDraws = 1000;

// Depth drawn uniformly from [z_min, z_max], redrawn until the frontoparallel
// curtain fits the angle budget (the lattice's laser budget by default).
inline CurtainPlacement random_frontoparallel(
  std::uint64_t seed, double z_min, double z_max, const CandidateLattice & lattice,
  std::optional<double> delta_theta_max = std::nullopt)
{
  const DepthCoverage c = depth_coverage(lattice);
  if (!(z_min <= z_max) || z_min < c.lo || z_max > c.hi) {
    throw ArgumentError("random depth range must lie within the lattice coverage");
  }
  const double budget = delta_theta_max.value_or(lattice.laser().delta_theta_max());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(z_min, z_max);
  for (int draw = 0; draw < kFrontoparallelDraws; ++draw) {
    CurtainPlacement p = frontoparallel_at(dist(rng), lattice);
    if (detail::within_budget(p, budget)) {
      return p;
    }
  }
  throw PlanningError("no feasible frontoparallel depth found in the random range", 0);
}

inline CurtainPlacement random_frontoparallel(
  std::uint64_t seed, const CandidateLattice & lattice, std::optional<double> delta_theta_max = std::nullopt)
{
  const DepthCoverage c = depth_coverage(lattice);
  return random_frontoparallel(seed, c.lo, c.hi, lattice, delta_theta_max);
}

// Frontoparallel curtain at the depth level (taken from the central ray's
// candidates) with the largest summed entropy; shallowest level on ties.
// Levels whose curtain exceeds the angle budget are skipped.
inline CurtainPlacement frontoparallel_uncertainty(
  const NodeEntropy & h, const CandidateLattice & lattice, std::optional<double> delta_theta_max = std::nullopt)
{
  const double budget = delta_theta_max.value_or(lattice.laser().delta_theta_max());
  const std::size_t center = (lattice.num_rays() - 1) / 2;
  const auto levels = lattice.candidates(center);
  double best_sum = -1.0;
  std::optional<CurtainPlacement> best;
  for (const ControlPoint & level : levels) {
    CurtainPlacement p = frontoparallel_at(level.position.z, lattice);
    if (!detail::within_budget(p, budget)) {
      continue;
    }
    double sum = 0.0;
    for (std::size_t t = 0; t < lattice.num_rays(); ++t) {
      sum += h.at(t, p.candidate_indices[t]);
    }
    if (sum > best_sum + kEntropyTieTol) {
      best_sum = sum;
      best = std::move(p);
    }
  }
  if (!best) {
    throw PlanningError("no frontoparallel depth level fits the angle budget", 0);
  }
  return *best;
}

inline CurtainPlacement frontoparallel_uncertainty(
  const EntropyMap & map, const CandidateLattice & lattice, std::optional<double> delta_theta_max = std::nullopt)
{
  return frontoparallel_uncertainty(node_entropies(lattice, map), lattice, delta_theta_max);
}

// Planner selector: dp, greedy-random, greedy-minangle, random, fixed:<z>,
// fp-uncertainty.
struct Strategy
{
  enum class Kind
  {
    kDp,
    kGreedyRandom,
    kGreedyMinAngle,
    kRandom,
    kFixed,
    kFpUncertainty,
  };

  Kind kind{Kind::kDp};
  double fixed_z{0.0};

  static Strategy parse(const std::string & text)
  {
    if (text == "dp") {return {Kind::kDp};}
    if (text == "greedy-random") {return {Kind::kGreedyRandom};}
    if (text == "greedy-minangle") {return {Kind::kGreedyMinAngle};}
    if (text == "random") {return {Kind::kRandom};}
    if (text == "fp-uncertainty") {return {Kind::kFpUncertainty};}
    if (text.rfind("fixed:", 0) == 0) {
      const std::string num = text.substr(6);
      std::size_t used = 0;
      double z = 0.0;
      try {
        z = std::stod(num, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used == 0 || used != num.size() || !std::isfinite(z)) {
        throw ArgumentError("bad fixed depth in strategy '" + text + "'");
      }
      return {Kind::kFixed, z};
    }
    throw ArgumentError("unknown strategy '" + text + "'");
  }

  std::string name() const
  {
    switch (kind) {
      case Kind::kDp: return "dp";
      case Kind::kGreedyRandom: return "greedy-random";
      case Kind::kGreedyMinAngle: return "greedy-minangle";
      case Kind::kRandom: return "random";
      case Kind::kFpUncertainty: return "fp-uncertainty";
      case Kind::kFixed: {
          std::string s = std::to_string(fixed_z);
          s.erase(s.find_last_not_of('0') + 1);
          if (s.back() == '.') {s.pop_back();}
          return "fixed:" + s;
        }
    }
    return "?";
  }
};

// Runs the selected planner. Fixed-depth outputs are checked against the
// galvanometer bound of the graph.
inline CurtainPlacement plan(
  const Strategy & strategy, const ConstraintGraph & graph, const NodeEntropy & h, std::uint64_t seed)
{
  const CandidateLattice & lattice = graph.lattice();
  CurtainPlacement placement;
  switch (strategy.kind) {
    case Strategy::Kind::kDp:
      return optimize_dp(graph, h).placement;
    case Strategy::Kind::kGreedyRandom:
      return greedy(graph, h, TieBreak::kRandom, seed);
    case Strategy::Kind::kGreedyMinAngle:
      return greedy(graph, h, TieBreak::kMinAngleChange, seed);
    case Strategy::Kind::kRandom:
      placement = random_frontoparallel(seed, lattice, graph.delta_theta_max());
      break;
    case Strategy::Kind::kFixed:
      placement = fixed_depth(strategy.fixed_z, lattice);
      break;
    case Strategy::Kind::kFpUncertainty:
      placement = frontoparallel_uncertainty(h, lattice, graph.delta_theta_max());
      break;
  }
  for (std::size_t t = 0; t + 1 < placement.size(); ++t) {
    if (!graph.has_edge(t, placement.candidate_indices[t], placement.candidate_indices[t + 1])) {
      throw PlanningError(
              strategy.name() + " curtain violates the galvanometer bound between rays " +
              std::to_string(t) + " and " + std::to_string(t + 1), t);
    }
  }
  return placement;
}

inline CurtainPlacement plan(
  const Strategy & strategy, const ConstraintGraph & graph, const EntropyMap & map, std::uint64_t seed)
{
  return plan(strategy, graph, node_entropies(graph.lattice(), map), seed);
}

}  // namespace curtain

#endif  // CURTAIN__PLANNER_HPP_
