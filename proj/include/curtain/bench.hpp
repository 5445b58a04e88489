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

#ifndef CURTAIN__BENCH_HPP_
#define CURTAIN__BENCH_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "curtain/errors.hpp"
#include "curtain/io.hpp"
#include "curtain/loop.hpp"
#include "curtain/planner.hpp"
#include "curtain/simulator.hpp"

namespace curtain
{

struct Interval
{
  double mean{0.0};
  double half_width{0.0};  // 95% two-sided, Student t
  std::size_t count{0};

  double lo() const { return mean - half_width; }
  double hi() const { return mean + half_width; }
};

inline Interval confidence_interval_95(const std::vector<double> & samples)
{
  if (samples.size() < 2) {
    throw ArgumentError("a confidence interval needs at least two samples");
  }
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (const double s : samples) {
    mean += s;
  }
  mean /= n;
  double ss = 0.0;
  for (const double s : samples) {
    ss += (s - mean) * (s - mean);
  }
  const double sd = std::sqrt(ss / (n - 1.0));
  const boost::math::students_t dist(n - 1.0);
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  return {mean, t * sd / std::sqrt(n), samples.size()};
}

inline bool intervals_overlap(const Interval & a, const Interval & b)
{
  return a.lo() <= b.hi() && b.lo() <= a.hi();
}

struct BenchRow
{
  std::string strategy;
  std::size_t k{0};
  Interval cumulative_time_s;   // LiDAR + every curtain up to k
  Interval plan_time_per_curtain_s;  // empty at k = 0
  double mean_entropy_removed{0.0};  // prior total minus entropy after step k
};

struct BenchReport
{
  std::vector<BenchRow> rows;
  std::size_t trials{0};
  std::size_t workers{1};
};

// Worker count: requested (0 = hardware concurrency), capped by the
// CURTAIN_THREADS environment variable and by the number of trials.
inline std::size_t bench_workers(std::size_t requested, std::size_t trials)
{
  std::size_t w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char * cap = std::getenv("CURTAIN_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) {
      w = std::min(w, static_cast<std::size_t>(v));
    }
  }
  return std::max<std::size_t>(1, std::min(w, trials));
}

// Times every strategy on `trials` scenes (cycling through the list) for
// k = 0..k_max curtains. Each trial is one isolated episode.
inline BenchReport run_bench(
  const std::vector<Scene> & scenes, const std::vector<Strategy> & strategies, std::size_t trials,
  const EpisodeConfig & base, std::size_t requested_workers = 1)
{
  if (scenes.empty()) {
    throw ArgumentError("benchmark needs at least one scene");
  }
  if (trials < 2) {
    throw ArgumentError("benchmark needs at least two trials");
  }
  const std::size_t k_max = base.k_max;
  const double prior_total = static_cast<double>(base.grid.size()) * binary_entropy(base.prior_p);

  BenchReport report;
  report.trials = trials;
  report.workers = bench_workers(requested_workers, trials);

  for (const Strategy & strategy : strategies) {
    EpisodeConfig config = base;
    config.strategy = strategy;
    // [trial][k]
    std::vector<std::vector<double>> cumulative(trials), plan(trials), removed(trials);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    const auto worker = [&]() {
        for (std::size_t i = next++; i < trials; i = next++) {
          try {
            EpisodeConfig c = config;
            c.seed = base.seed + i;
            const EpisodeLog log = run_episode(scenes[i % scenes.size()], c);
            double acc = 0.0, plan_acc = 0.0;
            for (const EpisodeStep & s : log.steps) {
              acc += s.step_time_s;
              plan_acc += s.plan_time_s;
              cumulative[i].push_back(acc);
              plan[i].push_back(s.k == 0 ? 0.0 : plan_acc / static_cast<double>(s.k));
              removed[i].push_back(prior_total - s.entropy_bits);
            }
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            error = std::current_exception();
            next = trials;
          }
        }
      };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < report.workers; ++w) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto & th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }

    for (std::size_t k = 0; k <= k_max; ++k) {
      std::vector<double> c, p;
      double rem = 0.0;
      for (std::size_t i = 0; i < trials; ++i) {
        c.push_back(cumulative[i][k]);
        p.push_back(plan[i][k]);
        rem += removed[i][k];
      }
      BenchRow row;
      row.strategy = strategy.name();
      row.k = k;
      row.cumulative_time_s = confidence_interval_95(c);
      row.plan_time_per_curtain_s = k == 0 ? Interval{0.0, 0.0, trials} : confidence_interval_95(p);
      row.mean_entropy_removed = rem / static_cast<double>(trials);
      report.rows.push_back(row);
    }
  }
  return report;
}

inline std::string bench_to_csv(const BenchReport & report)
{
  using io::format_double;
  std::string out =
    "strategy,k,trials,mean_time_s,ci95_half_width_s,mean_plan_time_s,plan_ci95_half_width_s,"
    "mean_entropy_removed_bits\n";
  for (const BenchRow & r : report.rows) {
    out += r.strategy + "," + std::to_string(r.k) + "," + std::to_string(r.cumulative_time_s.count) + "," +
      format_double(r.cumulative_time_s.mean) + "," + format_double(r.cumulative_time_s.half_width) + "," +
      format_double(r.plan_time_per_curtain_s.mean) + "," +
      format_double(r.plan_time_per_curtain_s.half_width) + "," + format_double(r.mean_entropy_removed) +
      "\n";
  }
  return out;
}

// Speed / accuracy pairs, one per (strategy, k).
inline std::string tradeoff_to_csv(const BenchReport & report)
{
  std::string out = "strategy,k,mean_time_s,mean_entropy_removed_bits\n";
  for (const BenchRow & r : report.rows) {
    out += r.strategy + "," + std::to_string(r.k) + "," + io::format_double(r.cumulative_time_s.mean) + "," +
      io::format_double(r.mean_entropy_removed) + "\n";
  }
  return out;
}

inline io::json bench_to_json(const BenchReport & report)
{
  io::json rows = io::json::array();
  for (const BenchRow & r : report.rows) {
    rows.push_back(
      {{"strategy", r.strategy}, {"k", r.k}, {"trials", r.cumulative_time_s.count},
        {"mean_time_s", r.cumulative_time_s.mean}, {"ci95_half_width_s", r.cumulative_time_s.half_width},
        {"mean_plan_time_s", r.plan_time_per_curtain_s.mean},
        {"plan_ci95_half_width_s", r.plan_time_per_curtain_s.half_width},
        {"mean_entropy_removed_bits", r.mean_entropy_removed}});
  }
  return {{"trials", report.trials}, {"workers", report.workers}, {"rows", rows}};
}

}  // namespace curtain

#endif  // CURTAIN__BENCH_HPP_
