// Copyright 2026 The Authors.
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

#include "halftruth/simulate.hpp"

#include <chrono>
#include <cmath>

#include "halftruth/error.hpp"
#include "halftruth/generators.hpp"
#include "halftruth/model_io.hpp"
#include "halftruth/parallel.hpp"
#include "halftruth/random.hpp"

namespace halftruth {
namespace {

using Clock = std::chrono::steady_clock;

SimReport summarize(std::vector<double> values, Clock::time_point start,
                    bool keep) {
  SimReport report;
  report.trials = values.size();
  // Welford in trial order: constant samples give se = 0 exactly.
  double mean = 0.0, m2 = 0.0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    const double delta = values[t] - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (values[t] - mean);
  }
  report.mean = mean;
  if (values.size() > 1) {
    const double n = static_cast<double>(values.size());
    report.se = std::sqrt(m2 / (n - 1.0)) / std::sqrt(n);
  }
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - start)
                       .count();
  if (keep) report.samples = std::move(values);
  return report;
}

void require_trials(std::size_t trials) {
  if (trials < 1) throw Error(ErrorCode::kSpecInvalid, "trials must be >= 1");
}

}  // namespace

AttackPolicy algorithm_policy(Algorithm algorithm) {
  return [algorithm](const AttackProblem& problem, std::uint64_t seed) {
    return run_attack(algorithm, problem, seed).mask;
  };
}

AttackPolicy theorem1_oracle_policy() {
  return [](const AttackProblem& problem, std::uint64_t) {
    return theorem1_oracle_adversary(problem.model(), problem.x0(),
                                     problem.budget());
  };
}

AttackPolicy empty_mask_policy() {
  return [](const AttackProblem& problem, std::uint64_t) {
    return Mask::empty(problem.action());
  };
}

std::string report_to_json(const SimReport& report) {
  return "{\"mean\": " + format_double(report.mean) +
         ", \"se\": " + format_double(report.se) +
         ", \"trials\": " + std::to_string(report.trials) +
         ", \"wall_ms\": " + std::to_string(report.wall_ms) + "}";
}

SimReport run_expectation(const SimConfig& config) {
  if (!config.model) throw Error(ErrorCode::kSpecInvalid, "no model");
  if (!config.policy) throw Error(ErrorCode::kSpecInvalid, "no policy");
  require_trials(config.trials);
  const DbnModel& model = *config.model;
  validate_model(model);

  const auto start = Clock::now();
  std::vector<double> values(config.trials);
  parallel_for(config.trials, config.threads, [&](std::size_t t) {
    const std::uint64_t trial_seed = derive_seed(config.seed, t);
    AttackProblem problem(model, sample_realization(model, trial_seed),
                          config.budget, config.norm, config.action,
                          config.mode);
    const Mask mask = config.policy(problem, trial_seed);
    if (mask.size() > problem.budget()) {
      throw Error(ErrorCode::kSpecInvalid, "policy exceeded the budget");
    }
    values[t] = problem.evaluator()(mask);
  });
  return summarize(std::move(values), start, config.keep_samples);
}

SimReport run_sampled_distance(const DbnModel& model, const Realization& x0,
                               const Mask& mask, Norm norm, std::size_t trials,
                               std::uint64_t seed, unsigned threads) {
  require_trials(trials);
  const PosteriorVector q = true_posterior(model, x0);
  const PosteriorVector r = observed_posterior(model, x0, mask);

  const auto start = Clock::now();
  std::vector<double> values(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    std::size_t differing = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const bool x = rng.bernoulli(q[i]);
      const bool y = rng.bernoulli(r[i]);
      differing += x != y ? 1 : 0;
    }
    if (differing == 0) {
      values[t] = 0.0;
    } else if (norm.is_infinite()) {
      values[t] = 1.0;
    } else {
      values[t] = std::pow(static_cast<double>(differing), 1.0 / norm.p());
    }
  });
  return summarize(std::move(values), start, false);
}

}  // namespace halftruth
