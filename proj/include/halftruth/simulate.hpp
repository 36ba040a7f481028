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

#ifndef HALFTRUTH_SIMULATE_HPP_
#define HALFTRUTH_SIMULATE_HPP_

// Monte Carlo over nature's draws. Trial t always uses the stream
// derive_seed(seed, t), and the reduction runs in trial order, so reports
// are bit-identical for any thread count.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "halftruth/attacks.hpp"
#include "halftruth/inference.hpp"
#include "halftruth/model.hpp"

namespace halftruth {

// Chooses a mask for one drawn problem. `trial_seed` feeds randomized
// policies.
using AttackPolicy =
    std::function<Mask(const AttackProblem& problem, std::uint64_t trial_seed)>;

AttackPolicy algorithm_policy(Algorithm algorithm);
AttackPolicy theorem1_oracle_policy();
AttackPolicy empty_mask_policy();

struct SimConfig {
  const DbnModel* model = nullptr;
  AttackPolicy policy;
  std::size_t budget = 0;
  Norm norm = Norm::finite(1);
  ObjectiveMode mode;
  MaskAction action = MaskAction::kHide;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool keep_samples = false;
  unsigned threads = 1;
};

struct SimReport {
  double mean = 0.0;
  double se = 0.0;  // sample standard deviation / sqrt(trials)
  std::size_t trials = 0;
  std::int64_t wall_ms = 0;
  std::vector<double> samples;  // filled when requested
};

// {"mean": float, "se": float, "trials": int, "wall_ms": int}
std::string report_to_json(const SimReport& report);

// Mean attacker utility over x0 ~ priors.
SimReport run_expectation(const SimConfig& config);

// Samples x1 ~ q and y1 ~ r independently and averages ||x1 - y1||_p; the
// mean estimates lkm_distance(disagreement(q, r), norm).
SimReport run_sampled_distance(const DbnModel& model, const Realization& x0,
                               const Mask& mask, Norm norm, std::size_t trials,
                               std::uint64_t seed, unsigned threads = 1);

}  // namespace halftruth

#endif  // HALFTRUTH_SIMULATE_HPP_
