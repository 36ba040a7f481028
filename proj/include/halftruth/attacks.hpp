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

#ifndef HALFTRUTH_ATTACKS_HPP_
#define HALFTRUTH_ATTACKS_HPP_

// Mask-selection algorithms for hiding and flipping attacks. Every result's
// value is the attacker objective of its mask (higher is better).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halftruth/inference.hpp"
#include "halftruth/model.hpp"

namespace halftruth {

// Refuse brute force above this many candidate masks.
inline constexpr std::uint64_t kBruteForceMaskLimit = 10'000'000;

// Borrows the model; the model must outlive the problem.
class AttackProblem {
 public:
  // Clamps budget to n0; validates x0 and target lengths.
  AttackProblem(const DbnModel& model, Realization x0, std::size_t budget,
                Norm norm, MaskAction action,
                ObjectiveMode mode = ObjectiveMode::untargeted());

  const DbnModel& model() const { return *model_; }
  const Realization& x0() const { return x0_; }
  std::size_t budget() const { return budget_; }
  Norm norm() const { return norm_; }
  MaskAction action() const { return action_; }
  const ObjectiveMode& mode() const { return mode_; }

  ObjectiveEvaluator evaluator() const;

 private:
  const DbnModel* model_;
  Realization x0_;
  std::size_t budget_;
  Norm norm_;
  MaskAction action_;
  ObjectiveMode mode_;
};

struct AttackResult {
  Mask mask;
  double value = 0.0;
  std::string algorithm;
  std::size_t evaluations = 0;
};

enum class Algorithm {
  kBruteForce,
  kApprox,
  kHeuristic,
  kCombined,
  kLinearExact,
  kFlipApprox,
  kFlipLinearExact,
  kRandom,
};

std::string_view algorithm_name(Algorithm algorithm);
// Throws kSpecInvalid on unknown names.
Algorithm parse_algorithm(std::string_view name);

// Number of masks of size <= k over n elements, saturating at UINT64_MAX.
std::uint64_t count_masks(std::size_t n, std::size_t k);

// Exhaustive optimum over all masks of size <= k. Ties go to the
// lexicographically smallest index set.
AttackResult brute_force_attack(const AttackProblem& problem);

// n1-approximation for monotone additive networks (hide only).
AttackResult approx_attack(const AttackProblem& problem);

// Greedy hill climbing; returns the best prefix seen.
AttackResult heuristic_attack(const AttackProblem& problem);

// Better of approx and heuristic; heuristic alone when approx's
// preconditions fail.
AttackResult combined_attack(const AttackProblem& problem);

// Per-index change of the p = 1 objective when index r joins any mask, for
// linear networks. Hide gains carry the prior factor; flip gains do not.
std::vector<double> linear_gains(const AttackProblem& problem);

// Exact optimum for linear networks at p = 1 (hide).
AttackResult linear_exact_attack(const AttackProblem& problem);

// Greedy per-parent-partition search for flipping attacks.
AttackResult flip_approx_attack(const AttackProblem& problem);

// Exact optimum for linear networks at p = 1 (flip).
AttackResult flip_linear_exact_attack(const AttackProblem& problem);

// Uniform mask of size min(k, n0).
AttackResult random_mask_baseline(const AttackProblem& problem,
                                  std::uint64_t seed);

AttackResult run_attack(Algorithm algorithm, const AttackProblem& problem,
                        std::uint64_t seed = 0);

}  // namespace halftruth

#endif  // HALFTRUTH_ATTACKS_HPP_
