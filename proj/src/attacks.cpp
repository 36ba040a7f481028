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

#include "halftruth/attacks.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "halftruth/error.hpp"
#include "halftruth/random.hpp"

namespace halftruth {
namespace {

// Running best mask with the first-seen-wins tie rule.
struct BestMask {
  Mask mask;
  double value;

  void offer(const Mask& candidate, double candidate_value) {
    if (candidate_value > value) {
      mask = candidate;
      value = candidate_value;
    }
  }
};

void require_action(const AttackProblem& problem, MaskAction action) {
  if (problem.action() != action) {
    throw Error(ErrorCode::kWrongAction,
                "algorithm requires action " + std::string(action_name(action)));
  }
}

void require_linear_l1(const AttackProblem& problem) {
  if (problem.norm() != Norm::finite(1)) {
    throw Error(ErrorCode::kWrongNorm, "linear solvers require p = 1");
  }
  const auto& nodes = problem.model().nodes;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (kind_of(nodes[i].transition) != TransitionKind::kLinear) {
      throw Error(ErrorCode::kNonLinearTransition,
                  "node " + std::to_string(i) + " is " +
                      std::string(kind_name(kind_of(nodes[i].transition))));
    }
  }
}

AttackResult finish(const BestMask& best, std::string_view name,
                    const ObjectiveEvaluator& eval) {
  return AttackResult{best.mask, best.value, std::string(name),
                      eval.evaluations()};
}

// Greedily extends `mask` from `candidates` (ascending) while it is smaller
// than `budget`, each time adding the candidate with the largest objective;
// every prefix is offered to `best`.
void greedy_extend(Mask& mask, const std::vector<Index>& candidates,
                   std::size_t budget, const ObjectiveEvaluator& eval,
                   BestMask& best) {
  while (mask.size() < budget) {
    std::optional<Mask> pick;
    double pick_value = -std::numeric_limits<double>::infinity();
    for (Index j : candidates) {
      if (mask.contains(j)) continue;
      Mask candidate = mask.with(j);
      const double v = eval(candidate);
      if (!pick || v > pick_value) {
        pick = std::move(candidate);
        pick_value = v;
      }
    }
    if (!pick) return;
    mask = std::move(*pick);
    best.offer(mask, pick_value);
  }
}

AttackResult select_positive_gains(const AttackProblem& problem,
                                   std::string_view name) {
  const std::vector<double> gains = linear_gains(problem);
  std::vector<Index> order;
  for (Index r = 0; r < gains.size(); ++r) {
    if (gains[r] > 0.0) order.push_back(r);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return gains[a] > gains[b]; });
  if (order.size() > problem.budget()) order.resize(problem.budget());
  const ObjectiveEvaluator eval = problem.evaluator();
  Mask mask(std::move(order), problem.action());
  const double value = eval(mask);
  return AttackResult{std::move(mask), value, std::string(name),
                      eval.evaluations()};
}

}  // namespace

AttackProblem::AttackProblem(const DbnModel& model, Realization x0,
                             std::size_t budget, Norm norm, MaskAction action,
                             ObjectiveMode mode)
    : model_(&model),
      x0_(std::move(x0)),
      budget_(std::min(budget, model.n0())),
      norm_(norm),
      action_(action),
      mode_(std::move(mode)) {
  validate_realization(model, x0_);
  if (mode_.is_targeted() && mode_.target->size() != model.n1()) {
    throw Error(ErrorCode::kLengthMismatch, "target length differs from n1");
  }
}

ObjectiveEvaluator AttackProblem::evaluator() const {
  return ObjectiveEvaluator(*model_, x0_, norm_, mode_);
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBruteForce: return "brute_force";
    case Algorithm::kApprox: return "approx";
    case Algorithm::kHeuristic: return "heuristic";
    case Algorithm::kCombined: return "combined";
    case Algorithm::kLinearExact: return "linear_exact";
    case Algorithm::kFlipApprox: return "flip_approx";
    case Algorithm::kFlipLinearExact: return "flip_linear_exact";
    case Algorithm::kRandom: return "random";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::kBruteForce, Algorithm::kApprox,
                 Algorithm::kHeuristic, Algorithm::kCombined,
                 Algorithm::kLinearExact, Algorithm::kFlipApprox,
                 Algorithm::kFlipLinearExact, Algorithm::kRandom}) {
    if (algorithm_name(a) == name) return a;
  }
  throw Error(ErrorCode::kSpecInvalid,
              "unknown algorithm \"" + std::string(name) + "\"");
}

std::uint64_t count_masks(std::size_t n, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  k = std::min(k, n);
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, m)
  for (std::size_t m = 0; m <= k; ++m) {
    if (m > 0) {
      // C(n, m) = C(n, m-1) * (n-m+1) / m, exact in 128-bit.
      const unsigned __int128 next =
          static_cast<unsigned __int128>(binom) * (n - m + 1) / m;
      if (next > kMax) return kMax;
      binom = static_cast<std::uint64_t>(next);
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

AttackResult brute_force_attack(const AttackProblem& problem) {
  const std::size_t n0 = problem.model().n0();
  const std::size_t k = problem.budget();
  const std::uint64_t masks = count_masks(n0, k);
  if (masks > kBruteForceMaskLimit) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(masks) + " candidate masks exceed the limit of " +
                    std::to_string(kBruteForceMaskLimit));
  }
  const ObjectiveEvaluator eval = problem.evaluator();
  const Mask empty = Mask::empty(problem.action());
  BestMask best{empty, eval(empty)};

  // Depth-first enumeration visits index sets in lexicographic order.
  std::vector<Index> current;
  auto visit = [&](auto&& self, Index start) -> void {
    for (Index j = start; j < n0; ++j) {
      current.push_back(j);
      Mask mask(current, problem.action());
      best.offer(mask, eval(mask));
      if (current.size() < k) self(self, j + 1);
      current.pop_back();
    }
  };
  if (k > 0) visit(visit, 0);
  return finish(best, algorithm_name(Algorithm::kBruteForce), eval);
}

AttackResult approx_attack(const AttackProblem& problem) {
  require_action(problem, MaskAction::kHide);
  const DbnModel& model = problem.model();
  std::vector<Monotonicity> direction(model.n1());
  for (std::size_t i = 0; i < model.n1(); ++i) {
    const auto* additive =
        std::get_if<AdditiveTransition>(&model.nodes[i].transition);
    direction[i] = additive ? monotonicity(*additive) : Monotonicity::kNone;
    if (direction[i] == Monotonicity::kNone) {
      throw Error(ErrorCode::kNonMonotoneTransition,
                  "node " + std::to_string(i) +
                      (additive ? " has a non-monotone additive table"
                                : " is not additive"));
    }
  }

  const ObjectiveEvaluator eval = problem.evaluator();
  const Realization& x0 = problem.x0();
  const Mask empty = Mask::empty(MaskAction::kHide);
  BestMask best{empty, eval(empty)};

  for (std::size_t i = 0; i < model.n1(); ++i) {
    // Untargeted: push r_i away from q_i. Targeted: push r_i toward alpha_i.
    const bool push_up = problem.mode().is_targeted()
                             ? (*problem.mode().target)[i] >= 0.5
                             : eval.true_marginals()[i] < 0.5;
    const bool increasing = direction[i] == Monotonicity::kIncreasing;
    // Raising r needs hidden zeros under an increasing table, hidden ones
    // under a decreasing one; lowering r is the mirror case.
    const bool hide_ones = push_up != increasing;

    std::vector<Index> pool;
    for (Index parent : model.nodes[i].parents) {
      if (x0[parent] == hide_ones) pool.push_back(parent);
    }
    // Ones are most likely to read as 0 when their prior is small; zeros are
    // most likely to read as 1 when their prior is large.
    std::stable_sort(pool.begin(), pool.end(), [&](Index a, Index b) {
      return hide_ones ? model.priors[a] < model.priors[b]
                       : model.priors[a] > model.priors[b];
    });

    Mask mask = empty;
    for (Index j : pool) {
      if (mask.size() >= problem.budget()) break;
      mask = mask.with(j);
      best.offer(mask, eval(mask));
    }
  }
  return finish(best, algorithm_name(Algorithm::kApprox), eval);
}

AttackResult heuristic_attack(const AttackProblem& problem) {
  const ObjectiveEvaluator eval = problem.evaluator();
  const Mask empty = Mask::empty(problem.action());
  BestMask best{empty, eval(empty)};
  std::vector<Index> all(problem.model().n0());
  std::iota(all.begin(), all.end(), Index{0});
  Mask mask = empty;
  greedy_extend(mask, all, problem.budget(), eval, best);
  return finish(best, algorithm_name(Algorithm::kHeuristic), eval);
}

AttackResult combined_attack(const AttackProblem& problem) {
  AttackResult heuristic = heuristic_attack(problem);
  AttackResult approx;
  try {
    approx = approx_attack(problem);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonMonotoneTransition &&
        e.code() != ErrorCode::kWrongAction) {
      throw;
    }
    heuristic.algorithm = "combined(heuristic-only)";
    return heuristic;
  }
  const std::size_t evaluations = approx.evaluations + heuristic.evaluations;
  AttackResult out = heuristic.value > approx.value ? std::move(heuristic)
                                                    : std::move(approx);
  out.algorithm = std::string(algorithm_name(Algorithm::kCombined)) + "(" +
                  out.algorithm + ")";
  out.evaluations = evaluations;
  return out;
}

std::vector<double> linear_gains(const AttackProblem& problem) {
  require_linear_l1(problem);
  const DbnModel& model = problem.model();
  const Realization& x0 = problem.x0();
  const bool targeted = problem.mode().is_targeted();
  const PosteriorVector q = true_posterior(model, x0);
  const PosteriorVector& reference = targeted ? *problem.mode().target : q;
  // The p = 1 objective is sum_i (c_i + r_i - 2 c_i r_i) with c = q, or its
  // negation with c = alpha; both are affine in r_i with slope +-(1 - 2 c_i).
  const double sign = targeted ? -1.0 : 1.0;

  std::vector<double> gains(model.n0(), 0.0);
  for (std::size_t i = 0; i < model.n1(); ++i) {
    const auto& node = model.nodes[i];
    const auto& coeffs = std::get<LinearTransition>(node.transition).coeffs;
    const double slope = sign * (1.0 - 2.0 * reference[i]);
    for (std::size_t j = 0; j < node.parents.size(); ++j) {
      const Index r = node.parents[j];
      const double bit = x0[r] ? 1.0 : 0.0;
      // Change of r_i when index r joins the mask.
      const double shift = problem.action() == MaskAction::kHide
                               ? coeffs[j] * (model.priors[r] - bit)
                               : coeffs[j] * (1.0 - 2.0 * bit);
      gains[r] += slope * shift;
    }
  }
  return gains;
}

AttackResult linear_exact_attack(const AttackProblem& problem) {
  require_action(problem, MaskAction::kHide);
  return select_positive_gains(problem,
                               algorithm_name(Algorithm::kLinearExact));
}

AttackResult flip_linear_exact_attack(const AttackProblem& problem) {
  require_action(problem, MaskAction::kFlip);
  return select_positive_gains(problem,
                               algorithm_name(Algorithm::kFlipLinearExact));
}

AttackResult flip_approx_attack(const AttackProblem& problem) {
  require_action(problem, MaskAction::kFlip);
  const DbnModel& model = problem.model();
  const ObjectiveEvaluator eval = problem.evaluator();
  const Mask empty = Mask::empty(MaskAction::kFlip);
  BestMask best{empty, eval(empty)};

  std::vector<Index> all(model.n0());
  std::iota(all.begin(), all.end(), Index{0});
  for (const Stage1Node& node : model.nodes) {
    for (bool outcome : {false, true}) {
      std::vector<Index> side;
      for (Index parent : node.parents) {
        if (problem.x0()[parent] == outcome) side.push_back(parent);
      }
      Mask mask = empty;
      greedy_extend(mask, side, problem.budget(), eval, best);
      greedy_extend(mask, all, problem.budget(), eval, best);
    }
  }
  return finish(best, algorithm_name(Algorithm::kFlipApprox), eval);
}

AttackResult random_mask_baseline(const AttackProblem& problem,
                                  std::uint64_t seed) {
  Rng rng(seed);
  const auto drawn =
      rng.sample_without_replacement(problem.model().n0(), problem.budget());
  Mask mask(std::vector<Index>(drawn.begin(), drawn.end()), problem.action());
  const ObjectiveEvaluator eval = problem.evaluator();
  const double value = eval(mask);
  return AttackResult{std::move(mask), value,
                      std::string(algorithm_name(Algorithm::kRandom)),
                      eval.evaluations()};
}

AttackResult run_attack(Algorithm algorithm, const AttackProblem& problem,
                        std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kBruteForce: return brute_force_attack(problem);
    case Algorithm::kApprox: return approx_attack(problem);
    case Algorithm::kHeuristic: return heuristic_attack(problem);
    case Algorithm::kCombined: return combined_attack(problem);
    case Algorithm::kLinearExact: return linear_exact_attack(problem);
    case Algorithm::kFlipApprox: return flip_approx_attack(problem);
    case Algorithm::kFlipLinearExact: return flip_linear_exact_attack(problem);
    case Algorithm::kRandom: return random_mask_baseline(problem, seed);
  }
  throw Error(ErrorCode::kSpecInvalid, "unknown algorithm");
}

}  // namespace halftruth
