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

#ifndef HALFTRUTH_INFERENCE_HPP_
#define HALFTRUTH_INFERENCE_HPP_

// Observer posteriors and the expected-Lp (Lukaszyk-Karmowski) distance
// between two product distributions over binary vectors.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "halftruth/model.hpp"

namespace halftruth {

// Per-node marginals P(X_i^1 = 1 | observation), length n1.
using PosteriorVector = std::vector<double>;

// Per-node probability that the two compared vectors differ, length n1.
using DisagreementVector = std::vector<double>;

class Norm {
 public:
  // Throws kWrongNorm for p == 0.
  static Norm finite(unsigned p);
  static Norm infinity() { return Norm(0); }
  // Accepts a positive integer or "inf".
  static Norm parse(const std::string& text);

  bool is_infinite() const { return p_ == 0; }
  unsigned p() const { return p_; }
  std::string to_string() const;

  friend bool operator==(Norm, Norm) = default;

 private:
  explicit Norm(unsigned p) : p_(p) {}
  unsigned p_;  // 0 encodes infinity
};

// Untargeted when `target` is empty; otherwise the desired marginals alpha.
struct ObjectiveMode {
  std::optional<PosteriorVector> target;

  static ObjectiveMode untargeted() { return {}; }
  static ObjectiveMode targeted(PosteriorVector alpha) {
    return {std::move(alpha)};
  }
  bool is_targeted() const { return target.has_value(); }
};

PosteriorVector true_posterior(const DbnModel& model, const Realization& x0);

// Observer marginalizes hidden stage-0 outcomes with their priors.
PosteriorVector masked_posterior(const DbnModel& model, const Realization& x0,
                                 const Mask& mask);

// Observer sees x0 with the masked bits inverted.
PosteriorVector flipped_posterior(const DbnModel& model, const Realization& x0,
                                  const Mask& mask);

// Dispatches on mask.action().
PosteriorVector observed_posterior(const DbnModel& model, const Realization& x0,
                                   const Mask& mask);

// Reference marginalization: enumerates every hidden parent assignment of
// every node through its General expansion. Used to cross-check the
// additive and linear fast paths.
PosteriorVector masked_posterior_by_enumeration(const DbnModel& model,
                                                const Realization& x0,
                                                const Mask& mask);

// d_i = q_i + r_i - 2 q_i r_i.
DisagreementVector disagreement(std::span<const double> q,
                                std::span<const double> r);

// pmf[m] = P(exactly m of the independent Bernoulli(d_i) succeed).
std::vector<double> poisson_binomial_pmf(std::span<const double> d);

// E[M^{1/p}] for the count distribution `pmf` (P(M >= 1) when p is infinite).
double lkm_from_pmf(std::span<const double> pmf, Norm norm);

// E||X - Y||_p for independent product vectors with disagreement d.
double lkm_distance(std::span<const double> d, Norm norm);

// Scores masks for one (model, x0, norm, mode). Higher is better for the
// attacker: untargeted returns D(q, r); targeted returns -D(alpha, r).
class ObjectiveEvaluator {
 public:
  ObjectiveEvaluator(const DbnModel& model, Realization x0, Norm norm,
                     ObjectiveMode mode);

  double operator()(const Mask& mask) const;

  const DbnModel& model() const { return *model_; }
  const Realization& x0() const { return x0_; }
  Norm norm() const { return norm_; }
  const ObjectiveMode& mode() const { return mode_; }
  const PosteriorVector& true_marginals() const { return q_; }
  // q for untargeted, alpha for targeted.
  const PosteriorVector& reference() const;

  std::size_t evaluations() const { return evaluations_; }

 private:
  const DbnModel* model_;
  Realization x0_;
  Norm norm_;
  ObjectiveMode mode_;
  PosteriorVector q_;
  mutable std::size_t evaluations_ = 0;
};

double objective_value(const DbnModel& model, const Realization& x0,
                       const Mask& mask, Norm norm, const ObjectiveMode& mode);

}  // namespace halftruth

#endif  // HALFTRUTH_INFERENCE_HPP_
