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

#include "halftruth/inference.hpp"

#include <cmath>
#include <map>

#include "halftruth/error.hpp"

namespace halftruth {
namespace {

std::vector<char> hidden_flags(const DbnModel& model, const Mask& mask) {
  std::vector<char> hidden(model.n0(), 0);
  for (Index j : mask.indices()) hidden[j] = 1;
  return hidden;
}

void check_inputs(const DbnModel& model, const Realization& x0,
                  const Mask& mask, MaskAction expected) {
  validate_realization(model, x0);
  validate_mask(model, mask);
  if (mask.action() != expected) {
    throw Error(ErrorCode::kWrongMaskAction,
                "expected a " + std::string(action_name(expected)) +
                    " mask, got " + std::string(action_name(mask.action())));
  }
}

// Sums table[bits] over the 2^h assignments of the hidden parents, weighted
// by their priors; observed parents keep their realized bits.
double enumerate_hidden(const GeneralTransition& t, const Stage1Node& node,
                        const DbnModel& model, const Realization& x0,
                        const std::vector<char>& hidden) {
  std::size_t base = 0;
  std::vector<std::size_t> hidden_pos;
  for (std::size_t j = 0; j < node.parents.size(); ++j) {
    const Index parent = node.parents[j];
    if (hidden[parent]) {
      hidden_pos.push_back(j);
    } else if (x0[parent]) {
      base |= std::size_t{1} << j;
    }
  }
  if (hidden_pos.size() > kMaxEnumeratedParents) {
    throw Error(ErrorCode::kParentCapExceeded,
                std::to_string(hidden_pos.size()) + " hidden parents");
  }
  const std::size_t h = hidden_pos.size();
  double total = 0.0;
  for (std::size_t y = 0; y < (std::size_t{1} << h); ++y) {
    double weight = 1.0;
    std::size_t bits = base;
    for (std::size_t b = 0; b < h; ++b) {
      const double p = model.priors[node.parents[hidden_pos[b]]];
      if ((y >> b) & 1U) {
        weight *= p;
        bits |= std::size_t{1} << hidden_pos[b];
      } else {
        weight *= 1.0 - p;
      }
    }
    total += weight * t.table[bits];
  }
  return total;
}

}  // namespace

Norm Norm::finite(unsigned p) {
  if (p == 0) throw Error(ErrorCode::kWrongNorm, "p must be at least 1");
  return Norm(p);
}

Norm Norm::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 1) {
    throw Error(ErrorCode::kWrongNorm, "norm must be a positive integer or inf, got \"" + text + "\"");
  }
  return finite(static_cast<unsigned>(v));
}

std::string Norm::to_string() const {
  return is_infinite() ? "inf" : std::to_string(p_);
}

PosteriorVector true_posterior(const DbnModel& model, const Realization& x0) {
  validate_realization(model, x0);
  PosteriorVector q(model.n1());
  for (std::size_t i = 0; i < model.n1(); ++i) {
    q[i] = transition_prob_at(model.nodes[i], x0);
  }
  return q;
}

PosteriorVector masked_posterior(const DbnModel& model, const Realization& x0,
                                 const Mask& mask) {
  check_inputs(model, x0, mask, MaskAction::kHide);
  const auto hidden = hidden_flags(model, mask);
  // Nodes sharing the same hidden parent set share one hidden-count pmf.
  std::map<std::vector<Index>, std::vector<double>> pmf_cache;

  PosteriorVector r(model.n1());
  for (std::size_t i = 0; i < model.n1(); ++i) {
    const Stage1Node& node = model.nodes[i];
    r[i] = std::visit(
        [&](const auto& t) -> double {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, GeneralTransition>) {
            return enumerate_hidden(t, node, model, x0, hidden);
          } else if constexpr (std::is_same_v<T, AdditiveTransition>) {
            std::size_t observed_sum = 0;
            std::vector<Index> hidden_parents;
            for (Index parent : node.parents) {
              if (hidden[parent]) {
                hidden_parents.push_back(parent);
              } else if (x0[parent]) {
                ++observed_sum;
              }
            }
            if (hidden_parents.empty()) return t.table[observed_sum];
            auto it = pmf_cache.find(hidden_parents);
            if (it == pmf_cache.end()) {
              std::vector<double> p(hidden_parents.size());
              for (std::size_t b = 0; b < p.size(); ++b) {
                p[b] = model.priors[hidden_parents[b]];
              }
              it = pmf_cache.emplace(hidden_parents, poisson_binomial_pmf(p)).first;
            }
            const auto& pmf = it->second;
            double total = 0.0;
            for (std::size_t m = 0; m < pmf.size(); ++m) {
              total += pmf[m] * t.table[observed_sum + m];
            }
            return total;
          } else {
            double total = 0.0;
            for (std::size_t j = 0; j < node.parents.size(); ++j) {
              const Index parent = node.parents[j];
              if (hidden[parent]) {
                total += t.coeffs[j] * model.priors[parent];
              } else if (x0[parent]) {
                total += t.coeffs[j];
              }
            }
            return total;
          }
        },
        node.transition);
  }
  return r;
}

PosteriorVector masked_posterior_by_enumeration(const DbnModel& model,
                                                const Realization& x0,
                                                const Mask& mask) {
  check_inputs(model, x0, mask, MaskAction::kHide);
  const auto hidden = hidden_flags(model, mask);
  PosteriorVector r(model.n1());
  for (std::size_t i = 0; i < model.n1(); ++i) {
    const Stage1Node general = additive_to_general(model.nodes[i]);
    r[i] = enumerate_hidden(std::get<GeneralTransition>(general.transition),
                            general, model, x0, hidden);
  }
  return r;
}

PosteriorVector flipped_posterior(const DbnModel& model, const Realization& x0,
                                  const Mask& mask) {
  check_inputs(model, x0, mask, MaskAction::kFlip);
  return true_posterior(model, x0.flipped(mask.indices()));
}

PosteriorVector observed_posterior(const DbnModel& model, const Realization& x0,
                                   const Mask& mask) {
  return mask.action() == MaskAction::kHide
             ? masked_posterior(model, x0, mask)
             : flipped_posterior(model, x0, mask);
}

DisagreementVector disagreement(std::span<const double> q,
                                std::span<const double> r) {
  if (q.size() != r.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(q.size()) + " vs " + std::to_string(r.size()));
  }
  DisagreementVector d(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    d[i] = q[i] + r[i] - 2.0 * q[i] * r[i];
  }
  return d;
}

std::vector<double> poisson_binomial_pmf(std::span<const double> d) {
  std::vector<double> pmf(d.size() + 1, 0.0);
  pmf[0] = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double p = d[i];
    // pmf over the first i+1 trials, updated in place from the top.
    pmf[i + 1] = pmf[i] * p;
    for (std::size_t m = i; m > 0; --m) {
      pmf[m] = pmf[m] * (1.0 - p) + pmf[m - 1] * p;
    }
    pmf[0] *= 1.0 - p;
  }
  return pmf;
}

double lkm_from_pmf(std::span<const double> pmf, Norm norm) {
  if (pmf.empty()) return 0.0;
  if (norm.is_infinite()) {
    double total = 0.0;
    for (std::size_t m = 1; m < pmf.size(); ++m) total += pmf[m];
    return total;
  }
  const double inv_p = 1.0 / norm.p();
  double total = 0.0;
  for (std::size_t m = 1; m < pmf.size(); ++m) {
    const double weight =
        norm.p() == 1 ? static_cast<double>(m)
                      : std::exp(std::log(static_cast<double>(m)) * inv_p);
    total += weight * pmf[m];
  }
  return total;
}

double lkm_distance(std::span<const double> d, Norm norm) {
  if (norm.is_infinite()) {
    double none = 1.0;
    for (double di : d) none *= 1.0 - di;
    return 1.0 - none;
  }
  if (norm.p() == 1) {
    double total = 0.0;
    for (double di : d) total += di;
    return total;
  }
  return lkm_from_pmf(poisson_binomial_pmf(d), norm);
}

ObjectiveEvaluator::ObjectiveEvaluator(const DbnModel& model, Realization x0,
                                       Norm norm, ObjectiveMode mode)
    : model_(&model),
      x0_(std::move(x0)),
      norm_(norm),
      mode_(std::move(mode)),
      q_(true_posterior(model, x0_)) {
  if (mode_.is_targeted() && mode_.target->size() != model.n1()) {
    throw Error(ErrorCode::kLengthMismatch,
                "target has length " + std::to_string(mode_.target->size()) +
                    ", model n1 is " + std::to_string(model.n1()));
  }
}

const PosteriorVector& ObjectiveEvaluator::reference() const {
  return mode_.is_targeted() ? *mode_.target : q_;
}

double ObjectiveEvaluator::operator()(const Mask& mask) const {
  ++evaluations_;
  const PosteriorVector r = observed_posterior(*model_, x0_, mask);
  const double distance = lkm_distance(disagreement(reference(), r), norm_);
  return mode_.is_targeted() ? -distance : distance;
}

double objective_value(const DbnModel& model, const Realization& x0,
                       const Mask& mask, Norm norm, const ObjectiveMode& mode) {
  return ObjectiveEvaluator(model, x0, norm, mode)(mask);
}

}  // namespace halftruth
