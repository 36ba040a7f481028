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

#include "halftruth/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "halftruth/error.hpp"
#include "halftruth/random.hpp"

namespace halftruth {
namespace {

constexpr std::uint64_t kRealizationStream = 0x7265616c697a65ULL;

void spec_error(const std::string& what) {
  throw Error(ErrorCode::kSpecInvalid, what);
}

std::vector<Index> all_indices(std::size_t n) {
  std::vector<Index> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = j;
  return out;
}

std::vector<double> linear_weights(Rng& rng, std::size_t count) {
  std::vector<double> w(count);
  double sum = 0.0;
  for (auto& v : w) {
    v = 1.0 - rng.uniform();  // (0, 1]
    sum += v;
  }
  const double denom = sum + rng.uniform();
  for (auto& v : w) v /= denom;
  // Rounding can leave the normalized sum a few ulps above 1.
  for (;;) {
    double total = 0.0;
    for (double v : w) total += v;
    if (total <= 1.0) break;
    for (auto& v : w) v = std::nextafter(v, 0.0);
  }
  return w;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kRandomGeneral: return "random_general";
    case Family::kRandomAdditive: return "random_additive";
    case Family::kRandomLinear: return "random_linear";
    case Family::kTheorem1: return "theorem1";
    case Family::kHeuristicAdversarial: return "heuristic_adversarial";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::kRandomGeneral, Family::kRandomAdditive,
                 Family::kRandomLinear, Family::kTheorem1,
                 Family::kHeuristicAdversarial}) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorCode::kSpecInvalid,
              "unknown family \"" + std::string(name) + "\"");
}

void validate_spec(const GenSpec& spec) {
  if (!(spec.edge_density >= 0.0 && spec.edge_density <= 1.0)) {
    spec_error("edge density must lie in [0, 1]");
  }
  switch (spec.family) {
    case Family::kRandomGeneral:
    case Family::kRandomAdditive:
    case Family::kRandomLinear:
      if (spec.n1 > 0 && spec.n0 == 0) {
        spec_error("stage-1 nodes need at least one stage-0 variable");
      }
      break;
    case Family::kTheorem1:
      if (spec.n0 < 2 || spec.n1 != spec.n0) {
        spec_error("theorem1 requires n0 = n1 >= 2");
      }
      break;
    case Family::kHeuristicAdversarial:
      if (spec.n0 < 4 || spec.n0 % 2 != 0 || spec.n1 != spec.n0) {
        spec_error("heuristic_adversarial requires even n0 = n1 >= 4");
      }
      if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0) ||
          spec.epsilon * static_cast<double>(spec.n0 / 2) > 1.0) {
        spec_error("heuristic_adversarial requires 0 < eps < 1 and eps*n/2 <= 1");
      }
      break;
  }
}

DbnModel generate(const GenSpec& spec) {
  validate_spec(spec);
  switch (spec.family) {
    case Family::kTheorem1:
      return gen_theorem1(spec.n0, PosteriorVector(spec.n0, 1.0),
                          PosteriorVector(spec.n0, 0.0));
    case Family::kHeuristicAdversarial:
      return gen_heuristic_adversarial(spec.n0, spec.epsilon);
    default:
      return gen_random(spec);
  }
}

DbnModel gen_random(const GenSpec& spec) {
  validate_spec(spec);
  if (spec.family != Family::kRandomGeneral &&
      spec.family != Family::kRandomAdditive &&
      spec.family != Family::kRandomLinear) {
    spec_error("gen_random needs a random_* family");
  }
  Rng rng(spec.seed);
  DbnModel model;
  model.priors.resize(spec.n0);
  for (auto& p : model.priors) p = rng.uniform();

  model.nodes.reserve(spec.n1);
  for (std::size_t i = 0; i < spec.n1; ++i) {
    Stage1Node node;
    for (Index j = 0; j < spec.n0; ++j) {
      if (rng.uniform() < spec.edge_density) node.parents.push_back(j);
    }
    if (node.parents.empty()) node.parents.push_back(rng.below(spec.n0));
    const std::size_t arity = node.parents.size();

    switch (spec.family) {
      case Family::kRandomGeneral: {
        if (arity > kMaxEnumeratedParents) {
          spec_error("node " + std::to_string(i) + " drew " +
                     std::to_string(arity) +
                     " parents; general tables allow at most " +
                     std::to_string(kMaxEnumeratedParents));
        }
        GeneralTransition t;
        t.table.resize(std::size_t{1} << arity);
        for (auto& v : t.table) v = rng.uniform();
        node.transition = std::move(t);
        break;
      }
      case Family::kRandomAdditive: {
        AdditiveTransition t;
        t.table.resize(arity + 1);
        for (auto& v : t.table) v = rng.uniform();
        if (spec.monotone) std::sort(t.table.begin(), t.table.end());
        node.transition = std::move(t);
        break;
      }
      default:
        node.transition = LinearTransition{linear_weights(rng, arity)};
        break;
    }
    model.nodes.push_back(std::move(node));
  }
  return model;
}

DbnModel gen_theorem1(std::size_t n, const PosteriorVector& a,
                      const PosteriorVector& b) {
  if (n < 2) spec_error("theorem1 requires n >= 2");
  if (a.size() != n || b.size() != n) {
    spec_error("theorem1 needs a and b of length n");
  }
  const double nd = static_cast<double>(n);
  DbnModel model;
  model.priors.assign(n, std::log(nd) / nd);
  const auto parents = all_indices(n);
  model.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AdditiveTransition t;
    t.table.assign(n + 1, b[i]);
    t.table[0] = a[i];
    model.nodes.push_back(Stage1Node{parents, std::move(t)});
  }
  validate_model(model);
  return model;
}

Mask theorem1_oracle_adversary(const DbnModel& model, const Realization& x0,
                               std::size_t k) {
  const std::size_t n = model.n0();
  auto wrong = [](const std::string& why) {
    throw Error(ErrorCode::kWrongFamily, "not a theorem1 network: " + why);
  };
  if (n < 2 || model.n1() != n) wrong("needs n0 = n1 >= 2");
  const double eps = std::log(static_cast<double>(n)) / static_cast<double>(n);
  for (double p : model.priors) {
    if (std::abs(p - eps) > 1e-12) wrong("priors must equal ln(n)/n");
  }
  for (const auto& node : model.nodes) {
    if (node.parents.size() != n) wrong("parents must cover stage 0");
    const auto* t = std::get_if<AdditiveTransition>(&node.transition);
    if (!t) wrong("transitions must be additive");
    if (std::adjacent_find(t->table.begin() + 1, t->table.end(),
                           std::not_equal_to<>()) != t->table.end()) {
      wrong("table must be constant for z >= 1");
    }
  }
  validate_realization(model, x0);
  k = std::min(k, n);

  const std::size_t m = x0.count_ones();
  std::vector<Index> hide;
  if (m == 0) {
    hide = all_indices(k);
  } else if (m <= k) {
    for (Index j = 0; j < n; ++j) {
      if (x0[j]) hide.push_back(j);
    }
  }
  return Mask(std::move(hide), MaskAction::kHide);
}

DbnModel gen_heuristic_adversarial(std::size_t n, double eps) {
  GenSpec spec{Family::kHeuristicAdversarial, n, n, 0.0, false, 0, eps};
  validate_spec(spec);
  const std::size_t half = n / 2;
  DbnModel model;
  model.priors.assign(n, 1.0 - eps);

  AdditiveTransition first;
  first.table.resize(half + 1);
  for (std::size_t z = 0; z <= half; ++z) {
    first.table[z] = eps * static_cast<double>(z);
  }
  std::vector<Index> first_half(half), second_half(half);
  for (std::size_t j = 0; j < half; ++j) {
    first_half[j] = j;
    second_half[j] = half + j;
  }
  model.nodes.push_back(Stage1Node{first_half, std::move(first)});

  AdditiveTransition threshold;
  threshold.table.assign(half + 1, 0.0);
  threshold.table[half] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    model.nodes.push_back(Stage1Node{second_half, threshold});
  }
  return model;
}

Realization sample_realization(const DbnModel& model, std::uint64_t seed) {
  Rng rng(derive_seed(seed, kRealizationStream));
  std::vector<std::uint8_t> bits(model.n0());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    bits[j] = rng.bernoulli(model.priors[j]) ? 1 : 0;
  }
  return Realization(std::move(bits));
}

}  // namespace halftruth
