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

#ifndef HALFTRUTH_GENERATORS_HPP_
#define HALFTRUTH_GENERATORS_HPP_

// Instance families for tests and experiments. Every generator is a pure
// function of its arguments (seed included).

#include <cstdint>
#include <optional>
#include <string_view>

#include "halftruth/inference.hpp"
#include "halftruth/model.hpp"

namespace halftruth {

enum class Family {
  kRandomGeneral,
  kRandomAdditive,
  kRandomLinear,
  kTheorem1,
  kHeuristicAdversarial,
};

std::string_view family_name(Family family);
Family parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::kRandomAdditive;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  double edge_density = 0.3;
  bool monotone = false;
  std::uint64_t seed = 0;
  // Only used by kHeuristicAdversarial.
  double epsilon = 0.01;
};

// Throws kSpecInvalid when the spec breaks its family's constraints.
void validate_spec(const GenSpec& spec);

// Any family; theorem1 uses the deterministic pair a = 1, b = 0.
DbnModel generate(const GenSpec& spec);

// Random bipartite structure: each (j, i) edge is drawn with probability
// edge_density, and a node left without parents gets one uniform parent.
// Priors are uniform on [0, 1). Tables are uniform; additive tables are
// sorted ascending when `monotone` is set; linear weights are uniform
// positive and divided by (sum + uniform slack).
DbnModel gen_random(const GenSpec& spec);

// n0 = n1 = n, complete bipartite parents, priors ln(n)/n, node i additive
// with table [a_i, b_i, ..., b_i].
DbnModel gen_theorem1(std::size_t n, const PosteriorVector& a,
                      const PosteriorVector& b);

// The case analysis optimal for the theorem1 family: no ones -> hide the
// first k indices; m <= k ones -> hide exactly those; otherwise hide nothing.
// Throws kWrongFamily if `model` is not a theorem1 network.
Mask theorem1_oracle_adversary(const DbnModel& model, const Realization& x0,
                               std::size_t k);

// Pathological network for greedy hill climbing: priors 1 - eps; node 0
// reads the first n/2 indices with table [0, eps, ..., (n/2) eps]; the other
// nodes read the last n/2 indices with a threshold at z = n/2. The intended
// realization is all zeros.
DbnModel gen_heuristic_adversarial(std::size_t n, double eps);

// x0 drawn from the priors on the stream derived from `seed`.
Realization sample_realization(const DbnModel& model, std::uint64_t seed);

}  // namespace halftruth

#endif  // HALFTRUTH_GENERATORS_HPP_
