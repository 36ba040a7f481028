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

#ifndef HALFTRUTH_MODEL_HPP_
#define HALFTRUTH_MODEL_HPP_

// Two-stage dynamic Bayes network over binary variables. Stage-0 variables
// are independent with priors p_j; every stage-1 node depends only on its
// stage-0 parents through one of three transition families.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace halftruth {

using Index = std::size_t;

// Enumeration cap for General tables and for hidden-parent enumeration.
inline constexpr std::size_t kMaxEnumeratedParents = 20;

// Indexed by the parent-assignment bitmask: the parent at position j of the
// node's sorted parent list occupies bit j.
struct GeneralTransition {
  std::vector<double> table;

  friend bool operator==(const GeneralTransition&, const GeneralTransition&) = default;
};

// Indexed by z, the number of parents realized as 1. Length |Pa| + 1.
struct AdditiveTransition {
  std::vector<double> table;

  friend bool operator==(const AdditiveTransition&, const AdditiveTransition&) = default;
};

// P(X_i^1 = 1 | parents) = sum_j a_ij x_j, with a_ij >= 0 and sum_j a_ij <= 1.
struct LinearTransition {
  std::vector<double> coeffs;

  friend bool operator==(const LinearTransition&, const LinearTransition&) = default;
};

using Transition =
    std::variant<GeneralTransition, AdditiveTransition, LinearTransition>;

enum class TransitionKind { kGeneral, kAdditive, kLinear };

TransitionKind kind_of(const Transition& transition);
std::string_view kind_name(TransitionKind kind);

struct Stage1Node {
  std::vector<Index> parents;  // sorted, duplicate-free
  Transition transition;
};

struct DbnModel {
  std::vector<double> priors;  // P(X_j^0 = 1)
  std::vector<Stage1Node> nodes;

  std::size_t n0() const { return priors.size(); }
  std::size_t n1() const { return nodes.size(); }
};

// A concrete stage-0 outcome vector drawn by nature.
class Realization {
 public:
  Realization() = default;
  explicit Realization(std::vector<std::uint8_t> bits);
  Realization(std::initializer_list<int> bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](Index j) const { return bits_[j] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t count_ones() const;

  // Copy with the bits at `indices` inverted.
  Realization flipped(std::span<const Index> indices) const;

  friend bool operator==(const Realization&, const Realization&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

enum class MaskAction { kHide, kFlip };

std::string_view action_name(MaskAction action);

// The adversary's action: a sorted, duplicate-free set of stage-0 indices.
class Mask {
 public:
  Mask() = default;
  // Sorts `indices`; throws kSpecInvalid on duplicates.
  Mask(std::vector<Index> indices, MaskAction action);

  static Mask empty(MaskAction action) { return Mask({}, action); }

  std::span<const Index> indices() const { return indices_; }
  MaskAction action() const { return action_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(Index j) const;

  // Copy with `j` inserted at its sorted position (j must not be present).
  Mask with(Index j) const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  std::vector<Index> indices_;
  MaskAction action_ = MaskAction::kHide;
};

// Throws halftruth::Error naming the first violated invariant and node index.
void validate_model(const DbnModel& model);

// Checks that every mask index lies in [0, n0).
void validate_mask(const DbnModel& model, const Mask& mask);

// Throws kLengthMismatch unless x0 has length n0.
void validate_realization(const DbnModel& model, const Realization& x0);

// P(X_i^1 = 1 | parent_values); parent_values follows the node's parent order.
double transition_prob(const Stage1Node& node,
                       std::span<const std::uint8_t> parent_values);

// Same, with the parent values read out of a full stage-0 vector.
double transition_prob_at(const Stage1Node& node, const Realization& x0);

// Expands an additive or linear node into an equivalent General table.
Stage1Node additive_to_general(const Stage1Node& node);

enum class Monotonicity { kIncreasing, kDecreasing, kNone };

// Non-strict scan of an additive table; a constant table reads as increasing.
Monotonicity monotonicity(const AdditiveTransition& transition);

}  // namespace halftruth

#endif  // HALFTRUTH_MODEL_HPP_
