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

#include "halftruth/model.hpp"

#include <algorithm>
#include <string>

#include "halftruth/error.hpp"

namespace halftruth {
namespace {

// Tolerance on the linear coefficient sum, to accept values that went
// through a decimal round trip.
constexpr double kCoeffSumSlack = 1e-12;

bool is_probability(double v) { return v >= 0.0 && v <= 1.0; }

std::string node_tag(std::size_t i) { return "node " + std::to_string(i); }

void validate_transition(const Stage1Node& node, std::size_t i) {
  const std::size_t arity = node.parents.size();
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, GeneralTransition>) {
          if (arity > kMaxEnumeratedParents) {
            throw Error(ErrorCode::kParentCapExceeded,
                        node_tag(i) + " has " + std::to_string(arity) +
                            " parents, general tables allow at most " +
                            std::to_string(kMaxEnumeratedParents));
          }
          if (t.table.size() != (std::size_t{1} << arity)) {
            throw Error(ErrorCode::kTableLengthMismatch,
                        node_tag(i) + " general table needs 2^" +
                            std::to_string(arity) + " entries");
          }
          for (double v : t.table) {
            if (!is_probability(v)) {
              throw Error(ErrorCode::kProbabilityOutOfRange, node_tag(i));
            }
          }
        } else if constexpr (std::is_same_v<T, AdditiveTransition>) {
          if (t.table.size() != arity + 1) {
            throw Error(ErrorCode::kTableLengthMismatch,
                        node_tag(i) + " additive table needs " +
                            std::to_string(arity + 1) + " entries");
          }
          for (double v : t.table) {
            if (!is_probability(v)) {
              throw Error(ErrorCode::kProbabilityOutOfRange, node_tag(i));
            }
          }
        } else {
          if (t.coeffs.size() != arity) {
            throw Error(ErrorCode::kTableLengthMismatch,
                        node_tag(i) + " linear node needs " +
                            std::to_string(arity) + " coefficients");
          }
          double sum = 0.0;
          for (double a : t.coeffs) {
            if (!(a >= 0.0)) {
              throw Error(ErrorCode::kLinearCoeffsInvalid,
                          node_tag(i) + " has a negative coefficient");
            }
            sum += a;
          }
          if (sum > 1.0 + kCoeffSumSlack) {
            throw Error(ErrorCode::kLinearCoeffsInvalid,
                        node_tag(i) + " coefficients sum to " +
                            std::to_string(sum) + " > 1");
          }
        }
      },
      node.transition);
}

}  // namespace

TransitionKind kind_of(const Transition& transition) {
  return static_cast<TransitionKind>(transition.index());
}

std::string_view kind_name(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::kGeneral: return "general";
    case TransitionKind::kAdditive: return "additive";
    case TransitionKind::kLinear: return "linear";
  }
  return "unknown";
}

std::string_view action_name(MaskAction action) {
  return action == MaskAction::kHide ? "hide" : "flip";
}

Realization::Realization(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorCode::kSpecInvalid, "realization bits must be 0 or 1");
  }
}

Realization::Realization(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw Error(ErrorCode::kSpecInvalid, "realization bits must be 0 or 1");
    }
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

std::size_t Realization::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

Realization Realization::flipped(std::span<const Index> indices) const {
  Realization out = *this;
  for (Index j : indices) out.bits_.at(j) ^= 1;
  return out;
}

Mask::Mask(std::vector<Index> indices, MaskAction action)
    : indices_(std::move(indices)), action_(action) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::kSpecInvalid, "mask indices must be distinct");
  }
}

bool Mask::contains(Index j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

Mask Mask::with(Index j) const {
  Mask out = *this;
  auto pos = std::lower_bound(out.indices_.begin(), out.indices_.end(), j);
  out.indices_.insert(pos, j);
  return out;
}

void validate_model(const DbnModel& model) {
  for (std::size_t j = 0; j < model.priors.size(); ++j) {
    if (!is_probability(model.priors[j])) {
      throw Error(ErrorCode::kPriorOutOfRange,
                  "prior " + std::to_string(j) + " = " +
                      std::to_string(model.priors[j]));
    }
  }
  for (std::size_t i = 0; i < model.nodes.size(); ++i) {
    const auto& parents = model.nodes[i].parents;
    for (std::size_t pos = 0; pos < parents.size(); ++pos) {
      if (parents[pos] >= model.n0()) {
        throw Error(ErrorCode::kParentIndexOutOfRange,
                    node_tag(i) + " parent " + std::to_string(parents[pos]));
      }
      if (pos > 0 && parents[pos] <= parents[pos - 1]) {
        throw Error(ErrorCode::kParentIndexOutOfRange,
                    node_tag(i) + " parents must be sorted and distinct");
      }
    }
    validate_transition(model.nodes[i], i);
  }
}

void validate_mask(const DbnModel& model, const Mask& mask) {
  for (Index j : mask.indices()) {
    if (j >= model.n0()) {
      throw Error(ErrorCode::kParentIndexOutOfRange,
                  "mask index " + std::to_string(j) + " outside stage 0");
    }
  }
}

void validate_realization(const DbnModel& model, const Realization& x0) {
  if (x0.size() != model.n0()) {
    throw Error(ErrorCode::kLengthMismatch,
                "realization has length " + std::to_string(x0.size()) +
                    ", model n0 is " + std::to_string(model.n0()));
  }
}

double transition_prob(const Stage1Node& node,
                       std::span<const std::uint8_t> parent_values) {
  if (parent_values.size() != node.parents.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "got " + std::to_string(parent_values.size()) +
                    " parent values for " +
                    std::to_string(node.parents.size()) + " parents");
  }
  return std::visit(
      [&](const auto& t) -> double {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, GeneralTransition>) {
          std::size_t bits = 0;
          for (std::size_t j = 0; j < parent_values.size(); ++j) {
            if (parent_values[j]) bits |= std::size_t{1} << j;
          }
          return t.table.at(bits);
        } else if constexpr (std::is_same_v<T, AdditiveTransition>) {
          std::size_t z = 0;
          for (auto v : parent_values) z += v ? 1 : 0;
          return t.table.at(z);
        } else {
          double sum = 0.0;
          for (std::size_t j = 0; j < parent_values.size(); ++j) {
            if (parent_values[j]) sum += t.coeffs.at(j);
          }
          return sum;
        }
      },
      node.transition);
}

double transition_prob_at(const Stage1Node& node, const Realization& x0) {
  std::vector<std::uint8_t> values(node.parents.size());
  for (std::size_t j = 0; j < node.parents.size(); ++j) {
    values[j] = x0[node.parents[j]] ? 1 : 0;
  }
  return transition_prob(node, values);
}

Stage1Node additive_to_general(const Stage1Node& node) {
  const std::size_t arity = node.parents.size();
  if (arity > kMaxEnumeratedParents) {
    throw Error(ErrorCode::kParentCapExceeded,
                std::to_string(arity) + " parents exceed the general cap");
  }
  const std::size_t rows = std::size_t{1} << arity;
  GeneralTransition general;
  general.table.resize(rows);
  std::vector<std::uint8_t> values(arity);
  for (std::size_t bits = 0; bits < rows; ++bits) {
    for (std::size_t j = 0; j < arity; ++j) values[j] = (bits >> j) & 1U;
    general.table[bits] = transition_prob(node, values);
  }
  return Stage1Node{node.parents, std::move(general)};
}

Monotonicity monotonicity(const AdditiveTransition& transition) {
  const auto& t = transition.table;
  if (std::is_sorted(t.begin(), t.end())) return Monotonicity::kIncreasing;
  if (std::is_sorted(t.begin(), t.end(), std::greater<>())) {
    return Monotonicity::kDecreasing;
  }
  return Monotonicity::kNone;
}

}  // namespace halftruth
