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

#ifndef HALFTRUTH_CLI_HPP_
#define HALFTRUTH_CLI_HPP_

// Command-line harness: gen, attack, eval, sweep, simulate.
// Exit codes: 0 success, 2 invalid input or violated precondition,
// 3 I/O failure.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halftruth/attacks.hpp"
#include "halftruth/generators.hpp"

namespace halftruth {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

struct SweepConfig {
  Family family = Family::kRandomAdditive;
  std::vector<std::size_t> grid;
  double density = 0.3;
  bool monotone = true;
  double epsilon = 0.01;
  // Budget is `fixed_budget` when set, else ceil(budget_fraction * n).
  std::optional<std::size_t> fixed_budget;
  double budget_fraction = 0.1;
  std::vector<Algorithm> algorithms{Algorithm::kCombined, Algorithm::kApprox,
                                    Algorithm::kHeuristic, Algorithm::kRandom};
  Norm norm = Norm::finite(1);
  MaskAction action = MaskAction::kHide;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t brute_force_limit = 1'000'000;
  bool timing = false;
  std::filesystem::path output;
};

// Parses the JSON sweep configuration; throws kSpecInvalid / kParseError.
SweepConfig parse_sweep_config(std::string_view text);

std::size_t sweep_budget(const SweepConfig& config, std::size_t n);

// Seed of trial `trial` in the cell for size `n`; the same seed drives the
// model generator, the x0 draw and randomized algorithms.
std::uint64_t sweep_cell_seed(std::uint64_t master, std::size_t n,
                              std::size_t trial);

// CSV text with header
//   family,n,k,p,algorithm,trial,seed,value,opt_value,ratio,wall_ms
std::string run_sweep(const SweepConfig& config, unsigned threads);

}  // namespace halftruth

#endif  // HALFTRUTH_CLI_HPP_
