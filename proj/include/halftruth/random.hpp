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

#ifndef HALFTRUTH_RANDOM_HPP_
#define HALFTRUTH_RANDOM_HPP_

// Seeded randomness with a portable output sequence. std::mt19937_64 is fully
// specified by the standard; the std:: distributions are not, so the mapping
// from engine output to doubles and bounded integers is done here.

#include <cstdint>
#include <random>
#include <vector>

namespace halftruth {

std::uint64_t splitmix64(std::uint64_t x);

// Seed for an independent sub-stream, e.g. trial `index` under `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform on [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  // `count` distinct values from [0, n), in the order drawn.
  std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n,
                                                        std::uint64_t count);

 private:
  std::mt19937_64 engine_;
};

}  // namespace halftruth

#endif  // HALFTRUTH_RANDOM_HPP_
