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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "halftruth/attacks.hpp"
#include "halftruth/cli.hpp"
#include "halftruth/generators.hpp"
#include "halftruth/inference.hpp"
#include "halftruth/model_io.hpp"
#include "halftruth/parallel.hpp"
#include "halftruth/simulate.hpp"
#include "oracles.hpp"

namespace halftruth {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

Realization random_x0(Rng& rng, std::size_t n) { return testing::random_realization(rng, n); }

Outcome linear_oracle(MaskAction action, std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  const int instances = 500;
  double worst = 0.0;
  for (int instance = 0; instance < instances; ++instance) {
    const std::size_t n0 = 1 + rng.below(12), n1 = 1 + rng.below(12);
    const DbnModel model = gen_random(GenSpec{Family::kRandomLinear, n0, n1, rng.uniform(),
                                              false, rng.below(1ULL << 40)});
    const ObjectiveMode mode = instance % 2
                                   ? ObjectiveMode::targeted(testing::random_probabilities(rng, n1))
                                   : ObjectiveMode::untargeted();
    const AttackProblem problem(model, random_x0(rng, n0), rng.below(5), Norm::finite(1),
                                action, mode);
    const double exact = action == MaskAction::kHide ? linear_exact_attack(problem).value
                                                     : flip_linear_exact_attack(problem).value;
    worst = std::max(worst, std::abs(exact - brute_force_attack(problem).value));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 60.0,
          fmt("%d instances, max |exact - brute| = %.3g (tol 1e-9), %.2f s (limit 60 s)",
              instances, worst, elapsed)};
}

Outcome approximation_bound() {
  Rng rng(303);
  const int instances = 500;
  int violations = 0, checks = 0;
  double tightest = INFINITY;
  for (int instance = 0; instance < instances; ++instance) {
    const std::size_t n0 = 1 + rng.below(10), n1 = 1 + rng.below(10);
    const DbnModel model = gen_random(GenSpec{Family::kRandomAdditive, n0, n1, rng.uniform(),
                                              true, rng.below(1ULL << 40)});
    const Realization x0 = random_x0(rng, n0);
    const std::size_t k = 1 + rng.below(3);
    for (Norm norm : {Norm::finite(1), Norm::finite(2), Norm::infinity()}) {
      const AttackProblem problem(model, x0, k, norm, MaskAction::kHide);
      const double approx = approx_attack(problem).value;
      const double opt = brute_force_attack(problem).value;
      ++checks;
      if (approx < opt / static_cast<double>(n1)) ++violations;
      if (opt > 0) tightest = std::min(tightest, approx * static_cast<double>(n1) / opt);
    }
  }
  return {violations == 0,
          fmt("%d instances x 3 norms = %d checks, %d violations of approx >= opt/n1, "
              "min n1*approx/opt = %.4f",
              instances, checks, violations, tightest)};
}

Outcome heuristic_pathology() {
  const DbnModel model = gen_heuristic_adversarial(10, 0.01);
  const AttackProblem problem(model, Realization(std::vector<std::uint8_t>(10, 0)), 5,
                              Norm::finite(1), MaskAction::kHide);
  const double opt = brute_force_attack(problem).value;
  const double heuristic = heuristic_attack(problem).value / opt;
  const double combined = combined_attack(problem).value / opt;
  return {heuristic <= 0.02 && combined >= 0.95,
          fmt("opt = %.10f, heuristic/opt = %.5f (<= 0.02), combined/opt = %.5f (>= 0.95)",
              opt, heuristic, combined)};
}

Outcome theorem1_asymptotics() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  double previous = 0.0;
  for (std::size_t n : {50U, 200U, 800U}) {
    const double nd = static_cast<double>(n);
    const double eps = std::log(nd) / nd;
    const double closed =
        std::pow(1 - eps, nd) * (std::pow(1 + eps, nd) - std::pow(1 - eps, nd));
    const DbnModel model = gen_theorem1(n, PosteriorVector(n, 1.0), PosteriorVector(n, 0.0));
    SimConfig config;
    config.model = &model;
    config.policy = theorem1_oracle_policy();
    config.budget = n;
    config.norm = Norm::finite(1);
    config.trials = 2000;
    config.seed = 2024 + n;
    config.threads = default_thread_count();
    const SimReport report = run_expectation(config);
    const double mean = report.mean / nd, se = report.se / nd;
    const bool within = std::abs(mean - closed) <= 3 * se;
    const bool increasing = closed > previous && closed < 1.0;
    pass = pass && within && increasing;
    previous = closed;
    detail += fmt("n=%zu mean/n=%.5f closed=%.5f se=%.5f%s; ", n, mean, closed, se,
                  within ? "" : " OUTSIDE 3SE");
  }
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 300.0;
  return {pass, detail + fmt("closed form increasing, %.2f s (limit 300 s)", elapsed)};
}

Outcome lkm_identities() {
  Rng rng(606);
  double pmf_sum = 0.0, l1 = 0.0, linf = 0.0, joint = 0.0;
  for (int instance = 0; instance < 10000; ++instance) {
    const std::size_t n1 = 1 + rng.below(50);
    const DisagreementVector d = testing::random_probabilities(rng, n1);
    const auto pmf = poisson_binomial_pmf(d);
    double total = 0.0, sum_d = 0.0, none = 1.0;
    for (double v : pmf) total += v;
    for (double v : d) {
      sum_d += v;
      none *= 1.0 - v;
    }
    pmf_sum = std::max(pmf_sum, std::abs(total - 1.0));
    l1 = std::max(l1, std::abs(lkm_from_pmf(pmf, Norm::finite(1)) - sum_d));
    linf = std::max(linf, std::abs(lkm_from_pmf(pmf, Norm::infinity()) - (1.0 - none)));
  }
  for (int instance = 0; instance < 2000; ++instance) {
    const std::size_t n1 = 1 + rng.below(6);
    const auto q = testing::random_probabilities(rng, n1);
    const auto r = testing::random_probabilities(rng, n1);
    const auto d = disagreement(q, r);
    for (Norm norm : {Norm::finite(1), Norm::finite(2), Norm::finite(3), Norm::infinity()}) {
      joint = std::max(joint, std::abs(lkm_distance(d, norm) -
                                       testing::lkm_by_joint_enumeration(q, r, norm)));
    }
  }
  return {pmf_sum <= 1e-12 && l1 <= 1e-12 && linf <= 1e-12 && joint <= 1e-10,
          fmt("1e4 vectors: max |sum pmf - 1| = %.2g, |p=1 - sum d| = %.2g, "
              "|p=inf - (1 - prod)| = %.2g (tol 1e-12); joint oracle max diff %.2g (tol 1e-10)",
              pmf_sum, l1, linf, joint)};
}

Outcome masked_cross_check() {
  Rng rng(707);
  double worst = 0.0;
  const int instances = 1000;
  for (int instance = 0; instance < instances; ++instance) {
    const std::size_t n0 = 1 + rng.below(10), n1 = 1 + rng.below(6);
    const Family family = instance % 2 ? Family::kRandomLinear : Family::kRandomAdditive;
    const DbnModel model =
        gen_random(GenSpec{family, n0, n1, rng.uniform(), false, rng.below(1ULL << 40)});
    const Realization x0 = random_x0(rng, n0);
    std::vector<Index> hidden;
    for (Index j = 0; j < n0; ++j) {
      if (rng.bernoulli(0.5)) hidden.push_back(j);
    }
    const Mask mask(hidden, MaskAction::kHide);
    const auto fast = masked_posterior(model, x0, mask);
    const auto slow = masked_posterior_by_enumeration(model, x0, mask);
    for (std::size_t i = 0; i < n1; ++i) {
      worst = std::max(worst, std::abs(fast[i] - slow[i]));
      worst = std::max(worst, std::abs(fast[i] - testing::masked_marginal_by_definition(
                                                     model, x0, mask, i)));
    }
  }
  return {worst <= 1e-12,
          fmt("%d additive/linear instances, max |fast - enumeration| = %.3g (tol 1e-12)",
              instances, worst)};
}

Outcome gain_additivity() {
  Rng rng(808);
  double worst = 0.0;
  const int triples = 1000;
  for (int t = 0; t < triples; ++t) {
    const std::size_t n0 = 1 + rng.below(12);
    const DbnModel model = gen_random(GenSpec{Family::kRandomLinear, n0, 1 + rng.below(12),
                                              rng.uniform(), false, rng.below(1ULL << 40)});
    const MaskAction action = t % 2 ? MaskAction::kHide : MaskAction::kFlip;
    const AttackProblem problem(model, random_x0(rng, n0), n0, Norm::finite(1), action);
    const Index r = rng.below(n0);
    std::vector<Index> chosen;
    for (Index j = 0; j < n0; ++j) {
      if (j != r && rng.bernoulli(0.5)) chosen.push_back(j);
    }
    const Mask mask(chosen, action);
    const auto eval = problem.evaluator();
    worst = std::max(worst, std::abs(eval(mask.with(r)) - eval(mask) - linear_gains(problem)[r]));
  }
  return {worst <= 1e-10,
          fmt("%d (instance, mask, index) triples, max |delta - g_r| = %.3g (tol 1e-10)", triples,
              worst)};
}

Outcome sweep_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "halftruth_acceptance_sweep";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_text_file(dir / "sweep.json", R"({
    "family": "random_additive", "grid": [6, 10, 14, 20], "density": 0.3,
    "monotone": true, "algorithms": ["combined", "approx", "heuristic", "random"],
    "p": 2, "trials": 5, "seed": 17})");
  std::ostringstream out, err;
  const int first = run_cli({"sweep", "--config", (dir / "sweep.json").string(), "--out",
                             (dir / "a.csv").string()},
                            out, err);
  const int second = run_cli({"sweep", "--config", (dir / "sweep.json").string(), "--out",
                              (dir / "b.csv").string()},
                             out, err);
  bool same = false;
  std::size_t bytes = 0;
  if (first == kExitOk && second == kExitOk) {
    const std::string a = read_text_file(dir / "a.csv");
    same = a == read_text_file(dir / "b.csv");
    bytes = a.size();
  }
  fs::remove_all(dir);
  return {same, fmt("exit codes %d/%d, %zu-byte CSV %s", first, second, bytes,
                    same ? "identical" : "DIFFERS")};
}

}  // namespace
}  // namespace halftruth

int main() {
  using namespace halftruth;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 linear hide exact = brute force", [] { return linear_oracle(MaskAction::kHide, 101); }},
      {"2 linear flip exact = brute force", [] { return linear_oracle(MaskAction::kFlip, 202); }},
      {"3 approx within factor n1", approximation_bound},
      {"4 heuristic pathology", heuristic_pathology},
      {"5 theorem1 asymptotics", theorem1_asymptotics},
      {"6 LKM identities", lkm_identities},
      {"7 masked posterior cross-check", masked_cross_check},
      {"8 linear gain additivity", gain_additivity},
      {"9 sweep determinism", sweep_determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s  [%s] %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
