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

#include "halftruth/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "halftruth/error.hpp"
#include "halftruth/model_io.hpp"
#include "halftruth/parallel.hpp"
#include "halftruth/random.hpp"
#include "halftruth/simulate.hpp"

namespace halftruth {
namespace {

using nlohmann::json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!current.empty()) items.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) items.push_back(std::move(current));
  return items;
}

Realization parse_bits(const std::string& text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ',' && c != ' ' && c != '\n' && c != '[' && c != ']') {
      throw Error(ErrorCode::kSpecInvalid,
                  "x0 must consist of 0/1 digits, got '" + std::string(1, c) + "'");
    }
  }
  return Realization(std::move(bits));
}

std::vector<Index> parse_indices(const std::string& text) {
  std::vector<Index> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') {
      throw Error(ErrorCode::kSpecInvalid, "bad mask index \"" + item + "\"");
    }
    out.push_back(static_cast<Index>(v));
  }
  return out;
}

PosteriorVector parse_probabilities(const std::string& text) {
  PosteriorVector out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || !(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kSpecInvalid, "bad target probability \"" + item + "\"");
    }
    out.push_back(v);
  }
  return out;
}

MaskAction parse_action(const std::string& text) {
  if (text == "hide") return MaskAction::kHide;
  if (text == "flip") return MaskAction::kFlip;
  throw Error(ErrorCode::kSpecInvalid, "action must be hide or flip");
}

std::string mask_json(const Mask& mask) {
  std::string out = "[";
  for (std::size_t i = 0; i < mask.indices().size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(mask.indices()[i]);
  }
  return out + "]";
}

std::string vector_json(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out + "]";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// Options shared by attack, eval and simulate.
struct ProblemArgs {
  std::string model_path;
  std::string x0_inline;
  std::string x0_file;
  std::optional<std::uint64_t> seed;
  std::size_t k = 0;
  std::string p = "1";
  std::string action = "hide";
  std::string target;
  std::string target_file;

  void attach(CLI::App& app, bool needs_x0) {
    app.add_option("--model", model_path, "model JSON file")->required();
    if (needs_x0) {
      app.add_option("--x0", x0_inline, "stage-0 outcomes, e.g. 0101 or 0,1,0,1");
      app.add_option("--x0-file", x0_file, "file holding the stage-0 outcomes");
    }
    app.add_option("--seed", seed, "seed for sampling x0 and randomized algorithms");
    app.add_option("--p", p, "norm: positive integer or inf");
    app.add_option("--action", action, "hide or flip");
    app.add_option("--target", target, "targeted mode: comma-separated alpha");
    app.add_option("--target-file", target_file, "targeted mode: JSON array of alpha");
  }

  Realization realization(const DbnModel& model) const {
    if (!x0_inline.empty()) return parse_bits(x0_inline);
    if (!x0_file.empty()) return parse_bits(read_text_file(x0_file));
    if (seed) return sample_realization(model, *seed);
    throw Error(ErrorCode::kSpecInvalid, "give --x0, --x0-file or --seed");
  }

  ObjectiveMode mode() const {
    if (!target.empty()) return ObjectiveMode::targeted(parse_probabilities(target));
    if (!target_file.empty()) {
      try {
        return ObjectiveMode::targeted(
            json::parse(read_text_file(target_file)).get<PosteriorVector>());
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kParseError, e.what());
      }
    }
    return ObjectiveMode::untargeted();
  }
};

std::string format_ratio(double value, double opt) {
  if (opt > 0.0) return format_double(value / opt);
  if (opt == 0.0) return "1";
  // Targeted objectives are negated distances: report distance_opt / distance.
  return value < 0.0 ? format_double(opt / value) : "1";
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig config;
  try {
    const json doc = json::parse(text);
    config.family = parse_family(doc.at("family").get<std::string>());
    config.grid = doc.at("grid").get<std::vector<std::size_t>>();
    config.density = doc.value("density", config.density);
    config.monotone = doc.value("monotone", config.monotone);
    config.epsilon = doc.value("eps", config.epsilon);
    if (doc.contains("budget")) {
      const auto& b = doc.at("budget");
      if (b.contains("fixed")) {
        config.fixed_budget = b.at("fixed").get<std::size_t>();
      } else {
        config.budget_fraction = b.at("fraction").get<double>();
      }
    }
    if (doc.contains("algorithms")) {
      config.algorithms.clear();
      for (const auto& name : doc.at("algorithms")) {
        config.algorithms.push_back(parse_algorithm(name.get<std::string>()));
      }
    }
    if (doc.contains("p")) {
      const auto& p = doc.at("p");
      config.norm = p.is_string() ? Norm::parse(p.get<std::string>())
                                  : Norm::parse(std::to_string(p.get<long>()));
    }
    config.action = parse_action(doc.value("action", std::string("hide")));
    config.trials = doc.value("trials", config.trials);
    config.seed = doc.value("seed", config.seed);
    config.brute_force_limit =
        doc.value("brute_force_limit", config.brute_force_limit);
    config.timing = doc.value("timing", config.timing);
    config.output = doc.value("output", std::string());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (config.grid.empty()) throw Error(ErrorCode::kSpecInvalid, "grid is empty");
  if (!config.fixed_budget &&
      !(config.budget_fraction > 0.0 && config.budget_fraction <= 1.0)) {
    throw Error(ErrorCode::kSpecInvalid, "budget fraction must lie in (0, 1]");
  }
  if (config.trials < 1) throw Error(ErrorCode::kSpecInvalid, "trials must be >= 1");
  if (config.algorithms.empty()) {
    throw Error(ErrorCode::kSpecInvalid, "algorithm list is empty");
  }
  if (config.brute_force_limit > kBruteForceMaskLimit) {
    throw Error(ErrorCode::kSpecInvalid, "brute_force_limit above 1e7");
  }
  for (std::size_t n : config.grid) {
    validate_spec(GenSpec{config.family, n, n, config.density, config.monotone,
                          0, config.epsilon});
  }
  return config;
}

std::size_t sweep_budget(const SweepConfig& config, std::size_t n) {
  if (config.fixed_budget) return std::min(*config.fixed_budget, n);
  const auto k = static_cast<std::size_t>(
      std::ceil(config.budget_fraction * static_cast<double>(n) - 1e-9));
  return std::min(k, n);
}

std::uint64_t sweep_cell_seed(std::uint64_t master, std::size_t n,
                              std::size_t trial) {
  return derive_seed(derive_seed(master, n), trial);
}

std::string run_sweep(const SweepConfig& config, unsigned threads) {
  using Clock = std::chrono::steady_clock;
  const std::size_t cells = config.grid.size() * config.trials;
  std::vector<std::string> rows(cells);

  parallel_for(cells, threads, [&](std::size_t cell) {
    const std::size_t n = config.grid[cell / config.trials];
    const std::size_t trial = cell % config.trials;
    const std::uint64_t seed = sweep_cell_seed(config.seed, n, trial);
    const DbnModel model = generate(GenSpec{config.family, n, n, config.density,
                                            config.monotone, seed,
                                            config.epsilon});
    // The adversarial family is defined against the all-zero realization.
    const Realization x0 =
        config.family == Family::kHeuristicAdversarial
            ? Realization(std::vector<std::uint8_t>(n, 0))
            : sample_realization(model, seed);
    const std::size_t k = sweep_budget(config, n);
    const AttackProblem problem(model, x0, k, config.norm, config.action);

    std::optional<double> opt;
    if (count_masks(n, k) <= config.brute_force_limit) {
      opt = brute_force_attack(problem).value;
    }

    std::string text;
    for (Algorithm algorithm : config.algorithms) {
      std::string value_field, ratio_field, wall_field;
      const auto start = Clock::now();
      try {
        const AttackResult result = run_attack(algorithm, problem, seed);
        value_field = format_double(result.value);
        if (opt) ratio_field = format_ratio(result.value, *opt);
      } catch (const Error&) {
        // Algorithm not applicable to this instance: leave the row empty.
      }
      if (config.timing) {
        wall_field = std::to_string(
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
                .count());
      }
      text += std::string(family_name(config.family)) + ',' + std::to_string(n) +
              ',' + std::to_string(k) + ',' + config.norm.to_string() + ',' +
              std::string(algorithm_name(algorithm)) + ',' +
              std::to_string(trial) + ',' + std::to_string(seed) + ',' +
              value_field + ',' + (opt ? format_double(*opt) : std::string()) +
              ',' + ratio_field + ',' + wall_field + '\n';
    }
    rows[cell] = std::move(text);
  });

  std::string csv = "family,n,k,p,algorithm,trial,seed,value,opt_value,ratio,wall_ms\n";
  for (const auto& r : rows) csv += r;
  return csv;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Half-truth attacks on two-stage dynamic Bayes networks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a model JSON file");
  std::string family = "random_additive";
  std::optional<std::size_t> gen_n, gen_n0, gen_n1;
  double density = 0.3, eps = 0.01;
  bool monotone = false;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--family", family,
                  "random_general|random_additive|random_linear|theorem1|heuristic_adversarial");
  gen->add_option("--n", gen_n, "sets n0 = n1 = n");
  gen->add_option("--n0", gen_n0);
  gen->add_option("--n1", gen_n1);
  gen->add_option("--density", density);
  gen->add_flag("--monotone", monotone);
  gen->add_option("--eps", eps);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");

  // attack
  auto* attack = app.add_subcommand("attack", "solve for a mask");
  ProblemArgs attack_args;
  std::string algorithm = "combined";
  std::string attack_out;
  attack_args.attach(*attack, true);
  attack->add_option("--k", attack_args.k, "budget");
  attack->add_option("--algorithm", algorithm);
  attack->add_option("--out", attack_out);

  // eval
  auto* eval = app.add_subcommand("eval", "objective of a given mask");
  ProblemArgs eval_args;
  std::string eval_mask;
  eval_args.attach(*eval, true);
  eval->add_option("--mask", eval_mask, "comma-separated stage-0 indices");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "algorithm comparison grid as CSV");
  std::string sweep_config_path, sweep_out;
  sweep->add_option("--config", sweep_config_path)->required();
  sweep->add_option("--out", sweep_out, "overrides the config's output path");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates");
  ProblemArgs sim_args;
  std::string policy = "combined";
  std::size_t trials = 1000;
  std::string distance_mask;
  bool distance_mode = false;
  sim_args.attach(*simulate, true);
  simulate->add_option("--k", sim_args.k);
  simulate->add_option("--policy", policy, "algorithm name, oracle, or none");
  simulate->add_option("--trials", trials);
  simulate->add_flag("--distance", distance_mode,
                     "sample the distance for --mask at a fixed x0");
  simulate->add_option("--mask", distance_mask);

  std::vector<const char*> argv{"halftruth"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*gen) {
      GenSpec spec;
      spec.family = parse_family(family);
      spec.n0 = gen_n0.value_or(gen_n.value_or(0));
      spec.n1 = gen_n1.value_or(gen_n.value_or(spec.n0));
      spec.edge_density = density;
      spec.monotone = monotone;
      spec.seed = gen_seed;
      spec.epsilon = eps;
      const DbnModel model = generate(spec);
      validate_model(model);
      emit(model_to_json(model), gen_out, out);
      err << (gen_out.empty() ? std::string("<stdout>") : gen_out) << ": valid "
          << family_name(spec.family) << " model, n0=" << model.n0()
          << " n1=" << model.n1() << '\n';
    } else if (*attack) {
      const DbnModel model = load_model(attack_args.model_path);
      const AttackProblem problem(
          model, attack_args.realization(model), attack_args.k,
          Norm::parse(attack_args.p), parse_action(attack_args.action),
          attack_args.mode());
      const AttackResult result = run_attack(parse_algorithm(algorithm), problem,
                                             attack_args.seed.value_or(0));
      emit("{\"mask\": " + mask_json(result.mask) +
               ", \"value\": " + format_double(result.value) +
               ", \"algorithm\": \"" + result.algorithm +
               "\", \"evaluations\": " + std::to_string(result.evaluations) +
               "}\n",
           attack_out, out);
    } else if (*eval) {
      const DbnModel model = load_model(eval_args.model_path);
      const Realization x0 = eval_args.realization(model);
      const Mask mask(parse_indices(eval_mask), parse_action(eval_args.action));
      const ObjectiveEvaluator evaluator(model, x0, Norm::parse(eval_args.p),
                                         eval_args.mode());
      const double value = evaluator(mask);
      out << "{\"mask\": " << mask_json(mask)
          << ", \"value\": " << format_double(value)
          << ", \"true_posterior\": " << vector_json(evaluator.true_marginals())
          << ", \"observed_posterior\": "
          << vector_json(observed_posterior(model, x0, mask)) << "}\n";
    } else if (*sweep) {
      SweepConfig config = parse_sweep_config(read_text_file(sweep_config_path));
      if (!sweep_out.empty()) config.output = sweep_out;
      const std::string csv = run_sweep(config, default_thread_count());
      emit(csv, config.output.string(), out);
    } else if (*simulate) {
      const DbnModel model = load_model(sim_args.model_path);
      const Norm norm = Norm::parse(sim_args.p);
      const std::uint64_t seed = sim_args.seed.value_or(0);
      SimReport report;
      if (distance_mode) {
        const Mask mask(parse_indices(distance_mask), parse_action(sim_args.action));
        if (sim_args.x0_inline.empty() && sim_args.x0_file.empty()) {
          throw Error(ErrorCode::kSpecInvalid, "--distance needs --x0 or --x0-file");
        }
        report = run_sampled_distance(model, sim_args.realization(model), mask,
                                      norm, trials, seed, default_thread_count());
      } else {
        SimConfig config;
        config.model = &model;
        config.policy = policy == "oracle" ? theorem1_oracle_policy()
                        : policy == "none" ? empty_mask_policy()
                                           : algorithm_policy(parse_algorithm(policy));
        config.budget = sim_args.k;
        config.norm = norm;
        config.mode = sim_args.mode();
        config.action = parse_action(sim_args.action);
        config.trials = trials;
        config.seed = seed;
        config.threads = default_thread_count();
        report = run_expectation(config);
      }
      out << report_to_json(report) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIoError ? kExitIo : kExitInvalid;
  }
  return kExitOk;
}

}  // namespace halftruth
