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

#include "halftruth/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "halftruth/error.hpp"

namespace halftruth {
namespace {

using nlohmann::json;

void append_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_double(values[i]);
  }
  out += ']';
}

const std::vector<double>& transition_values(const Transition& t) {
  return std::visit(
      [](const auto& v) -> const std::vector<double>& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearTransition>) {
          return v.coeffs;
        } else {
          return v.table;
        }
      },
      t);
}

Transition make_transition(std::string_view kind, std::vector<double> values) {
  if (kind == "general") return GeneralTransition{std::move(values)};
  if (kind == "additive") return AdditiveTransition{std::move(values)};
  if (kind == "linear") return LinearTransition{std::move(values)};
  throw Error(ErrorCode::kParseError,
              "unknown transition kind \"" + std::string(kind) + "\"");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string model_to_json(const DbnModel& model) {
  std::string out = "{\"n0\": " + std::to_string(model.n0()) + ", \"priors\": ";
  append_array(out, model.priors);
  out += ", \"nodes\": [";
  for (std::size_t i = 0; i < model.nodes.size(); ++i) {
    const auto& node = model.nodes[i];
    out += i ? ",\n  " : "\n  ";
    out += "{\"parents\": [";
    for (std::size_t j = 0; j < node.parents.size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(node.parents[j]);
    }
    out += "], \"transition\": {\"kind\": \"";
    out += kind_name(kind_of(node.transition));
    out += "\", \"values\": ";
    append_array(out, transition_values(node.transition));
    out += "}}";
  }
  out += model.nodes.empty() ? "]}\n" : "\n]}\n";
  return out;
}

DbnModel model_from_json(std::string_view text) {
  DbnModel model;
  try {
    const json doc = json::parse(text);
    const auto n0 = doc.at("n0").get<std::size_t>();
    model.priors = doc.at("priors").get<std::vector<double>>();
    if (model.priors.size() != n0) {
      throw Error(ErrorCode::kParseError, "n0 disagrees with priors length");
    }
    for (const auto& node : doc.at("nodes")) {
      const auto& t = node.at("transition");
      model.nodes.push_back(Stage1Node{
          node.at("parents").get<std::vector<Index>>(),
          make_transition(t.at("kind").get<std::string>(),
                          t.at("values").get<std::vector<double>>())});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  validate_model(model);
  return model;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

void save_model(const DbnModel& model, const std::filesystem::path& path) {
  write_text_file(path, model_to_json(model));
}

DbnModel load_model(const std::filesystem::path& path) {
  return model_from_json(read_text_file(path));
}

}  // namespace halftruth
