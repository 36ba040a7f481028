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

#ifndef HALFTRUTH_MODEL_IO_HPP_
#define HALFTRUTH_MODEL_IO_HPP_

// JSON model files:
//   {"n0": int, "priors": [float],
//    "nodes": [{"parents": [int],
//               "transition": {"kind": "general"|"additive"|"linear",
//                              "values": [float]}}]}
// Floats are written with 17 significant digits so a round trip is exact.

#include <filesystem>
#include <string>
#include <string_view>

#include "halftruth/model.hpp"

namespace halftruth {

std::string model_to_json(const DbnModel& model);

// Parses and validates. Throws kParseError on malformed input or unknown kind.
DbnModel model_from_json(std::string_view text);

void save_model(const DbnModel& model, const std::filesystem::path& path);
DbnModel load_model(const std::filesystem::path& path);

// "%.17g" rendering shared by every writer in the project.
std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace halftruth

#endif  // HALFTRUTH_MODEL_IO_HPP_
