// Copyright 2026 The vqsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "vqsim/common.hpp"

namespace vqs {

/// Shortest form that still carries 17 significant digits.
[[nodiscard]] std::string format_double(double v);
/// Strict parse: the whole token must be a finite number.
[[nodiscard]] double parse_double(const std::string &token);
[[nodiscard]] long long parse_int(const std::string &token);

[[nodiscard]] std::string format_vector(const RVec &v,
                                        const std::string &sep = ",");
[[nodiscard]] RVec parse_vector(const std::string &text);

/// "key = value" lines; '#' starts a comment.
using KeyValues = std::map<std::string, std::string>;
[[nodiscard]] KeyValues parse_key_values(const std::string &text);

[[nodiscard]] std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

/// Trims ASCII whitespace from both ends.
[[nodiscard]] std::string trim(const std::string &s);

} // namespace vqs
