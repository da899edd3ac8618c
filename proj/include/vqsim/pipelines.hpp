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

#include <set>
#include <string>
#include <vector>

#include "vqsim/pauli.hpp"
#include "vqsim/textio.hpp"

namespace vqs {

[[nodiscard]] const char *version_string();

/// Typed access to a key-value run configuration. Every lookup records the
/// resolved value; keys never looked up are rejected by finish().
class RunParams {
  public:
    explicit RunParams(KeyValues given);

    [[nodiscard]] std::string str(const std::string &key,
                                  const std::string &fallback);
    /// Throws Status::Parse when the key is absent.
    [[nodiscard]] std::string required(const std::string &key);
    [[nodiscard]] double num(const std::string &key, double fallback);
    [[nodiscard]] long long integer(const std::string &key, long long fallback);
    [[nodiscard]] bool flag(const std::string &key, bool fallback);
    [[nodiscard]] std::vector<int> int_list(const std::string &key,
                                            const std::vector<int> &fallback);
    /// Value restricted to one of the listed choices.
    [[nodiscard]] std::string choice(const std::string &key,
                                     const std::vector<std::string> &choices);

    void finish() const;
    /// Resolved configuration, defaults included.
    [[nodiscard]] const KeyValues &resolved() const { return resolved_; }

  private:
    const std::string *lookup(const std::string &key);
    KeyValues given_;
    KeyValues resolved_;
    std::set<std::string> used_;
};

struct Artifact {
    std::string name;
    std::string content;
};

struct RunOutput {
    std::string pipeline;
    KeyValues config;
    /// Every artifact starts with a header carrying version, pipeline, seed
    /// and the resolved configuration. The first artifact is the JSON
    /// summary.
    std::vector<Artifact> artifacts;
};

[[nodiscard]] std::vector<std::string> pipeline_names();
/// Runs varqte, gibbs, qbm-gen, qbm-disc, qgan, qae-price or oracle.
[[nodiscard]] RunOutput run_pipeline(const std::string &pipeline,
                                     const KeyValues &config);

/// Hamiltonian from a named example, a file path or inline
/// "coefficient LABEL; ..." text, tried in that order.
[[nodiscard]] PauliSum resolve_hamiltonian(const std::string &value);

} // namespace vqs
