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

// vqsim-cli: runs the toolkit pipelines through the C interface.
//
//   vqsim-cli <pipeline> [--config FILE] [--set key=value ...] [--key value]
//
// Artifacts go to --out, else $VQSIM_OUTPUT_DIR, else the working directory.
// The JSON summary is also printed to stdout.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 1 anything else.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vqsim/capi.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct PipelineSpec {
    std::string name;
    std::string help;
    std::vector<std::string> keys;
};

const std::vector<PipelineSpec> &specs() {
    static const std::vector<PipelineSpec> s = {
        {"varqte", "variational imaginary or real time evolution",
         {"ham", "mode", "solver", "ode", "T", "steps", "rtol", "atol", "delta",
          "bound", "oracle", "reps", "init", "omega"}},
        {"gibbs", "Gibbs state preparation by VarQITE",
         {"ham", "kT", "depth", "solver", "steps", "ode"}},
        {"qbm-gen", "generative quantum Boltzmann machine training",
         {"model", "kT", "steps", "depth", "target", "lr", "beta1", "beta2",
          "iterations", "loss"}},
        {"qbm-disc", "discriminative quantum Boltzmann machine training",
         {"dataset", "samples", "features", "separation", "variant", "kT",
          "steps", "depth", "lr", "beta1", "beta2", "iterations", "grad_tol",
          "test_fraction", "standardize"}},
        {"qgan", "quantum generative adversarial network training",
         {"target", "samples", "data_seed", "qubits", "depth", "init",
          "epochs", "batch", "lr", "disc_lr", "beta1", "beta2", "gp", "slope",
          "hidden", "input", "ks_samples", "ks_every_epoch"}},
        {"qae-price", "European call pricing by amplitude estimation",
         {"method", "distribution", "n", "mu", "sigma", "strike", "m", "shots",
          "generator", "generator_omega", "generator_input"}},
        {"oracle", "exact reference states (ite, rte, gibbs, ground)",
         {"kind", "ham", "T", "init", "kT"}},
    };
    return s;
}

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

void parse_assignment(const std::string &line, const std::string &where,
                      std::map<std::string, std::string> &kv) {
    const auto eq = line.find('=');
    if (eq == std::string::npos || trim(line.substr(0, eq)).empty()) {
        throw ConfigError(where + ": expected key = value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
}

void read_config_file(const std::string &path,
                      std::map<std::string, std::string> &kv) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (!trim(line).empty()) {
            parse_assignment(line, path + ":" + std::to_string(lineno), kv);
        }
    }
}

int exit_code(vqs_status s) {
    switch (s) {
    case VQS_OK:
        return 0;
    case VQS_ERR_NUMERICAL:
        return kExitNumerical;
    case VQS_ERR_INVALID_ARGUMENT:
    case VQS_ERR_DIMENSION:
    case VQS_ERR_PARSE:
    case VQS_ERR_CAPACITY:
    case VQS_ERR_UNSUPPORTED:
        return kExitConfig;
    default:
        return 1;
    }
}

std::string output_dir(const std::string &flag) {
    if (!flag.empty()) {
        return flag;
    }
    const char *env = std::getenv("VQSIM_OUTPUT_DIR");
    return env && *env ? env : ".";
}

int run(const PipelineSpec &spec, const std::map<std::string, std::string> &kv,
        const std::string &out_dir, bool quiet) {
    std::string config;
    for (const auto &[k, v] : kv) {
        if (v.find('\n') != std::string::npos ||
            v.find('#') != std::string::npos) {
            std::cerr << "error: value of '" << k
                      << "' must not contain newlines or '#'\n";
            return kExitConfig;
        }
        config += k + " = " + v + "\n";
    }
    vqs_run *result = nullptr;
    const vqs_status st =
        vqs_run_pipeline(spec.name.c_str(), config.c_str(), &result);
    if (st != VQS_OK) {
        std::cerr << "error (" << vqs_status_name(st)
                  << "): " << vqs_last_error() << "\n";
        return exit_code(st);
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    int code = 0;
    for (size_t i = 0; i < vqs_run_artifact_count(result); ++i) {
        const std::filesystem::path path =
            std::filesystem::path(out_dir) / vqs_run_artifact_name(result, i);
        std::ofstream out(path, std::ios::binary);
        out.write(vqs_run_artifact_data(result, i),
                  static_cast<std::streamsize>(vqs_run_artifact_size(result, i)));
        if (!out) {
            std::cerr << "error: cannot write " << path << "\n";
            code = 1;
        }
    }
    if (!quiet && vqs_run_artifact_count(result) > 0) {
        std::cout << vqs_run_artifact_data(result, 0);
    }
    vqs_run_free(result);
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"vqsim: variational quantum simulation toolkit"};
    app.set_version_flag("--version", std::string(vqs_version()));
    app.require_subcommand(1);

    struct Sub {
        CLI::App *app = nullptr;
        const PipelineSpec *spec = nullptr;
        std::map<std::string, std::string> values;
        std::vector<std::string> sets;
        std::string config_file;
        std::string out;
        std::string seed;
        bool quiet = false;
    };
    std::vector<Sub> subs(specs().size());
    for (std::size_t i = 0; i < specs().size(); ++i) {
        Sub &s = subs[i];
        s.spec = &specs()[i];
        s.app = app.add_subcommand(s.spec->name, s.spec->help);
        s.app->add_option("--config", s.config_file, "key = value config file");
        s.app->add_option("--set", s.sets, "extra key=value assignment");
        s.app->add_option("--out", s.out,
                          "output directory (default $VQSIM_OUTPUT_DIR or .)");
        s.app->add_option("--seed", s.seed, "random seed");
        s.app->add_flag("-q,--quiet", s.quiet, "do not print the summary");
        for (const auto &key : s.spec->keys) {
            std::string names = "--" + key;
            if (key == "T") {
                names = "-T,--T";
            }
            if (key == "kind") {
                s.app->add_option("kind", s.values[key], "oracle kind");
                continue;
            }
            s.app->add_option(names, s.values[key], "config key " + key);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    for (Sub &s : subs) {
        if (!s.app->parsed()) {
            continue;
        }
        std::map<std::string, std::string> kv;
        try {
            if (!s.config_file.empty()) {
                read_config_file(s.config_file, kv);
            }
            for (const auto &a : s.sets) {
                parse_assignment(a, "--set " + a, kv);
            }
        } catch (const ConfigError &e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitConfig;
        }
        for (const auto &key : s.spec->keys) {
            const std::string opt = key == "kind" ? "kind" : "--" + key;
            if (s.app->count(opt) > 0) {
                kv[key] = s.values[key];
            }
        }
        if (!s.seed.empty()) {
            kv["seed"] = s.seed;
        }
        return run(*s.spec, kv, output_dir(s.out), s.quiet);
    }
    return 1;
}
