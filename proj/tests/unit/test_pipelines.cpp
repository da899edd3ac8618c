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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "vqsim/models.hpp"
#include "vqsim/pipelines.hpp"

using namespace vqs;
using namespace vqs::test;
using Catch::Matchers::WithinAbs;
using nlohmann::json;

namespace {

json summary(const RunOutput &out) {
    REQUIRE_FALSE(out.artifacts.empty());
    return json::parse(out.artifacts.front().content);
}

const Artifact &artifact(const RunOutput &out, const std::string &name) {
    for (const auto &a : out.artifacts) {
        if (a.name == name) {
            return a;
        }
    }
    FAIL("missing artifact " << name);
    return out.artifacts.front();
}

Status status_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.status();
    }
    return Status::Ok;
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

/// Small configuration per pipeline, quick enough for unit tests.
std::vector<std::pair<std::string, KeyValues>> small_runs() {
    return {
        {"varqte", {{"ham", "illustrative"}, {"solver", "euler"}, {"steps", "20"},
                    {"T", "0.2"}, {"seed", "3"}}},
        {"gibbs", {{"ham", "1 Z"}, {"kT", "1"}, {"steps", "10"}}},
        {"qbm-gen", {{"iterations", "3"}, {"seed", "1"}}},
        {"qbm-disc", {{"samples", "24"}, {"iterations", "2"}, {"variant", "H0"},
                      {"seed", "2"}}},
        {"qgan", {{"samples", "2000"}, {"epochs", "3"}, {"batch", "500"},
                  {"seed", "4"}}},
        {"qae-price", {{"m", "5"}}},
        {"oracle", {{"kind", "ite"}, {"ham", "ising"}, {"T", "1"}}},
    };
}

} // namespace

TEST_CASE("pipeline registry", "[pipelines]") {
    const auto names = pipeline_names();
    CHECK(names.size() == 7);
    for (const auto &[name, cfg] : small_runs()) {
        CHECK(std::find(names.begin(), names.end(), name) != names.end());
    }
    CHECK(status_of([] { (void)run_pipeline("nope", {}); }) == Status::Parse);
    CHECK(std::string(version_string()).size() > 0);
}

TEST_CASE("every pipeline runs with headers and valid JSON", "[pipelines]") {
    for (const auto &[name, cfg] : small_runs()) {
        INFO(name);
        const RunOutput out = run_pipeline(name, cfg);
        CHECK(out.pipeline == name);
        const json s = summary(out);
        CHECK(s["meta"]["pipeline"] == name);
        CHECK(s["meta"]["version"] == version_string());
        const auto seed = cfg.count("seed") ? std::stoll(cfg.at("seed")) : 0LL;
        CHECK(s["meta"]["seed"].get<long long>() == seed);
        // Numbers are resolved at 17 significant digits.
        for (const auto &[k, v] : cfg) {
            const std::string got = s["meta"]["config"][k];
            if (got != v) {
                CHECK(std::stod(got) == std::stod(v));
            }
        }
        // Defaults are resolved into the configuration as well.
        CHECK(s["meta"]["config"].size() >= cfg.size());
        for (std::size_t i = 1; i < out.artifacts.size(); ++i) {
            const auto ls = lines(out.artifacts[i].content);
            REQUIRE(ls.size() >= 2);
            CHECK(ls[0].rfind("# vqsim ", 0) == 0);
            CHECK(ls[1] == "# pipeline = " + name);
        }
    }
}

TEST_CASE("same config gives byte-identical artifacts", "[pipelines]") {
    for (const auto &[name, cfg] : small_runs()) {
        INFO(name);
        const RunOutput a = run_pipeline(name, cfg);
        const RunOutput b = run_pipeline(name, cfg);
        REQUIRE(a.artifacts.size() == b.artifacts.size());
        for (std::size_t i = 0; i < a.artifacts.size(); ++i) {
            CHECK(a.artifacts[i].name == b.artifacts[i].name);
            CHECK(a.artifacts[i].content == b.artifacts[i].content);
        }
    }
    KeyValues q = {{"samples", "2000"}, {"epochs", "3"}, {"batch", "500"}};
    q["seed"] = "5";
    const std::string s5 = run_pipeline("qgan", q).artifacts.front().content;
    q["seed"] = "6";
    CHECK(run_pipeline("qgan", q).artifacts.front().content != s5);
}

TEST_CASE("configuration errors are parse errors", "[pipelines]") {
    CHECK(status_of([] { (void)run_pipeline("gibbs", {{"ham", "1 Z"}, {"bogus", "1"}}); }) ==
          Status::Parse);
    CHECK(status_of([] { (void)run_pipeline("varqte", {}); }) == Status::Parse);
    CHECK(status_of([] { (void)run_pipeline("varqte", {{"ham", "ising"}, {"mode", "sideways"}}); }) ==
          Status::Parse);
    CHECK(status_of([] { (void)run_pipeline("gibbs", {{"ham", "1 Z"}, {"steps", "ten"}}); }) ==
          Status::Parse);
    CHECK(status_of([] { (void)run_pipeline("qae-price", {{"strike", "9"}}); }) ==
          Status::InvalidArgument);
}

TEST_CASE("varqte pipeline output", "[pipelines]") {
    const RunOutput out = run_pipeline(
        "varqte", {{"ham", "hydrogen"}, {"solver", "euler"}, {"steps", "10"}, {"T", "0.1"},
                   {"reps", "2"}});
    const json s = summary(out);
    CHECK(s["T"].get<double>() == Catch::Approx(0.1));
    CHECK(s["checkpoints"] == 11);
    CHECK(s["omega_T"].size() == 12);
    const auto ls = lines(artifact(out, "varqte_trace.csv").content);
    std::string header;
    std::size_t rows = 0;
    for (const auto &l : ls) {
        if (l.rfind("#", 0) == 0) {
            continue;
        }
        if (header.empty()) {
            header = l;
        } else {
            ++rows;
        }
    }
    CHECK(header.rfind("t,omega_0,", 0) == 0);
    CHECK(header.find(",eps,") != std::string::npos);
    CHECK(rows == 11);
}

TEST_CASE("gibbs pipeline reaches high fidelity", "[pipelines]") {
    const json s = summary(run_pipeline("gibbs", {{"ham", "1 Z"}, {"kT", "1"}, {"steps", "10"}}));
    CHECK(s["fidelity"].get<double>() > 0.99);
    CHECK(s["diagonal"].size() == 2);
    CHECK_THAT(s["exact_diagonal"][0].get<double>(),
               WithinAbs(std::exp(-1.0) / (std::exp(-1.0) + std::exp(1.0)), 1e-12));
}

TEST_CASE("qae-price pipeline methods", "[pipelines]") {
    const json exact = summary(run_pipeline("qae-price", {{"method", "exact"}}));
    CHECK_THAT(exact["payoff"].get<double>(),
               WithinAbs(exact["analytic_payoff"].get<double>(), 1e-10));
    const json qae = summary(run_pipeline("qae-price", {}));
    CHECK(qae["method"] == "qae");
    CHECK(std::abs(qae["payoff"].get<double>() - 1.0602) < 0.08);
    CHECK(qae.contains("outcome"));
    const json mc = summary(run_pipeline("qae-price", {{"method", "mc"}, {"seed", "1"}}));
    CHECK(mc["shots"] == 1024);
    CHECK(mc["ci_low"].get<double>() < mc["ci_high"].get<double>());
    const json gen = summary(run_pipeline("qae-price", {{"method", "generator"}}));
    CHECK(std::abs(gen["payoff"].get<double>() - 1.0602) < 0.25);
}

TEST_CASE("qgan artifacts feed qae-price", "[pipelines]") {
    const RunOutput q = run_pipeline(
        "qgan", {{"samples", "2000"}, {"epochs", "3"}, {"batch", "500"}, {"seed", "4"}});
    const auto dir = std::filesystem::temp_directory_path() / "vqsim_pipeline_test";
    std::filesystem::create_directories(dir);
    for (const auto &a : q.artifacts) {
        std::ofstream(dir / a.name) << a.content;
    }
    const json s = summary(run_pipeline(
        "qae-price", {{"method", "generator"},
                      {"generator", (dir / "qgan_generator.txt").string()},
                      {"generator_omega", (dir / "qgan_omega.txt").string()},
                      {"generator_input", (dir / "qgan_input.txt").string()},
                      {"m", "5"}}));
    CHECK(s["method"] == "qae-generator");
    CHECK(s["amplitude"].get<double>() >= 0.0);
    CHECK(s["amplitude"].get<double>() <= 1.0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("oracle pipeline kinds", "[pipelines]") {
    const json ground = summary(run_pipeline("oracle", {{"kind", "ground"}, {"ham", "1 Z"}}));
    CHECK_THAT(ground["energy"].get<double>(), WithinAbs(-1.0, 1e-12));
    CHECK_THAT(ground["gap"].get<double>(), WithinAbs(2.0, 1e-12));
    const json rte = summary(run_pipeline("oracle", {{"kind", "rte"}, {"ham", "1 Z"}, {"T", "0.7"}}));
    CHECK_THAT(rte["energy"].get<double>(), WithinAbs(0.0, 1e-12));
    const RunOutput g = run_pipeline("oracle", {{"kind", "gibbs"}, {"ham", "1 Z"}, {"kT", "1"}});
    CHECK_THAT(summary(g)["energy"].get<double>(), WithinAbs(-std::tanh(1.0), 1e-12));
    CHECK(status_of([] {
              (void)run_pipeline("oracle", {{"kind", "gibbs"}, {"ham", "1 Z"}, {"T", "1"}});
          }) == Status::Parse);
}

TEST_CASE("resolve_hamiltonian sources", "[pipelines]") {
    const PauliSum named = resolve_hamiltonian("ising");
    CHECK(max_abs(CMat(named.to_matrix() - named_hamiltonian("ising").to_matrix())) == 0.0);
    const PauliSum inline_h = resolve_hamiltonian("0.5 ZZ; -1 XI");
    CHECK(inline_h.n_qubits() == 2);
    CHECK_THAT(inline_h.to_matrix()(0, 0).real(), WithinAbs(0.5, 1e-15));
    const auto path = std::filesystem::temp_directory_path() / "vqsim_ham_test.txt";
    std::ofstream(path) << named.to_text();
    const PauliSum from_file = resolve_hamiltonian(path.string());
    CHECK(max_abs(CMat(from_file.to_matrix() - named.to_matrix())) < 1e-15);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(resolve_hamiltonian("not a hamiltonian"), Error);
}

TEST_CASE("RunParams typed access", "[pipelines]") {
    RunParams p({{"a", "3"}, {"b", "yes"}, {"c", "4,8"}, {"d", "x"}});
    CHECK(p.integer("a", 0) == 3);
    CHECK(p.flag("b", false));
    CHECK(p.int_list("c", {}) == std::vector<int>{4, 8});
    CHECK(p.choice("d", {"x", "y"}) == "x");
    CHECK(p.num("e", 1.5) == 1.5);
    CHECK(p.str("f", "dflt") == "dflt");
    CHECK_NOTHROW(p.finish());
    CHECK(p.resolved().at("e") == "1.5");
    CHECK(p.resolved().at("f") == "dflt");

    RunParams q(KeyValues{{"unused", "1"}});
    CHECK(status_of([&] { q.finish(); }) == Status::Parse);
    RunParams r(KeyValues{{"d", "z"}});
    CHECK(status_of([&] { (void)r.choice("d", {"x", "y"}); }) == Status::Parse);
    CHECK(status_of([&] { (void)r.required("missing"); }) == Status::Parse);
}
