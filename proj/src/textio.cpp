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
#include "vqsim/textio.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace vqs {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string &token) {
    const std::string t = trim(token);
    require(!t.empty(), Status::Parse, "empty number");
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    require(end == t.c_str() + t.size() && errno != ERANGE, Status::Parse,
            "invalid number '" + t + "'");
    require(std::isfinite(v), Status::Parse, "non-finite number '" + t + "'");
    return v;
}

long long parse_int(const std::string &token) {
    const std::string t = trim(token);
    require(!t.empty(), Status::Parse, "empty integer");
    errno = 0;
    char *end = nullptr;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    require(end == t.c_str() + t.size() && errno != ERANGE, Status::Parse,
            "invalid integer '" + t + "'");
    return v;
}

std::string format_vector(const RVec &v, const std::string &sep) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) {
            s += sep;
        }
        s += format_double(v[i]);
    }
    return s;
}

RVec parse_vector(const std::string &text) {
    std::vector<double> vals;
    std::string tok;
    std::string norm = text;
    for (char &c : norm) {
        if (c == ',' || c == '[' || c == ']' || c == ';') {
            c = ' ';
        }
    }
    std::istringstream ss(norm);
    while (ss >> tok) {
        vals.push_back(parse_double(tok));
    }
    return Eigen::Map<RVec>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

KeyValues parse_key_values(const std::string &text) {
    KeyValues kv;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        require(eq != std::string::npos, Status::Parse,
                "config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        require(!key.empty(), Status::Parse,
                "config line " + std::to_string(lineno) + ": empty key");
        require(kv.count(key) == 0, Status::Parse,
                "config line " + std::to_string(lineno) + ": duplicate key '" +
                    key + "'");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), Status::InvalidArgument,
            "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), Status::InvalidArgument,
            "cannot write '" + path + "'");
    out << content;
    require(static_cast<bool>(out), Status::InvalidArgument,
            "write to '" + path + "' failed");
}

} // namespace vqs
