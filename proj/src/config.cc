// Copyright 2026 The holonomy-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holo/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "holo/errors.h"

namespace holo {

namespace {

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &key, const std::string &text) {
    std::string t = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
        throw ConfigError(key, "expected a number, got '" + text + "'");
    }
    return v;
}

long long parse_int(const std::string &key, const std::string &text) {
    std::string t = trim(text);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(key, "expected an integer, got '" + text + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string &key, const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) {
        throw ConfigError(key, "expected a comma-separated list of numbers");
    }
    return out;
}

}  // namespace

Figure parse_figure(const std::string &name) {
    if (name == "ideal-mean") return Figure::IdealMean;
    if (name == "per-state") return Figure::PerState;
    if (name == "noisy-mean") return Figure::NoisyMean;
    if (name == "ohmic-mean") return Figure::OhmicMean;
    throw ConfigError("figure", "unknown figure '" + name + "' (ideal-mean, per-state, noisy-mean, ohmic-mean)");
}

const char *figure_name(Figure f) {
    switch (f) {
        case Figure::IdealMean:
            return "ideal-mean";
        case Figure::PerState:
            return "per-state";
        case Figure::NoisyMean:
            return "noisy-mean";
        case Figure::OhmicMean:
            return "ohmic-mean";
    }
    return "?";
}

NoisePreset parse_preset(const std::string &name) {
    if (name == "fixed") return NoisePreset::Fixed;
    if (name == "ohmic") return NoisePreset::Ohmic;
    throw ConfigError("preset", "unknown preset '" + name + "' (fixed, ohmic)");
}

const char *preset_name(NoisePreset p) {
    return p == NoisePreset::Fixed ? "fixed" : "ohmic";
}

NoisePreset ExperimentConfig::effective_preset() const {
    if (preset) {
        return *preset;
    }
    return figure == Figure::OhmicMean ? NoisePreset::Ohmic : NoisePreset::Fixed;
}

void ExperimentConfig::validate() const {
    if (!(tau_min > 0.0)) {
        throw ConfigError("tau-min", "must be positive");
    }
    if (!(tau_max >= tau_min)) {
        throw ConfigError("tau-max", "must not be below tau-min");
    }
    if (tau_points < 2) {
        throw ConfigError("tau-points", "need at least 2 grid points");
    }
    if (lambda2.empty()) {
        throw ConfigError("lambda2", "empty list");
    }
    for (double l : lambda2) {
        if (!(l >= 0.0)) {
            throw ConfigError("lambda2", "values must be non-negative");
        }
    }
    if (figure == Figure::OhmicMean && effective_preset() != NoisePreset::Ohmic) {
        throw ConfigError("preset", "ohmic-mean requires the ohmic preset");
    }
    if (effective_preset() == NoisePreset::Ohmic) {
        try {
            for (double t : temperature) {
                OhmicBath{kappa, omega_c, t}.validate();
            }
        } catch (const ValidationError &e) {
            std::string msg = e.what();
            std::string field = msg.find("kappa") != std::string::npos     ? "kappa"
                                : msg.find("omega_c") != std::string::npos ? "omega-c"
                                                                           : "temperature";
            throw ConfigError(field, msg);
        }
        if (temperature.empty()) {
            throw ConfigError("temperature", "empty list");
        }
    }
    if (sampling.count < 1) {
        throw ConfigError("samples", "must be >= 1");
    }
    if (steps < 100) {
        throw ConfigError("steps", "must be >= 100");
    }
    if (out.empty()) {
        throw ConfigError("out", "output path is empty");
    }
    if (threads < 0) {
        throw ConfigError("threads", "must be >= 0");
    }
}

std::vector<double> ExperimentConfig::grid() const {
    std::vector<double> g(tau_points);
    const double step = (tau_max - tau_min) / (tau_points - 1);
    for (int i = 0; i < tau_points; ++i) {
        g[i] = i + 1 == tau_points ? tau_max : tau_min + step * i;
    }
    return g;
}

void apply_setting(ExperimentConfig &cfg, const std::string &raw_key, const std::string &raw_value) {
    std::string key = trim(raw_key);
    std::replace(key.begin(), key.end(), '_', '-');
    std::string value = trim(raw_value);
    if (key == "figure") {
        cfg.figure = parse_figure(value);
    } else if (key == "tau-min") {
        cfg.tau_min = parse_double(key, value);
    } else if (key == "tau-max") {
        cfg.tau_max = parse_double(key, value);
    } else if (key == "tau-points") {
        cfg.tau_points = static_cast<int>(parse_int(key, value));
    } else if (key == "lambda2") {
        cfg.lambda2 = parse_list(key, value);
    } else if (key == "preset") {
        cfg.preset = parse_preset(value);
    } else if (key == "kappa") {
        cfg.kappa = parse_double(key, value);
    } else if (key == "omega-c") {
        cfg.omega_c = parse_double(key, value);
    } else if (key == "temperature") {
        cfg.temperature = parse_list(key, value);
    } else if (key == "samples") {
        cfg.sampling.count = static_cast<int>(parse_int(key, value));
    } else if (key == "sampling") {
        try {
            cfg.sampling.scheme = parse_sampling_scheme(value);
        } catch (const ValidationError &e) {
            throw ConfigError(key, e.what());
        }
    } else if (key == "seed") {
        long long s = parse_int(key, value);
        if (s < 0) {
            throw ConfigError(key, "must be non-negative");
        }
        cfg.sampling.seed = static_cast<std::uint64_t>(s);
    } else if (key == "steps") {
        cfg.steps = static_cast<int>(parse_int(key, value));
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "threads") {
        cfg.threads = static_cast<int>(parse_int(key, value));
    } else {
        throw ConfigError(key, "unknown key");
    }
}

ExperimentConfig parse_config(std::istream &in) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(trim(line), "line " + std::to_string(lineno) + " is not key=value");
        }
        apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open '" + path + "'");
    }
    return parse_config(in);
}

}  // namespace holo
