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

#ifndef HOLO_CONFIG_H
#define HOLO_CONFIG_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holo/bloch.h"
#include "holo/noise.h"

namespace holo {

enum class Figure { IdealMean, PerState, NoisyMean, OhmicMean };
enum class NoisePreset { Fixed, Ohmic };

Figure parse_figure(const std::string &name);
const char *figure_name(Figure f);
NoisePreset parse_preset(const std::string &name);
const char *preset_name(NoisePreset p);

/// One experiment: a sweep of the NOT loop over Omega tau (Omega = 1).
struct ExperimentConfig {
    Figure figure = Figure::IdealMean;
    double tau_min = 1.0;
    double tau_max = 100.0;
    int tau_points = 300;
    std::vector<double> lambda2{0.01};
    std::optional<NoisePreset> preset;  ///< unset: ohmic for ohmic-mean, fixed otherwise
    double kappa = 0.01;
    double omega_c = 100.0;
    std::vector<double> temperature{0.0};
    BlochSampling sampling;
    int steps = 2000;
    std::string out = "holonomy.csv";
    int threads = 0;  ///< 0: one per hardware thread

    NoisePreset effective_preset() const;
    bool noisy() const {
        return figure != Figure::IdealMean;
    }
    /// Throws ConfigError naming the offending field.
    void validate() const;
    std::vector<double> grid() const;
};

/// Sets one field from its textual form. Keys match the CLI flag names
/// (tau-min, omega-c, ...); underscores are accepted in place of hyphens.
void apply_setting(ExperimentConfig &cfg, const std::string &key, const std::string &value);

/// Flat key=value lines; '#' starts a comment.
ExperimentConfig parse_config(std::istream &in);
ExperimentConfig load_config(const std::string &path);

}  // namespace holo

#endif
