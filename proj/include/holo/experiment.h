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

#ifndef HOLO_EXPERIMENT_H
#define HOLO_EXPERIMENT_H

#include <iosfwd>
#include <string>
#include <vector>

#include "holo/config.h"
#include "holo/linalg.h"

namespace holo {

/// Shortest round-trip text of v with ".0" appended to integral values.
std::string format_label_number(double v);

/// One noise setting swept by an experiment.
struct NoiseSetting {
    std::string label;  ///< "l2=0.005", "T=5.0", "T=5.0_l2=0.01"; empty when noiseless
    NoiseModel model;
};

/// Named initial state of the per-state figure, in the reference basis.
struct NamedState {
    std::string label;  ///< up, down, sym
    Vector4c psi;
};

std::vector<NamedState> named_states();

/// Noise settings implied by a config, with Ohmic rates already evaluated.
std::vector<NoiseSetting> noise_settings(const ExperimentConfig &cfg);

/// CSV header fields, starting with omega_tau.
std::vector<std::string> csv_columns(const ExperimentConfig &cfg);

struct ExperimentRow {
    double omega_tau = 0.0;
    std::vector<double> values;
};

struct ExperimentResult {
    std::vector<std::string> columns;
    std::vector<ExperimentRow> rows;       ///< grid order, failed points omitted
    std::vector<std::string> failures;     ///< one message per omitted row
};

/// Computes every row of the sweep. Rows are distributed over worker threads
/// and returned in grid order.
ExperimentResult compute_experiment(const ExperimentConfig &cfg, std::ostream &diag);

void write_csv(std::ostream &out, const ExperimentResult &result);

/// compute_experiment + write_csv to cfg.out. Failed rows are reported on diag.
ExperimentResult run_experiment(const ExperimentConfig &cfg, std::ostream &diag);

struct OptimalTimeEntry {
    std::string label;
    double tau_star = 0.0;        ///< first revival, closed form
    double tau_noisy_max = 0.0;   ///< local maximum of the noisy mean fidelity nearest tau_star
    double offset = 0.0;          ///< tau_noisy_max - tau_star
    double relative_offset = 0.0; ///< offset / tau_star
    double fidelity_at_tau_star = 0.0;
    double fidelity_max = 0.0;
};

/// Fine sweep of the noisy mean fidelity over tau_star (1 +- 0.1), then a
/// Brent refinement around the local maximum nearest tau_star.
std::vector<OptimalTimeEntry> optimal_time_report(const ExperimentConfig &cfg);

void write_optimal_report(std::ostream &out, const std::vector<OptimalTimeEntry> &entries);

}  // namespace holo

#endif
