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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "holo/config.h"
#include "holo/errors.h"
#include "holo/experiment.h"
#include "holo/noise.h"
#include "holo/propagator.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

const char *const kOverrideKeys[] = {"figure", "tau-min", "tau-max", "tau-points", "lambda2",
                                     "preset", "kappa",   "omega-c", "temperature", "samples",
                                     "sampling", "seed",  "steps",   "out",        "threads"};

/// Config file plus per-key command-line overrides.
struct ConfigArgs {
    std::string path;
    std::map<std::string, std::string> overrides;

    void attach(CLI::App *cmd) {
        cmd->add_option("config", path, "key=value config file")->required();
        for (const char *key : kOverrideKeys) {
            cmd->add_option(std::string("--") + key, overrides[key], std::string("override '") + key + "'");
        }
    }

    holo::ExperimentConfig load(CLI::App *cmd) const {
        holo::ExperimentConfig cfg = holo::load_config(path);
        for (const auto &[key, value] : overrides) {
            if (cmd->get_option(std::string("--") + key)->count() > 0) {
                holo::apply_setting(cfg, key, value);
            }
        }
        cfg.validate();
        return cfg;
    }
};

int cmd_run(const holo::ExperimentConfig &cfg) {
    std::cerr << "running " << holo::figure_name(cfg.figure) << " over " << cfg.tau_points
              << " points -> " << cfg.out << '\n';
    holo::ExperimentResult res = holo::run_experiment(cfg, std::cerr);
    if (!res.failures.empty()) {
        std::cerr << res.failures.size() << " row(s) omitted after integration failure\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_optimal(const holo::ExperimentConfig &cfg) {
    auto entries = holo::optimal_time_report(cfg);
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
        throw holo::ConfigError("out", "cannot write '" + cfg.out + "'");
    }
    holo::write_optimal_report(out, entries);
    for (const auto &e : entries) {
        std::cerr << (e.label.empty() ? "noiseless" : e.label) << ": tau*=" << e.tau_star
                  << " noisy max at " << e.tau_noisy_max << " (relative offset " << e.relative_offset << ")\n";
    }
    return kExitOk;
}

int cmd_revivals(int k_max, int n, bool reversed, const std::string &path) {
    if (k_max < 1) {
        throw holo::ConfigError("k-max", "must be >= 1");
    }
    if (n < 1) {
        throw holo::ConfigError("n", "must be >= 1");
    }
    holo::LoopShape shape{n, reversed};
    constexpr double kTwoPi = 2 * std::numbers::pi;
    double lo = std::max(1e-6, shape.omega_tau_at_phase(kTwoPi - kTwoPi / 4));
    double hi = shape.omega_tau_at_phase(kTwoPi * k_max + kTwoPi / 4);
    auto reports = holo::find_revivals_numeric(lo, hi, 1.0, shape);

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw holo::ConfigError("out", "cannot write '" + path + "'");
    }
    out.precision(12);
    out << "k,omega_tau_numeric,omega_tau_closed_form,relative_difference,q11_deviation,F_mean\n";
    for (const auto &r : reports) {
        double rel = (r.tau_star - r.closed_form_tau) / r.closed_form_tau;
        out << r.k << ',' << r.tau_star << ',' << r.closed_form_tau << ',' << rel << ',' << r.q11_deviation << ','
            << r.fidelity_at_peak << '\n';
    }
    std::cerr << reports.size() << " revival(s) written to " << path << '\n';
    return kExitOk;
}

int cmd_rates(double kappa, double omega_c, double temperature, const std::string &path) {
    holo::OhmicBath bath{kappa, omega_c, temperature};
    try {
        bath.validate();
    } catch (const holo::ValidationError &e) {
        throw holo::ConfigError("bath", e.what());
    }
    holo::RateTable rates = holo::rates_from_bath(bath);
    if (path.empty()) {
        holo::print_rate_table(std::cout, rates);
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw holo::ConfigError("out", "cannot write '" + path + "'");
    }
    holo::print_rate_table(out, rates);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Non-adiabatic holonomic NOT gate on a tripod system: sweeps, revivals and noise rates"};
    app.require_subcommand(1);

    ConfigArgs run_args;
    CLI::App *run = app.add_subcommand("run", "compute a figure dataset and write it as CSV");
    run_args.attach(run);

    ConfigArgs opt_args;
    CLI::App *opt = app.add_subcommand("optimal-report", "locate the noisy fidelity maximum near the first revival");
    opt_args.attach(opt);

    int k_max = 5, n = 1;
    bool reversed = false;
    std::string revivals_out = "revivals.csv";
    CLI::App *rev = app.add_subcommand("revivals", "numerically locate fidelity revivals");
    rev->add_option("--k-max", k_max, "highest revival index")->required();
    rev->add_option("--n", n, "equatorial arc is pi/(2n)")->required();
    rev->add_flag("--reversed", reversed, "traverse the loop backwards");
    rev->add_option("--out", revivals_out, "output CSV");

    double kappa = 0.01, omega_c = 100.0, temperature = 0.0;
    std::string rates_out;
    CLI::App *rates = app.add_subcommand("rates", "print decay rates and Lamb shifts of an Ohmic bath");
    rates->add_option("--kappa", kappa, "coupling strength")->required();
    rates->add_option("--omega-c", omega_c, "cutoff frequency, units of Omega")->required();
    rates->add_option("--temperature", temperature, "temperature, units of Omega")->required();
    rates->add_option("--out", rates_out, "write to this file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run) {
            return cmd_run(run_args.load(run));
        }
        if (*opt) {
            return cmd_optimal(opt_args.load(opt));
        }
        if (*rev) {
            return cmd_revivals(k_max, n, reversed, revivals_out);
        }
        if (*rates) {
            return cmd_rates(kappa, omega_c, temperature, rates_out);
        }
    } catch (const holo::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const holo::ValidationError &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const holo::IntegrationDiverged &e) {
        std::cerr << "integration diverged: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const holo::NumericalError &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitConfig;
}
