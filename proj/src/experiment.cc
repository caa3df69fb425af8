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

#include "holo/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include <boost/math/tools/minima.hpp>

#include "holo/errors.h"
#include "holo/master_equation.h"
#include "holo/propagator.h"

namespace holo {

namespace {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int worker_count(const ExperimentConfig &cfg, int jobs) {
    int n = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(n, 1, std::max(1, jobs));
}

IntegrationOptions integration_options(const ExperimentConfig &cfg) {
    IntegrationOptions o;
    o.steps_per_segment = cfg.steps;
    o.record_every = 0;
    return o;
}

std::string fixed_label(double l2) {
    return "l2=" + format_label_number(l2);
}

std::string ohmic_label(const ExperimentConfig &cfg, double t, double l2) {
    std::string label = "T=" + format_label_number(t);
    if (cfg.lambda2.size() > 1) {
        label += "_l2=" + format_label_number(l2);
    }
    return label;
}

double mean_over(const NoisyChannel &ch, const std::vector<Vector4c> &states) {
    double sum = 0.0;
    for (const auto &psi : states) {
        sum += ch.fidelity(psi);
    }
    return sum / static_cast<double>(states.size());
}

}  // namespace

std::string format_label_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, ec == std::errc() ? ptr : buf);
    if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::vector<NamedState> named_states() {
    Vector4c up = Vector4c::Zero();
    up(0) = 1.0;
    Vector4c down = Vector4c::Zero();
    down(1) = 1.0;
    Vector4c sym = (up + down) / std::numbers::sqrt2;
    return {{"up", up}, {"down", down}, {"sym", sym}};
}

std::vector<NoiseSetting> noise_settings(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<NoiseSetting> out;
    if (!cfg.noisy()) {
        out.push_back({"", NoiseModel{}});
        return out;
    }
    if (cfg.effective_preset() == NoisePreset::Fixed) {
        for (double l2 : cfg.lambda2) {
            out.push_back({fixed_label(l2), NoiseModel{fixed_rates_preset(), l2}});
        }
        return out;
    }
    for (double t : cfg.temperature) {
        RateTable rates = rates_from_bath(OhmicBath{cfg.kappa, cfg.omega_c, t});
        for (double l2 : cfg.lambda2) {
            out.push_back({ohmic_label(cfg, t, l2), NoiseModel{rates, l2}});
        }
    }
    return out;
}

std::vector<std::string> csv_columns(const ExperimentConfig &cfg) {
    std::vector<std::string> cols{"omega_tau"};
    if (!cfg.noisy()) {
        cols.push_back("F_mean");
        return cols;
    }
    std::vector<std::string> labels;
    if (cfg.effective_preset() == NoisePreset::Fixed) {
        for (double l2 : cfg.lambda2) {
            labels.push_back(fixed_label(l2));
        }
    } else {
        for (double t : cfg.temperature) {
            for (double l2 : cfg.lambda2) {
                labels.push_back(ohmic_label(cfg, t, l2));
            }
        }
    }
    if (cfg.figure == Figure::PerState) {
        for (const auto &s : named_states()) {
            for (const auto &l : labels) {
                cols.push_back("F_" + s.label + "_" + l);
            }
        }
    } else {
        for (const auto &l : labels) {
            cols.push_back("F_mean_" + l);
        }
    }
    return cols;
}

ExperimentResult compute_experiment(const ExperimentConfig &cfg, std::ostream &diag) {
    cfg.validate();
    const std::vector<NoiseSetting> settings = noise_settings(cfg);
    const std::vector<double> grid = cfg.grid();
    const std::vector<Vector4c> bloch = bloch_states(cfg.sampling);
    const std::vector<DensityMatrix> bloch_rho = bloch_samples(cfg.sampling);
    const std::vector<NamedState> states = named_states();
    const IntegrationOptions opts = integration_options(cfg);

    ExperimentResult result;
    result.columns = csv_columns(cfg);

    auto compute_row = [&](double x) {
        ExperimentRow row;
        row.omega_tau = x;
        PathSpec path = not_gate_path(x);
        if (!cfg.noisy()) {
            row.values.push_back(mean_fidelity_noiseless(path, 1.0, bloch_rho));
            return row;
        }
        std::vector<NoisyChannel> channels;
        for (const auto &s : settings) {
            channels.push_back(noisy_channel(path, 1.0, s.model, opts));
        }
        if (cfg.figure == Figure::PerState) {
            for (const auto &st : states) {
                for (const auto &ch : channels) {
                    row.values.push_back(ch.fidelity(st.psi));
                }
            }
        } else {
            for (const auto &ch : channels) {
                row.values.push_back(mean_over(ch, bloch));
            }
        }
        return row;
    };

    const int n = static_cast<int>(grid.size());
    std::vector<ExperimentRow> rows(n);
    std::vector<std::string> errors(n);
    std::vector<char> ok(n, 0);
    std::atomic<int> next{0};
    std::exception_ptr fatal;
    std::mutex fatal_mu;

    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                rows[i] = compute_row(grid[i]);
                ok[i] = 1;
            } catch (const IntegrationDiverged &e) {
                errors[i] = e.what();
            } catch (const NumericalError &e) {
                errors[i] = e.what();
            } catch (...) {
                std::lock_guard lock(fatal_mu);
                if (!fatal) {
                    fatal = std::current_exception();
                }
                next = n;
            }
        }
    };
    const int workers = worker_count(cfg, n);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (fatal) {
        std::rethrow_exception(fatal);
    }

    for (int i = 0; i < n; ++i) {
        if (ok[i]) {
            result.rows.push_back(std::move(rows[i]));
        } else {
            std::string msg = "omega_tau=" + format_number(grid[i]) + ": " + errors[i];
            diag << "row omitted: " << msg << '\n';
            result.failures.push_back(std::move(msg));
        }
    }
    return result;
}

void write_csv(std::ostream &out, const ExperimentResult &result) {
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        out << (i ? "," : "") << result.columns[i];
    }
    out << '\n';
    for (const auto &row : result.rows) {
        out << format_number(row.omega_tau);
        for (double v : row.values) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

ExperimentResult run_experiment(const ExperimentConfig &cfg, std::ostream &diag) {
    cfg.validate();
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw ConfigError("out", "cannot write '" + cfg.out + "'");
    }
    ExperimentResult result = compute_experiment(cfg, diag);
    write_csv(file, result);
    if (!file.flush()) {
        throw ConfigError("out", "write to '" + cfg.out + "' failed");
    }
    return result;
}

std::vector<OptimalTimeEntry> optimal_time_report(const ExperimentConfig &cfg) {
    if (!cfg.noisy()) {
        throw ConfigError("figure", "optimal-report needs a noisy figure");
    }
    const std::vector<NoiseSetting> settings = noise_settings(cfg);
    const std::vector<Vector4c> bloch = bloch_states(cfg.sampling);
    const IntegrationOptions opts = integration_options(cfg);
    const double tau_star = revival_times(1, 1, 1.0).front();

    const int points = 41;
    const double lo = 0.9 * tau_star, hi = 1.1 * tau_star;
    const double step = (hi - lo) / (points - 1);

    std::vector<OptimalTimeEntry> out(settings.size());
    std::atomic<int> next{0};
    std::exception_ptr fatal;
    std::mutex fatal_mu;
    const int n = static_cast<int>(settings.size());

    auto worker = [&] {
        for (int s = next++; s < n; s = next++) {
            try {
                const NoiseModel &model = settings[s].model;
                auto mean_at = [&](double x) {
                    return mean_over(noisy_channel(not_gate_path(x), 1.0, model, opts), bloch);
                };
                std::vector<double> f(points);
                for (int i = 0; i < points; ++i) {
                    f[i] = mean_at(lo + step * i);
                }
                int best = -1;
                for (int i = 1; i + 1 < points; ++i) {
                    if (f[i] >= f[i - 1] && f[i] >= f[i + 1]) {
                        double x = lo + step * i;
                        if (best < 0 || std::abs(x - tau_star) < std::abs(lo + step * best - tau_star)) {
                            best = i;
                        }
                    }
                }
                OptimalTimeEntry e;
                e.label = settings[s].label;
                e.tau_star = tau_star;
                e.fidelity_at_tau_star = mean_at(tau_star);
                if (best < 0) {
                    best = static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());
                    e.tau_noisy_max = lo + step * best;
                    e.fidelity_max = f[best];
                } else {
                    auto [x, neg] = boost::math::tools::brent_find_minima([&](double t) { return -mean_at(t); },
                                                                          lo + step * (best - 1),
                                                                          lo + step * (best + 1), 32);
                    e.tau_noisy_max = x;
                    e.fidelity_max = -neg;
                }
                e.offset = e.tau_noisy_max - tau_star;
                e.relative_offset = e.offset / tau_star;
                out[s] = e;
            } catch (...) {
                std::lock_guard lock(fatal_mu);
                if (!fatal) {
                    fatal = std::current_exception();
                }
                next = n;
            }
        }
    };
    const int workers = worker_count(cfg, n);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (fatal) {
        std::rethrow_exception(fatal);
    }
    return out;
}

void write_optimal_report(std::ostream &out, const std::vector<OptimalTimeEntry> &entries) {
    out << "noise,tau_star,tau_noisy_max,offset,relative_offset,F_at_tau_star,F_max\n";
    for (const auto &e : entries) {
        out << (e.label.empty() ? "none" : e.label) << ',' << format_number(e.tau_star) << ','
            << format_number(e.tau_noisy_max) << ',' << format_number(e.offset) << ','
            << format_number(e.relative_offset) << ',' << format_number(e.fidelity_at_tau_star) << ','
            << format_number(e.fidelity_max) << '\n';
    }
}

}  // namespace holo
