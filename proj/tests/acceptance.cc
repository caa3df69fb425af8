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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "holo/experiment.h"
#include "holo/master_equation.h"
#include "holo/propagator.h"

using namespace holo;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTauStar1 = 1.5 * kPi * std::sqrt(15.0);

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> run;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double max_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

std::vector<Vector4c> named_psi() {
    std::vector<Vector4c> out;
    for (const auto &s : named_states()) {
        out.push_back(s.psi);
    }
    return out;
}

Outcome revival_exactness() {
    double worst_f = 0.0, worst_q = 0.0;
    BlochSampling s;
    auto taus = revival_times(5, 1, 1.0);
    for (double x : taus) {
        PathSpec p = not_gate_path(x);
        worst_f = std::max(worst_f, std::abs(mean_fidelity_noiseless(p, 1.0, s) - 1.0));
        Matrix4c expected = Matrix4c::Identity();
        expected(2, 2) = std::exp(-kI * x);
        expected(3, 3) = std::exp(kI * x);
        worst_q = std::max(worst_q, max_diff(q_operator(x), expected));
    }
    return {worst_f < 1e-9 && worst_q < 1e-8, "max |F-1| " + fmt("%.2e", worst_f) + ", max Q deviation " + fmt("%.2e", worst_q)};
}

Outcome closed_form_oracle() {
    double worst = 0.0, unit = 0.0;
    for (double x : {1.0, 5.0, 10.0, 50.0, 100.0}) {
        LoopPropagator lp = loop_propagator(not_gate_path(x), 1.0);
        NotLoopClosedForm cf = not_loop_closed_form(x);
        const Matrix4c *c[] = {&cf.u1, &cf.u2, &cf.u3};
        for (int i = 0; i < 3; ++i) {
            worst = std::max(worst, max_diff(lp.per_segment[i], *c[i]));
            unit = std::max({unit, unitarity_residue(lp.per_segment[i]), unitarity_residue(*c[i])});
        }
    }
    return {worst < 1e-10 && unit < 1e-10, "max entry deviation " + fmt("%.2e", worst) + ", unitarity " + fmt("%.2e", unit)};
}

Outcome q11_closed_form_check() {
    double worst = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        double x = 0.1 * i;
        worst = std::max(worst, std::abs(q_operator(x)(0, 0) - q11_closed_form(x)));
    }
    return {worst < 1e-10, "max |dQ11| " + fmt("%.2e", worst) + " over 1000 points"};
}

Outcome adiabatic_limit() {
    const double x = 1e3;
    LoopPropagator lp = loop_propagator(not_gate_path(x), 1.0);
    ComplexMatrix expected(2, 2);
    expected << 0.0, 1.0, -1.0, 0.0;
    double dev = max_diff(lp.total.topLeftCorner<2, 2>(), expected);
    double f = mean_fidelity_noiseless(not_gate_path(x), 1.0, BlochSampling{});
    return {dev < 1e-2 && f >= 0.999, "block deviation " + fmt("%.2e", dev) + ", mean F " + fmt("%.6f", f)};
}

Outcome unitary_oracle() {
    double worst = 0.0;
    for (double x : {10.0, kTauStar1, 50.0}) {
        PathSpec path = not_gate_path(x);
        Matrix4c u = loop_propagator(path, 1.0).total;
        for (const auto &psi : named_psi()) {
            DensityMatrix rho0 = DensityMatrix::pure(psi);
            Trajectory tr = integrate_master_equation(path, 1.0, rho0, NoiseModel{fixed_rates_preset(), 0.0});
            Matrix4c exact = u * Matrix4c(rho0.matrix()) * u.adjoint();
            worst = std::max(worst, max_diff(tr.states_lab.back().matrix(), exact));
        }
    }
    return {worst < 1e-6, "max entry deviation " + fmt("%.2e", worst)};
}

Outcome cptp_sanity() {
    double tr_dev = 0.0, herm = 0.0, min_eig = 1.0;
    int runs = 0;
    const double l2s[] = {0.0, 0.005, 0.01, 0.02, 0.03, 0.04, 0.05};
    for (int i = 0; i < 50; ++i) {
        double x = 1.0 + 99.0 * i / 49.0;
        PathSpec path = not_gate_path(x);
        for (const auto &psi : named_psi()) {
            for (double l2 : l2s) {
                Trajectory tr = integrate_master_equation(path, 1.0, DensityMatrix::pure(psi),
                                                          NoiseModel{fixed_rates_preset(), l2});
                ++runs;
                for (const auto &rho : tr.states_r) {
                    tr_dev = std::max(tr_dev, std::abs(rho.matrix().trace() - 1.0));
                    herm = std::max(herm, hermiticity_residue(rho.matrix()));
                    min_eig = std::min(min_eig, rho.min_eigenvalue());
                }
            }
        }
    }
    bool ok = tr_dev < 1e-8 && herm < 1e-8 && min_eig >= -1e-6;
    return {ok, std::to_string(runs) + " runs, max |Tr-1| " + fmt("%.2e", tr_dev) + ", Hermiticity " +
                    fmt("%.2e", herm) + ", min eigenvalue " + fmt("%.2e", min_eig)};
}

Outcome preset_fidelity() {
    PathSpec path = not_gate_path(kTauStar1);
    NoiseModel m{fixed_rates_preset(), 0.005};
    double lo = 1.0;
    std::string detail;
    for (const auto &s : named_states()) {
        double f = fidelity_noisy(path, 1.0, DensityMatrix::pure(s.psi), m);
        lo = std::min(lo, f);
        detail += s.label + " " + fmt("%.5f", f) + " ";
    }
    return {lo > 0.9, detail};
}

Outcome ohmic_claims() {
    ExperimentConfig cfg;
    cfg.figure = Figure::OhmicMean;
    cfg.temperature = {0.1, 1.0, 5.0, 10.0};
    cfg.lambda2 = {0.01};
    std::ostringstream diag;
    ExperimentResult r = compute_experiment(cfg, diag);
    double worst = 1.0, worst_at = 0.0;
    int below = 0, total = 0;
    for (const auto &row : r.rows) {
        for (double v : row.values) {
            ++total;
            if (v <= 0.8) {
                ++below;
            }
            if (v < worst) {
                worst = v;
                worst_at = row.omega_tau;
            }
        }
    }
    bool a = r.failures.empty() && below == 0;

    bool b = true;
    std::string at_star;
    const BlochSampling s;
    for (double t : cfg.temperature) {
        NoiseModel m{rates_from_bath({cfg.kappa, cfg.omega_c, t}), 0.01};
        double f = mean_fidelity_noisy(not_gate_path(kTauStar1), 1.0, s, m);
        b = b && f >= 0.95;
        at_star += fmt("%.4f", f) + " ";
    }

    bool c = true;
    double g_dev = 0.0, d_dev = 0.0;
    for (double t : cfg.temperature) {
        RateTable rates = rates_from_bath({cfg.kappa, cfg.omega_c, t});
        for (Level l : kLevels) {
            g_dev = std::max(g_dev, std::abs(rates.gamma_at(l, l) - 2 * kPi * cfg.kappa * t));
            d_dev = std::max(d_dev, std::abs(rates.delta_at(l, l) - cfg.kappa * cfg.omega_c) / (cfg.kappa * cfg.omega_c));
        }
    }
    c = g_dev < 1e-10 && d_dev < 1e-4;

    std::string detail = std::string("(a) ") + (a ? "pass" : "FAIL") + ": " + std::to_string(below) + "/" +
                         std::to_string(total) + " values <= 0.8, min " + fmt("%.4f", worst) + " at omega_tau " +
                         fmt("%.3f", worst_at) + "; (b) " + (b ? "pass" : "FAIL") + ": F(tau*) " + at_star + "; (c) " +
                         (c ? "pass" : "FAIL") + ": Gamma dev " + fmt("%.1e", g_dev) + ", Delta rel dev " +
                         fmt("%.1e", d_dev);
    return {a && b && c, detail};
}

Outcome revival_asymptotics() {
    auto taus = revival_times(21, 1, 1.0);
    auto reps = find_revivals_numeric(1.0, taus.back() + 1.0, 1.0);
    if (reps.size() != 21) {
        return {false, "found " + std::to_string(reps.size()) + " revivals, expected 21"};
    }
    double spacing = reps[20].tau_star - reps[19].tau_star;
    double rel_spacing = std::abs(spacing - 6 * kPi) / (6 * kPi);
    auto closed = revival_times(3, 2, 1.0);
    auto gen = find_revivals_numeric(1.0, closed.back() + 1.0, 1.0, LoopShape{2, false});
    double rel_gen = gen.size() == 3 ? 0.0 : 1.0;
    for (std::size_t k = 0; k < gen.size() && k < 3; ++k) {
        rel_gen = std::max(rel_gen, std::abs(gen[k].tau_star - closed[k]) / closed[k]);
    }
    return {rel_spacing < 0.01 && rel_gen < 1e-6,
            "spacing(20->21) " + fmt("%.6f", spacing) + " vs 6 pi (rel " + fmt("%.2e", rel_spacing) +
                "); n=2 max rel dev " + fmt("%.2e", rel_gen)};
}

Outcome noise_monotonicity() {
    PathSpec path = not_gate_path(kTauStar1);
    bool ok = true;
    std::string detail;
    for (const auto &s : named_states()) {
        double prev = 2.0;
        for (double l2 : {0.0, 0.005, 0.01, 0.02, 0.03, 0.04, 0.05}) {
            double f = fidelity_noisy(path, 1.0, DensityMatrix::pure(s.psi), NoiseModel{fixed_rates_preset(), l2});
            ok = ok && f <= prev;
            prev = f;
        }
        detail += s.label + " F(0.05) " + fmt("%.5f", prev) + " ";
    }
    return {ok, detail};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "revival exactness", 1.0, revival_exactness},
        {2, "closed-form segment propagators", 1.0, closed_form_oracle},
        {3, "Q11 closed form", 5.0, q11_closed_form_check},
        {4, "adiabatic limit", 1.0, adiabatic_limit},
        {5, "integrator unitary oracle", 10.0, unitary_oracle},
        {6, "CPTP sanity", 300.0, cptp_sanity},
        {7, "fixed-rate fidelity above 0.9", 10.0, preset_fidelity},
        {8, "Ohmic bath claims", 600.0, ohmic_claims},
        {9, "revival asymptotics", 30.0, revival_asymptotics},
        {10, "noise monotonicity", 60.0, noise_monotonicity},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_s;
        bool pass = o.pass && in_budget;
        failed += pass ? 0 : 1;
        std::printf("%s %2d %s: %s [%.2f s, budget %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget_s, in_budget ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
