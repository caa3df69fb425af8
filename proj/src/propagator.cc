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

#include "holo/propagator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "holo/errors.h"
#include "holo/tripod.h"

namespace holo {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix4c to_reference(const Matrix4c &local, SpherePoint start) {
    Matrix4c s = frame_in_reference(start);
    return s * local * s.adjoint();
}

Matrix4c expm4(const Matrix4c &generator, double t) {
    return expm_generator(generator, t);
}

double fidelity_with(const Matrix4c &u, const Matrix4c &target, const ComplexMatrix &rho0) {
    Matrix4c r = rho0;
    Matrix4c actual = u * r * u.adjoint();
    Matrix4c ideal = target * r * target.adjoint();
    return (ideal * actual).trace().real();
}

}  // namespace

void require_computational_support(const DensityMatrix &rho, const char *who) {
    if (rho.dim() != 4) {
        throw ValidationError(std::string(who) + ": expected a four-level density matrix");
    }
    const ComplexMatrix &m = rho.matrix();
    double leak = std::max(m.bottomRows(2).cwiseAbs().maxCoeff(), m.rightCols(2).cwiseAbs().maxCoeff());
    if (leak > 1e-10) {
        throw ValidationError(std::string(who) + ": initial state has support outside span{|0>, |1>}");
    }
}

Matrix4c segment_propagator(const PathSegment &seg, double omega) {
    seg.validate();
    Matrix4c d = connection_d(seg.start, seg.theta_rate, seg.phi_rate);
    Matrix4c k = eigen_hamiltonian(omega) + d;
    Matrix4c local = expm4(kI * d, seg.duration) * expm4(-kI * k, seg.duration);
    return to_reference(local, seg.start);
}

Matrix4c adiabatic_segment_propagator(const PathSegment &seg, double omega) {
    seg.validate();
    Matrix4c d = connection_d(seg.start, seg.theta_rate, seg.phi_rate);
    Matrix4c block = Matrix4c::Zero();
    block.topLeftCorner<2, 2>() = d.topLeftCorner<2, 2>();
    block(2, 2) = d(2, 2);
    block(3, 3) = d(3, 3);
    Matrix4c k = eigen_hamiltonian(omega) + block;
    Matrix4c local = expm4(kI * d, seg.duration) * expm4(-kI * k, seg.duration);
    return to_reference(local, seg.start);
}

LoopPropagator loop_propagator(const PathSpec &path, double omega) {
    path.require_closed("loop_propagator");
    LoopPropagator out;
    out.total = Matrix4c::Identity();
    for (const auto &seg : path.segments()) {
        out.per_segment.push_back(segment_propagator(seg, omega));
        out.total = out.per_segment.back() * out.total;
    }
    out.omega_tau = omega * path.total_time();
    return out;
}

NotLoopClosedForm not_loop_closed_form(double omega_tau) {
    if (!(omega_tau > 0.0)) {
        throw ValidationError("not_loop_closed_form: Omega tau must be positive");
    }
    const double w = omega_tau;
    const double a = std::sqrt(9 * kPi * kPi + 4 * w * w) / 6;
    const cplx b{6 * kPi, 4 * w};
    const cplx bc = std::conj(b);
    const double ca = std::cos(a), sa = std::sin(a);
    const double r2 = std::numbers::sqrt2;
    const cplx i = kI;

    NotLoopClosedForm cf;
    cf.alpha = a;
    cf.beta = b;

    const cplx s_over = cplx(kPi * sa / (2 * a));
    const cplx plus_b = (3 * kPi + 2.0 * i * w * ca + 6 * a * sa) / b;
    const cplx minus_b = (-3 * kPi - 2.0 * i * w * ca + 6 * a * sa) / b;
    const cplx plus_bc = (3 * kPi - 2.0 * i * w * ca + 6 * a * sa) / bc;
    const cplx minus_bc = (-3 * kPi + 2.0 * i * w * ca + 6 * a * sa) / bc;
    const cplx down_b = -r2 * (2.0 * i * w + 3 * kPi * ca) / b;
    const cplx up_bc = r2 * (2.0 * i * w - 3 * kPi * ca) / bc;
    const cplx cos_m = (3 * a * ca - i * w * sa) / (3 * r2 * a);
    const cplx cos_p = (3 * a * ca + i * w * sa) / (3 * r2 * a);

    // Entry (1, 2) is printed as cos(a) - i w sin(a) / (3 sqrt2 a) in the
    // original derivation; that matrix is not unitary. The mirrored entry of
    // u3 fixes the missing 1/sqrt2 on cos(a).
    cf.u1 << 1.0, 0.0, 0.0, 0.0,
        0.0, s_over, cos_m, cos_p,
        0.0, down_b, plus_b, minus_b,
        0.0, up_bc, minus_bc, plus_bc;

    const cplx sin_term = i * w * sa / (3 * r2 * a);
    const cplx cos_term = i * kPi * w * (ca - 1) / (6 * r2 * a * a);
    const double diag = (9 * kPi * kPi + 2 * w * w + 2 * w * w * ca) / (36 * a * a);
    const double off = -w * w * (ca - 1) / (18 * a * a);
    cf.u2 << s_over, ca, -sin_term, sin_term,
        -(4 * w * w + 9 * kPi * kPi * ca) / (36 * a * a), s_over, cos_term, -cos_term,
        cos_term, -sin_term, diag, off,
        -cos_term, sin_term, off, diag;

    cf.u3 << s_over, 0.0, down_b, up_bc,
        0.0, 1.0, 0.0, 0.0,
        cos_m, 0.0, plus_b, minus_bc,
        cos_p, 0.0, minus_b, plus_bc;
    return cf;
}

Matrix4c adiabatic_target(const PathSpec &path, double omega) {
    ComplexMatrix hol = adiabatic_holonomy(path);
    double phase = omega * path.total_time();
    Matrix4c local = Matrix4c::Zero();
    local.topLeftCorner<2, 2>() = hol;
    local(2, 2) = std::exp(-kI * phase);
    local(3, 3) = std::exp(kI * phase);
    return to_reference(local, path.start());
}

Matrix4c q_operator(const PathSpec &path, double omega) {
    return loop_propagator(path, omega).total.adjoint() * adiabatic_target(path, omega);
}

Matrix4c q_operator(double omega_tau) {
    if (!(omega_tau > 0.0)) {
        throw ValidationError("q_operator: Omega tau must be positive");
    }
    return q_operator(not_gate_path(omega_tau), 1.0);
}

double q11_closed_form(double omega_tau) {
    const double x = omega_tau;
    const double r = 3 * kPi / (2 * x);
    const double ap = (x / 3) * std::sqrt(1 + r * r);
    return (4 * x * x + 9 * kPi * kPi * std::cos(ap)) / (9 * kPi * kPi + 4 * x * x);
}

std::vector<double> revival_times(int k_max, int n, double omega) {
    if (k_max < 1 || n < 1) {
        throw ValidationError("revival_times: k_max and n must be >= 1");
    }
    if (!(omega > 0.0)) {
        throw ValidationError("revival_times: Omega must be positive");
    }
    std::vector<double> out;
    for (int k = 1; k <= k_max; ++k) {
        double kn = static_cast<double>(k) * n;
        out.push_back((2.0 * n + 1) * kPi / (2.0 * n * omega) * std::sqrt(16 * kn * kn - 1));
    }
    return out;
}

PathSpec LoopShape::path(double tau) const {
    return generalized_loop_path(tau, n, reversed);
}

double LoopShape::revival_phase(double omega_tau) const {
    const double length = kPi + kPi / (2.0 * n);
    const double r = omega_tau / length;
    return kPi / (2.0 * n) * std::sqrt(1 + r * r);
}

double LoopShape::omega_tau_at_phase(double phase) const {
    const double length = kPi + kPi / (2.0 * n);
    const double q = 2.0 * n * phase / kPi;
    return q <= 1.0 ? 0.0 : length * std::sqrt(q * q - 1);
}

std::vector<RevivalReport> find_revivals_numeric(double omega_tau_lo, double omega_tau_hi, double omega,
                                                 LoopShape shape) {
    if (!(omega_tau_lo > 0.0) || !(omega_tau_hi >= omega_tau_lo)) {
        throw ValidationError("find_revivals_numeric: range must be positive and ordered");
    }
    if (!(omega > 0.0)) {
        throw ValidationError("find_revivals_numeric: Omega must be positive");
    }
    // Mean of the dark diagonal of Q. One of the two entries is flat to
    // rounding near a revival (which one depends on orientation), so the pair
    // is needed for a well-conditioned peak.
    const auto dark_trace = [&](double x) {
        Matrix4c q = q_operator(shape.path(x / omega), omega);
        return 0.5 * (q(0, 0) + q(1, 1)).real();
    };

    const int k_lo = std::max(1, static_cast<int>(std::ceil(shape.revival_phase(omega_tau_lo) / (2 * kPi) - 0.25)));
    const int k_hi = static_cast<int>(std::floor(shape.revival_phase(omega_tau_hi) / (2 * kPi) + 0.25));
    const BlochSampling probe{SamplingScheme::Fibonacci, 50, 0};
    const auto probe_states = bloch_samples(probe);

    std::vector<RevivalReport> out;
    for (int k = k_lo; k <= k_hi; ++k) {
        double a = shape.omega_tau_at_phase(2 * kPi * k - kPi / 2);
        double b = shape.omega_tau_at_phase(2 * kPi * k + kPi / 2);
        a = std::max(a, 1e-9);

        // Coarse scan first: for n > 1 the meridian entry oscillates within
        // the bracket and leaves side maxima.
        constexpr int kScan = 48;
        const double step = (b - a) / kScan;
        int best = 0;
        double best_val = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= kScan; ++i) {
            double v = dark_trace(a + step * i);
            if (v > best_val) {
                best_val = v;
                best = i;
            }
        }
        const double lo = a + step * std::max(0, best - 1);
        const double hi = a + step * std::min(kScan, best + 1);
        auto [x, fx] = boost::math::tools::brent_find_minima([&](double t) { return -dark_trace(t); }, lo, hi,
                                                             std::numeric_limits<double>::digits);
        (void)fx;
        // Newton polish on finite-difference derivatives; the peak is quadratic.
        const double h = 1e-2;
        for (int it = 0; it < 8; ++it) {
            double fm2 = dark_trace(x - 2 * h), fm1 = dark_trace(x - h), f0 = dark_trace(x);
            double fp1 = dark_trace(x + h), fp2 = dark_trace(x + 2 * h);
            double d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
            double d2 = (fp1 - 2 * f0 + fm1) / (h * h);
            if (!(d2 < 0.0)) {
                break;
            }
            double step = d1 / d2;
            x -= step;
            if (std::abs(step) < 1e-13 * std::max(1.0, x)) {
                break;
            }
        }
        if (x < omega_tau_lo || x > omega_tau_hi) {
            continue;
        }
        RevivalReport rep;
        rep.k = k;
        rep.tau_star = x / omega;
        rep.closed_form_tau = revival_times(k, shape.n, omega).back();
        PathSpec path = shape.path(rep.tau_star);
        rep.q_matrix = q_operator(path, omega);
        rep.q11_deviation = std::abs(rep.q_matrix(0, 0) - 1.0);
        const double q22_deviation = std::abs(rep.q_matrix(1, 1) - 1.0);
        if (rep.q11_deviation > 1e-12 || q22_deviation > 1e-12) {
            std::ostringstream ss;
            ss << "revival search for k=" << k << " stalled at Omega tau=" << x << " with |Q11-1|="
               << rep.q11_deviation << ", |Q22-1|=" << q22_deviation;
            throw NumericalError(ss.str());
        }
        rep.fidelity_at_peak = mean_fidelity_noiseless(path, omega, probe_states);
        out.push_back(rep);
    }
    return out;
}

double fidelity_noiseless(const PathSpec &path, double omega, const DensityMatrix &initial) {
    require_computational_support(initial, "fidelity_noiseless");
    if (std::abs(initial.purity() - 1.0) > 1e-8) {
        throw ValidationError("fidelity_noiseless: initial state must be pure");
    }
    Matrix4c u = loop_propagator(path, omega).total;
    return fidelity_with(u, adiabatic_target(path, omega), initial.matrix());
}

double mean_fidelity_noiseless(const PathSpec &path, double omega, std::span<const DensityMatrix> samples) {
    if (samples.empty()) {
        throw ValidationError("mean_fidelity_noiseless: no samples");
    }
    Matrix4c u = loop_propagator(path, omega).total;
    Matrix4c target = adiabatic_target(path, omega);
    double sum = 0.0;
    for (const auto &s : samples) {
        require_computational_support(s, "mean_fidelity_noiseless");
        sum += fidelity_with(u, target, s.matrix());
    }
    return sum / static_cast<double>(samples.size());
}

double mean_fidelity_noiseless(const PathSpec &path, double omega, const BlochSampling &sampling) {
    auto samples = bloch_samples(sampling);
    return mean_fidelity_noiseless(path, omega, samples);
}

std::vector<FidelityPeak> mean_fidelity_peaks(double omega_tau_lo, double omega_tau_hi, int points,
                                              const BlochSampling &sampling, LoopShape shape) {
    if (!(omega_tau_lo > 0.0) || !(omega_tau_hi > omega_tau_lo) || points < 3) {
        throw ValidationError("mean_fidelity_peaks: need a positive ordered range and >= 3 points");
    }
    auto samples = bloch_samples(sampling);
    auto mean_at = [&](double x) { return mean_fidelity_noiseless(shape.path(x), 1.0, samples); };
    const double step = (omega_tau_hi - omega_tau_lo) / (points - 1);
    std::vector<double> grid(points), f(points);
    for (int i = 0; i < points; ++i) {
        grid[i] = omega_tau_lo + step * i;
        f[i] = mean_at(grid[i]);
    }
    std::vector<FidelityPeak> out;
    for (int i = 1; i + 1 < points; ++i) {
        if (!(f[i] >= f[i - 1] && f[i] > f[i + 1])) {
            continue;
        }
        auto [x, neg] = boost::math::tools::brent_find_minima([&](double t) { return -mean_at(t); }, grid[i - 1],
                                                              grid[i + 1], 40);
        out.push_back({x, -neg, std::abs(-neg - 1.0) < 1e-9});
    }
    return out;
}

}  // namespace holo
