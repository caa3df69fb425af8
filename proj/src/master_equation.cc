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

#include "holo/master_equation.h"

#include <cmath>
#include <sstream>

#include "holo/errors.h"
#include "holo/propagator.h"
#include "holo/tripod.h"

namespace holo {

namespace {

/// Aggregated dissipator at one point: K picks up a diagonal correction and
/// populations feed the diagonal through jump(a, b).
struct PointCoefficients {
    Vector4c k_diag = Vector4c::Zero();
    Eigen::Matrix4d jump = Eigen::Matrix4d::Zero();
};

PointCoefficients point_coefficients(SpherePoint p, const NoiseModel &model) {
    PointCoefficients c;
    if (model.lambda2 == 0.0) {
        return c;
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            double f = f_coefficient(a, b, p);
            if (f == 0.0) {
                continue;
            }
            double g = model.rates.gamma[a][b];
            double d = model.rates.delta[a][b];
            c.k_diag(a) += model.lambda2 * cplx(-f * d, -0.5 * f * g);
            c.jump(a, b) = model.lambda2 * f * g;
        }
    }
    return c;
}

Matrix4c fast_rhs(const Matrix4c &rho, const Matrix4c &h, const PointCoefficients &c) {
    Matrix4c k = h;
    k.diagonal() += c.k_diag;
    Matrix4c kr = k * rho;
    Matrix4c out = -kI * (kr - kr.adjoint());
    Eigen::Vector4d pops = rho.diagonal().real();
    Eigen::Vector4d gain = c.jump.transpose() * pops;
    for (int b = 0; b < 4; ++b) {
        out(b, b) += gain(b);
    }
    return out;
}

/// Steps a batch of operators through one path, shared coefficients per substep.
class Stepper {
   public:
    Stepper(const PathSpec &path, double omega, const NoiseModel &model, const IntegrationOptions &opts)
        : path_(path), omega_(omega), model_(model), opts_(opts) {
        if (!(omega > 0.0) || !std::isfinite(omega)) {
            throw ValidationError("master equation: Omega must be positive");
        }
        model.validate();
        opts.validate();
    }

    /// Callback signature: on_record(segment index, elapsed in segment, absolute time, states).
    template <typename OnRecord>
    std::vector<Matrix4c> run(std::vector<Matrix4c> ops, OnRecord &&on_record) {
        const auto &segs = path_.segments();
        std::vector<cplx> traces;
        Matrix4c s0 = frame_in_reference(segs.front().start);
        for (auto &op : ops) {
            op = s0.adjoint() * op * s0;
            traces.push_back(op.trace());
        }
        const Matrix4c h0 = eigen_hamiltonian(omega_);
        double t_abs = 0.0;
        on_record(0, 0.0, 0.0, ops);
        for (std::size_t j = 0; j < segs.size(); ++j) {
            const PathSegment &seg = segs[j];
            const Matrix4c d = connection_d(seg.start, seg.theta_rate, seg.phi_rate);
            const Matrix4c h = h0 + d;
            const int n = opts_.steps_per_segment;
            const double dt = seg.duration / n;
            PointCoefficients c0 = point_coefficients(seg.at(0.0), model_);
            for (int s = 0; s < n; ++s) {
                const double t0 = s * dt;
                PointCoefficients cm = point_coefficients(seg.at(t0 + 0.5 * dt), model_);
                PointCoefficients c1 = point_coefficients(seg.at(t0 + dt), model_);
                for (std::size_t i = 0; i < ops.size(); ++i) {
                    Matrix4c &r = ops[i];
                    Matrix4c k1 = fast_rhs(r, h, c0);
                    Matrix4c k2 = fast_rhs(r + 0.5 * dt * k1, h, cm);
                    Matrix4c k3 = fast_rhs(r + 0.5 * dt * k2, h, cm);
                    Matrix4c k4 = fast_rhs(r + dt * k3, h, c1);
                    r += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                    guard(r, traces[i], t_abs + t0 + dt);
                }
                c0 = c1;
                bool last = s + 1 == n;
                if (last || (opts_.record_every > 0 && (s + 1) % opts_.record_every == 0)) {
                    double elapsed = last ? seg.duration : (s + 1) * dt;
                    on_record(j, elapsed, t_abs + elapsed, ops);
                }
            }
            t_abs += seg.duration;
            Matrix4c jmp = frame_in_reference(seg.start) * expm_generator(kI * d, seg.duration);
            if (j + 1 < segs.size()) {
                jmp = frame_in_reference(segs[j + 1].start).adjoint() * jmp;
            }
            for (auto &op : ops) {
                op = jmp * op * jmp.adjoint();
            }
        }
        return ops;
    }

   private:
    void guard(Matrix4c &r, cplx trace0, double t) const {
        double herm = (r - r.adjoint()).cwiseAbs().maxCoeff();
        if (!(herm <= opts_.hermiticity_drift_bound)) {
            std::ostringstream ss;
            ss << "Hermiticity drift " << herm << " at t = " << t
               << "; increase steps_per_segment";
            throw IntegrationDiverged(ss.str());
        }
        r = 0.5 * (r + r.adjoint()).eval();
        double drift = std::abs(r.trace() - trace0);
        if (!(drift <= opts_.trace_drift_bound)) {
            std::ostringstream ss;
            ss << "trace drift " << drift << " at t = " << t << "; increase steps_per_segment";
            throw IntegrationDiverged(ss.str());
        }
    }

    const PathSpec &path_;
    double omega_;
    const NoiseModel &model_;
    const IntegrationOptions &opts_;
};

Matrix4c adiabatic_generator(const Matrix4c &h0, const Matrix4c &d) {
    Matrix4c block = Matrix4c::Zero();
    block.topLeftCorner<2, 2>() = d.topLeftCorner<2, 2>();
    block(2, 2) = d(2, 2);
    block(3, 3) = d(3, 3);
    return h0 + block;
}

DensityMatrix checked_state(const Matrix4c &m, double t) {
    try {
        return DensityMatrix(ComplexMatrix(m), 1e-6);
    } catch (const ValidationError &e) {
        std::ostringstream ss;
        ss << "state left the physical set at t = " << t << ": " << e.what();
        throw IntegrationDiverged(ss.str());
    }
}

std::array<Matrix4c, 4> pauli_inputs() {
    std::array<Matrix4c, 4> in;
    for (auto &m : in) {
        m = Matrix4c::Zero();
    }
    in[0](0, 0) = 1.0;
    in[0](1, 1) = 1.0;
    in[1](0, 1) = 1.0;
    in[1](1, 0) = 1.0;
    in[2](0, 1) = -kI;
    in[2](1, 0) = kI;
    in[3](0, 0) = 1.0;
    in[3](1, 1) = -1.0;
    return in;
}

}  // namespace

void IntegrationOptions::validate() const {
    if (steps_per_segment < 100) {
        throw ValidationError("steps_per_segment must be at least 100");
    }
    if (record_every < 0) {
        throw ValidationError("record_every must be non-negative");
    }
    if (!(trace_drift_bound > 0.0) || !(hermiticity_drift_bound > 0.0)) {
        throw ValidationError("drift bounds must be positive");
    }
}

Matrix4c dissipator(const Matrix4c &rho, SpherePoint p, const RateTable &rates) {
    Matrix4c out = Matrix4c::Zero();
    for (Level a : kLevels) {
        for (Level b : kLevels) {
            double f = f_coefficient(a, b, p);
            if (f == 0.0) {
                continue;
            }
            Matrix4c l = lindblad_operator(a, b);
            Matrix4c llt = l * l.adjoint();
            Matrix4c comm = llt * rho - rho * llt;
            Matrix4c anti = llt * rho + rho * llt;
            Matrix4c jump = l.adjoint() * rho * l;
            out += f * (kI * rates.delta_at(a, b) * comm - 0.5 * rates.gamma_at(a, b) * (anti - 2.0 * jump));
        }
    }
    return out;
}

ComplexMatrix dissipator(const DensityMatrix &rho, SpherePoint p, const NoiseModel &model) {
    if (rho.dim() != 4) {
        throw ValidationError("dissipator: expected a four-level density matrix");
    }
    model.validate();
    return dissipator(Matrix4c(rho.matrix()), p, model.rates);
}

Matrix4c master_rhs(const Matrix4c &rho, const Matrix4c &h, SpherePoint p, const NoiseModel &model) {
    return -kI * (h * rho - rho * h) + model.lambda2 * dissipator(rho, p, model.rates);
}

Trajectory integrate_master_equation(const PathSpec &path, double omega, const DensityMatrix &initial,
                                     const NoiseModel &model, const IntegrationOptions &opts) {
    require_computational_support(initial, "integrate_master_equation");
    Stepper stepper(path, omega, model, opts);
    const auto &segs = path.segments();
    const Matrix4c h0 = eigen_hamiltonian(omega);

    Trajectory tr;
    // Adiabatically transported reference, held in the frame of the current
    // segment start like the integrated state.
    Matrix4c s0 = frame_in_reference(segs.front().start);
    Matrix4c sigma0 = initial.matrix();
    Matrix4c ad_seg_start = s0.adjoint() * sigma0 * s0;
    std::size_t ad_seg = 0;

    auto on_record = [&](std::size_t j, double elapsed, double t, const std::vector<Matrix4c> &ops) {
        const PathSegment &seg = segs[j];
        const Matrix4c d = connection_d(seg.start, seg.theta_rate, seg.phi_rate);
        while (ad_seg < j) {
            const PathSegment &prev = segs[ad_seg];
            const Matrix4c dp = connection_d(prev.start, prev.theta_rate, prev.phi_rate);
            Matrix4c u = expm_generator(-kI * adiabatic_generator(h0, dp), prev.duration);
            Matrix4c jmp = frame_in_reference(segs[ad_seg + 1].start).adjoint() * frame_in_reference(prev.start) *
                           expm_generator(kI * dp, prev.duration);
            Matrix4c w = jmp * u;
            ad_seg_start = w * ad_seg_start * w.adjoint();
            ++ad_seg;
        }
        Matrix4c rot = frame_in_reference(seg.start) * expm_generator(kI * d, elapsed);
        Matrix4c u_ad = expm_generator(-kI * adiabatic_generator(h0, d), elapsed);
        Matrix4c ad_lab = rot * u_ad * ad_seg_start * u_ad.adjoint() * rot.adjoint();
        Matrix4c lab = rot * ops.front() * rot.adjoint();
        tr.times.push_back(t);
        tr.states_r.push_back(checked_state(ops.front(), t));
        tr.states_lab.push_back(checked_state(lab, t));
        tr.fidelity.push_back((ad_lab * lab).trace().real());
    };

    std::vector<Matrix4c> final_ops = stepper.run({sigma0}, on_record);
    if (path.is_closed()) {
        Matrix4c target = adiabatic_target(path, omega);
        Matrix4c ideal = target * sigma0 * target.adjoint();
        tr.final_fidelity = (ideal * final_ops.front()).trace().real();
    } else {
        tr.final_fidelity = tr.fidelity.back();
    }
    return tr;
}

std::vector<Matrix4c> evolve_operators(const PathSpec &path, double omega, std::span<const Matrix4c> inputs,
                                       const NoiseModel &model, const IntegrationOptions &opts) {
    for (const auto &m : inputs) {
        if (!is_hermitian(m)) {
            throw ValidationError("evolve_operators: inputs must be Hermitian");
        }
    }
    Stepper stepper(path, omega, model, opts);
    return stepper.run(std::vector<Matrix4c>(inputs.begin(), inputs.end()),
                       [](std::size_t, double, double, const std::vector<Matrix4c> &) {});
}

Matrix4c NoisyChannel::apply(const Matrix4c &rho0) const {
    double tr = (rho0(0, 0) + rho0(1, 1)).real();
    double x = 2 * rho0(0, 1).real();
    double y = -2 * rho0(0, 1).imag();
    double z = (rho0(0, 0) - rho0(1, 1)).real();
    return 0.5 * (tr * images[0] + x * images[1] + y * images[2] + z * images[3]);
}

double NoisyChannel::fidelity(const Vector4c &psi) const {
    Matrix4c out = apply(psi * psi.adjoint());
    Vector4c ideal = target * psi;
    return (ideal.adjoint() * out * ideal).value().real();
}

NoisyChannel noisy_channel(const PathSpec &path, double omega, const NoiseModel &model,
                           const IntegrationOptions &opts) {
    path.require_closed("noisy_channel");
    auto in = pauli_inputs();
    std::vector<Matrix4c> out = evolve_operators(path, omega, in, model, opts);
    NoisyChannel ch;
    for (int i = 0; i < 4; ++i) {
        ch.images[i] = out[i];
    }
    ch.target = adiabatic_target(path, omega);
    return ch;
}

double fidelity_noisy(const PathSpec &path, double omega, const DensityMatrix &initial, const NoiseModel &model,
                      const IntegrationOptions &opts) {
    require_computational_support(initial, "fidelity_noisy");
    path.require_closed("fidelity_noisy");
    Matrix4c rho0 = initial.matrix();
    std::vector<Matrix4c> out = evolve_operators(path, omega, std::span<const Matrix4c>(&rho0, 1), model, opts);
    Matrix4c target = adiabatic_target(path, omega);
    DensityMatrix ideal(ComplexMatrix(target * rho0 * target.adjoint()));
    return state_fidelity(ideal, checked_state(out.front(), path.total_time()));
}

double mean_fidelity_noisy(const PathSpec &path, double omega, const BlochSampling &sampling,
                           const NoiseModel &model, const IntegrationOptions &opts) {
    NoisyChannel ch = noisy_channel(path, omega, model, opts);
    std::vector<Vector4c> states = bloch_states(sampling);
    double sum = 0.0;
    for (const auto &psi : states) {
        sum += ch.fidelity(psi);
    }
    return sum / static_cast<double>(states.size());
}

}  // namespace holo
