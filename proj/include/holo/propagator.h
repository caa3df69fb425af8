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

#ifndef HOLO_PROPAGATOR_H
#define HOLO_PROPAGATOR_H

#include <span>
#include <vector>

#include "holo/bloch.h"
#include "holo/linalg.h"
#include "holo/sphere_path.h"

namespace holo {

/// Exact propagator of one constant-rate segment,
///   U = exp(i t D) exp(-i t (H + D)),
/// evaluated in the segment's start frame and rotated into the reference
/// basis (see reference_frame()).
Matrix4c segment_propagator(const PathSegment &seg, double omega);

/// Adiabatic-limit approximation of segment_propagator: the H + D exponent is
/// replaced by its block-diagonal part (dark block and each bright level).
/// Diagnostics only.
Matrix4c adiabatic_segment_propagator(const PathSegment &seg, double omega);

struct LoopPropagator {
    Matrix4c total;                    ///< ordered product, last segment leftmost
    std::vector<Matrix4c> per_segment;
    double omega_tau = 0.0;
};

LoopPropagator loop_propagator(const PathSpec &path, double omega);

/// Closed-form segment propagators of the NOT loop with equal arc times, in
/// the reference basis. alpha = sqrt(9 pi^2 + 4 (Omega tau)^2) / 6 and
/// beta = 6 pi + 4 i Omega tau.
struct NotLoopClosedForm {
    Matrix4c u1, u2, u3;
    double alpha = 0.0;
    cplx beta;
};
NotLoopClosedForm not_loop_closed_form(double omega_tau);

/// Adiabatic target of a closed loop in the reference basis: the holonomy on
/// the dark block and the dynamical phases exp(-+ i Omega tau) on D+-.
Matrix4c adiabatic_target(const PathSpec &path, double omega);

/// Q = U^dagger U_ad for an arbitrary closed loop.
Matrix4c q_operator(const PathSpec &path, double omega);
/// Q for the NOT loop at the given Omega tau (Omega = 1).
Matrix4c q_operator(double omega_tau);

/// Closed form of Q_11 for the NOT loop:
/// (4 x^2 + 9 pi^2 cos a') / (9 pi^2 + 4 x^2), a' = (x/3) sqrt(1 + (3 pi / 2x)^2).
double q11_closed_form(double omega_tau);

/// tau*_k(n) = ((2n + 1) pi / (2n Omega)) sqrt(16 k^2 n^2 - 1) for k = 1..k_max.
std::vector<double> revival_times(int k_max, int n, double omega);

/// Family of loops sharing the generalized NOT geometry.
struct LoopShape {
    int n = 1;
    bool reversed = false;

    PathSpec path(double tau) const;
    /// Phase accumulated by the equatorial arc generator; revivals sit at
    /// multiples of 2 pi. Equal to a' of q11_closed_form for n = 1.
    double revival_phase(double omega_tau) const;
    /// Inverse of revival_phase (Omega tau at which the phase equals `phase`).
    double omega_tau_at_phase(double phase) const;
};

struct RevivalReport {
    int k = 0;
    double tau_star = 0.0;         ///< numeric maximum of Re Q_11
    double closed_form_tau = 0.0;  ///< revival_times(...)[k - 1]
    Matrix4c q_matrix;
    double q11_deviation = 0.0;    ///< |Q_11 - 1| at tau_star
    double fidelity_at_peak = 0.0; ///< mean noiseless fidelity over 50 Fibonacci states
};

/// Locates every tau with Q_11 = 1 and Omega tau in [omega_tau_lo, omega_tau_hi].
/// Brackets come from revival_phase; each bracket is refined on the numeric
/// propagator. Returns an empty list when no revival lies in the range.
std::vector<RevivalReport> find_revivals_numeric(double omega_tau_lo, double omega_tau_hi, double omega,
                                                 LoopShape shape = {});

/// F = Tr(U_ad s U_ad^dagger U s U^dagger) for a pure initial state supported on
/// span{|0>, |1>}.
double fidelity_noiseless(const PathSpec &path, double omega, const DensityMatrix &initial);

double mean_fidelity_noiseless(const PathSpec &path, double omega, std::span<const DensityMatrix> samples);
double mean_fidelity_noiseless(const PathSpec &path, double omega, const BlochSampling &sampling);

struct FidelityPeak {
    double omega_tau = 0.0;
    double mean_fidelity = 0.0;
    bool is_revival = false;  ///< mean fidelity equals 1 within 1e-9
};

/// Local maxima of the mean noiseless NOT-loop fidelity on a uniform grid,
/// each refined by a bracketed 1-D maximization. Peaks with F < 1 are the
/// sub-unit maxima that sit between revivals.
std::vector<FidelityPeak> mean_fidelity_peaks(double omega_tau_lo, double omega_tau_hi, int points,
                                              const BlochSampling &sampling, LoopShape shape = {});

/// Throws ValidationError unless the state lives on the computational block.
void require_computational_support(const DensityMatrix &rho, const char *who);

}  // namespace holo

#endif
