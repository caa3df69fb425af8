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

#ifndef HOLO_MASTER_EQUATION_H
#define HOLO_MASTER_EQUATION_H

#include <array>
#include <span>
#include <vector>

#include "holo/bloch.h"
#include "holo/linalg.h"
#include "holo/noise.h"
#include "holo/sphere_path.h"

namespace holo {

/// Dissipator Gamma[rho] at point p, without the lambda^2 prefactor:
/// sum_{ab} f_ab(p) (i Delta_ab [L L^dag, rho] - Gamma_ab / 2 ({L L^dag, rho} - 2 L^dag rho L))
/// with L = L_ab. Written term by term; the integrator uses an equivalent
/// aggregated form.
Matrix4c dissipator(const Matrix4c &rho, SpherePoint p, const RateTable &rates);
ComplexMatrix dissipator(const DensityMatrix &rho, SpherePoint p, const NoiseModel &model);

/// Right-hand side of the R-picture master equation for a given coherent
/// generator h: -i [h, rho] + lambda^2 Gamma[rho].
Matrix4c master_rhs(const Matrix4c &rho, const Matrix4c &h, SpherePoint p, const NoiseModel &model);

struct IntegrationOptions {
    int steps_per_segment = 2000;
    int record_every = 100;  ///< record a sample every this many steps; 0 keeps only segment ends
    double trace_drift_bound = 1e-6;
    double hermiticity_drift_bound = 1e-8;

    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states_r;    ///< R-picture, frame of the current segment start
    std::vector<DensityMatrix> states_lab;  ///< reference basis
    std::vector<double> fidelity;           ///< overlap with the adiabatically transported state
    double final_fidelity = 0.0;            ///< against U_ad sigma(0) U_ad^dag
};

/// Fixed-step RK4 integration along the path. The initial state is given in
/// the reference basis and must live on span{|0>, |1>}. Throws
/// IntegrationDiverged when trace or Hermiticity drift past their bounds.
Trajectory integrate_master_equation(const PathSpec &path, double omega, const DensityMatrix &initial,
                                     const NoiseModel &model, const IntegrationOptions &opts = {});

/// Propagates arbitrary Hermitian operators (reference basis) through the same
/// dynamics and returns their final lab-frame images. Linear in the input.
std::vector<Matrix4c> evolve_operators(const PathSpec &path, double omega, std::span<const Matrix4c> inputs,
                                       const NoiseModel &model, const IntegrationOptions &opts = {});

/// The noisy gate restricted to the computational block, stored as the images
/// of I, sigma_x, sigma_y, sigma_z.
struct NoisyChannel {
    std::array<Matrix4c, 4> images;
    Matrix4c target;  ///< adiabatic gate in the reference basis

    Matrix4c apply(const Matrix4c &rho0) const;
    /// Fidelity of the output for pure input psi against target * psi.
    double fidelity(const Vector4c &psi) const;
};

NoisyChannel noisy_channel(const PathSpec &path, double omega, const NoiseModel &model,
                           const IntegrationOptions &opts = {});

double fidelity_noisy(const PathSpec &path, double omega, const DensityMatrix &initial, const NoiseModel &model,
                      const IntegrationOptions &opts = {});

double mean_fidelity_noisy(const PathSpec &path, double omega, const BlochSampling &sampling,
                           const NoiseModel &model, const IntegrationOptions &opts = {});

}  // namespace holo

#endif
