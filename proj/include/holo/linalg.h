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

#ifndef HOLO_LINALG_H
#define HOLO_LINALG_H

#include <complex>

#include <Eigen/Dense>

namespace holo {

using cplx = std::complex<double>;

/// Dense complex matrix of dimension at most 4 (no heap allocation).
using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;
using StateVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;
using RealVector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;

/// Fixed 4x4 types used on the hot paths of the four-level model.
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr cplx kI{0.0, 1.0};

double max_abs(const ComplexMatrix &m);
bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kDefaultTol);

double hermiticity_residue(const ComplexMatrix &m);
bool is_hermitian(const ComplexMatrix &m, double tol = kDefaultTol);
bool is_anti_hermitian(const ComplexMatrix &m, double tol = kDefaultTol);
double unitarity_residue(const ComplexMatrix &m);
bool is_unitary(const ComplexMatrix &m, double tol = kDefaultTol);

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// Returns psi / |psi|. Throws ValidationError for a zero vector.
StateVector normalized(const StateVector &psi);

struct HermitianEigen {
    RealVector values;      ///< ascending
    ComplexMatrix vectors;  ///< columns are orthonormal eigenvectors
};

/// Spectral decomposition of a Hermitian matrix. Throws ValidationError if `h`
/// is not Hermitian within `tol`.
HermitianEigen eigh(const ComplexMatrix &h, double tol = kDefaultTol);

/// exp(G t) for an anti-Hermitian generator G, evaluated through the spectral
/// decomposition of the Hermitian matrix iG. The result is unitary.
ComplexMatrix expm_generator(const ComplexMatrix &generator, double t, double tol = kDefaultTol);

/// (M + M^dagger) / 2. Throws IntegrationDiverged if M drifted from Hermitian
/// by more than `drift_bound` (max-entry norm).
ComplexMatrix hermitize(const ComplexMatrix &m, double drift_bound = 1e-8);

/// Pauli Y on a two-level block: -i(|0><1| - |1><0|).
ComplexMatrix pauli_y();

/// Embeds a 2x2 block into the top-left corner of a dim x dim matrix;
/// the remaining diagonal is filled with `fill`.
ComplexMatrix embed_block(const ComplexMatrix &block, int dim = 4, cplx fill = 0.0);

/// Density operator: Hermitian, unit trace, positive semidefinite (all within
/// the tolerance given at construction).
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m, double tol = 1e-8);

    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(int dim);

    const ComplexMatrix &matrix() const {
        return m_;
    }
    int dim() const {
        return static_cast<int>(m_.rows());
    }
    double purity() const;
    double min_eigenvalue() const;

   private:
    ComplexMatrix m_;
};

/// F = Tr(sigma_ref sigma) for a pure reference state. Throws ValidationError
/// when the reference is not pure or the trace has an imaginary residue.
double state_fidelity(const DensityMatrix &sigma_ref, const DensityMatrix &sigma);

}  // namespace holo

#endif
