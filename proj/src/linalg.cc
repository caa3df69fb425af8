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

#include "holo/linalg.h"

#include <cmath>
#include <sstream>

#include "holo/errors.h"

namespace holo {

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return max_abs(a - b) <= tol;
}

double hermiticity_residue(const ComplexMatrix &m) {
    return max_abs(m - m.adjoint());
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && hermiticity_residue(m) <= tol;
}

bool is_anti_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m + m.adjoint()) <= tol;
}

double unitarity_residue(const ComplexMatrix &m) {
    ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    return max_abs(m * m.adjoint() - id);
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && unitarity_residue(m) <= tol;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

StateVector normalized(const StateVector &psi) {
    double n = psi.norm();
    if (!(n > 0.0)) {
        throw ValidationError("cannot normalize a zero state vector");
    }
    return psi / n;
}

HermitianEigen eigh(const ComplexMatrix &h, double tol) {
    if (!is_hermitian(h, tol)) {
        std::ostringstream ss;
        ss << "eigh: matrix is not Hermitian (residue " << hermiticity_residue(h) << ")";
        throw ValidationError(ss.str());
    }
    ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_generator(const ComplexMatrix &generator, double t, double tol) {
    if (!is_anti_hermitian(generator, tol)) {
        std::ostringstream ss;
        ss << "expm_generator: generator is not anti-Hermitian (residue "
           << max_abs(generator + generator.adjoint()) << ")";
        throw ValidationError(ss.str());
    }
    // G = -i H with H = iG Hermitian, so exp(G t) = V exp(-i diag(e) t) V^dagger.
    ComplexMatrix h = kI * generator;
    HermitianEigen eig = eigh(0.5 * (h + h.adjoint()), tol);
    StateVector phases(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        phases(k) = std::exp(-kI * eig.values(k) * t);
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix hermitize(const ComplexMatrix &m, double drift_bound) {
    double drift = hermiticity_residue(m);
    if (!(drift <= drift_bound)) {
        std::ostringstream ss;
        ss << "Hermiticity drift " << drift << " exceeds bound " << drift_bound
           << "; reduce the integration step";
        throw IntegrationDiverged(ss.str());
    }
    return 0.5 * (m + m.adjoint());
}

ComplexMatrix pauli_y() {
    ComplexMatrix y(2, 2);
    y << 0.0, -kI, kI, 0.0;
    return y;
}

ComplexMatrix embed_block(const ComplexMatrix &block, int dim, cplx fill) {
    if (block.rows() > dim || block.cols() > dim) {
        throw ValidationError("embed_block: block larger than target dimension");
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        out(k, k) = fill;
    }
    out.topLeftCorner(block.rows(), block.cols()) = block;
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    double herm = hermiticity_residue(m_);
    if (herm > tol) {
        std::ostringstream ss;
        ss << "density matrix is not Hermitian (residue " << herm << ")";
        throw ValidationError(ss.str());
    }
    cplx tr = m_.trace();
    if (std::abs(tr - 1.0) > tol) {
        std::ostringstream ss;
        ss << "density matrix trace " << tr << " differs from 1";
        throw ValidationError(ss.str());
    }
    double lo = min_eigenvalue();
    if (lo < -tol) {
        std::ostringstream ss;
        ss << "density matrix has negative eigenvalue " << lo;
        throw ValidationError(ss.str());
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    StateVector v = normalized(psi);
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

double DensityMatrix::min_eigenvalue() const {
    ComplexMatrix sym = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double state_fidelity(const DensityMatrix &sigma_ref, const DensityMatrix &sigma) {
    if (sigma_ref.dim() != sigma.dim()) {
        throw ValidationError("state_fidelity: dimension mismatch");
    }
    if (std::abs(sigma_ref.purity() - 1.0) > 1e-8) {
        throw ValidationError("state_fidelity: reference state is not pure");
    }
    cplx f = (sigma_ref.matrix() * sigma.matrix()).trace();
    if (std::abs(f.imag()) > 1e-10) {
        throw ValidationError("state_fidelity: trace has an imaginary residue");
    }
    return f.real();
}

}  // namespace holo
