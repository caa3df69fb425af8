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

#include "holo/tripod.h"

#include <cmath>
#include <numbers>
#include <string>

#include "holo/errors.h"

namespace holo {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Bare basis indices.
constexpr int kG0 = 0;
constexpr int kG1 = 1;
constexpr int kGa = 2;
constexpr int kE = 3;

}  // namespace

Level level_from_index(int index) {
    if (index < 0 || index > 3) {
        throw ValidationError("level index " + std::to_string(index) + " outside {0, 1, +, -}");
    }
    return static_cast<Level>(index);
}

const char *level_name(Level l) {
    switch (l) {
        case Level::Zero:
            return "0";
        case Level::One:
            return "1";
        case Level::Plus:
            return "+";
        case Level::Minus:
            return "-";
    }
    return "?";
}

Matrix4c hamiltonian(SpherePoint p, double omega) {
    if (!(omega > 0.0)) {
        throw ValidationError("hamiltonian: Omega must be positive");
    }
    double st = std::sin(p.theta), ct = std::cos(p.theta);
    double sp = std::sin(p.phi), cp = std::cos(p.phi);
    double o1 = omega * st * cp;
    double o0 = omega * st * sp;
    double oa = omega * ct;
    Matrix4c h = Matrix4c::Zero();
    h(kE, kG0) = o0;
    h(kE, kG1) = o1;
    h(kE, kGa) = oa;
    h(kG0, kE) = o0;
    h(kG1, kE) = o1;
    h(kGa, kE) = oa;
    return h;
}

Matrix4c TripodFrame::matrix() const {
    Matrix4c m;
    for (int k = 0; k < 4; ++k) {
        m.col(k) = basis[k];
    }
    return m;
}

TripodFrame frame(SpherePoint p, double omega) {
    double st = std::sin(p.theta), ct = std::cos(p.theta);
    double sp = std::sin(p.phi), cp = std::cos(p.phi);
    TripodFrame f;
    f.point = p;
    f.basis[0] = Vector4c(cp, -sp, 0.0, 0.0);
    f.basis[1] = Vector4c(ct * sp, ct * cp, -st, 0.0);
    f.basis[2] = Vector4c(st * sp, st * cp, ct, 1.0) * kInvSqrt2;
    f.basis[3] = Vector4c(st * sp, st * cp, ct, -1.0) * kInvSqrt2;
    f.energies = {0.0, 0.0, omega, -omega};
    return f;
}

const Matrix4c &reference_frame() {
    static const Matrix4c ref = frame({0.0, 0.0}).matrix();
    return ref;
}

Matrix4c frame_in_reference(SpherePoint p) {
    return reference_frame().adjoint() * frame(p).matrix();
}

Matrix4c to_bare_basis(const Matrix4c &m) {
    return reference_frame() * m * reference_frame().adjoint();
}

Matrix4c eigen_hamiltonian(double omega) {
    Matrix4c h = Matrix4c::Zero();
    h(2, 2) = omega;
    h(3, 3) = -omega;
    return h;
}

Matrix4c connection_d(SpherePoint p, double theta_rate, double phi_rate) {
    double st = std::sin(p.theta), ct = std::cos(p.theta);
    double dp = phi_rate, dt = theta_rate;
    // -i times the real antisymmetric matrix of <D_i| d/dt |D_j>.
    Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
    a(0, 1) = dp * ct;
    a(0, 2) = dp * st * kInvSqrt2;
    a(0, 3) = dp * st * kInvSqrt2;
    a(1, 2) = dt * kInvSqrt2;
    a(1, 3) = dt * kInvSqrt2;
    Eigen::Matrix4d anti = a - a.transpose();
    return -kI * anti.cast<cplx>();
}

AdiabaticConnection adiabatic_connection(SpherePoint p) {
    return {ComplexMatrix::Zero(2, 2), kI * pauli_y() * std::cos(p.theta)};
}

ComplexMatrix adiabatic_holonomy(const PathSpec &path) {
    path.require_closed("adiabatic_holonomy");
    double omega = solid_angle(path);
    // sigma_y^2 = 1, so exp(i sigma_y w) = cos(w) + i sin(w) sigma_y.
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    return std::cos(omega) * id + kI * std::sin(omega) * pauli_y();
}

}  // namespace holo
