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

#ifndef HOLO_TRIPOD_H
#define HOLO_TRIPOD_H

#include <array>

#include "holo/linalg.h"
#include "holo/sphere_path.h"

namespace holo {

/// Levels of the dark/bright eigenbasis, in matrix index order.
enum class Level : int { Zero = 0, One = 1, Plus = 2, Minus = 3 };

inline constexpr std::array<Level, 4> kLevels = {Level::Zero, Level::One, Level::Plus, Level::Minus};

inline int index_of(Level l) {
    return static_cast<int>(l);
}
/// Throws ValidationError outside [0, 4).
Level level_from_index(int index);
const char *level_name(Level l);

/// Tripod Hamiltonian |e>(Omega_0<0| + Omega_1<1| + Omega_a<a|) + h.c. in the
/// bare basis (|0>, |1>, |a>, |e>).
Matrix4c hamiltonian(SpherePoint p, double omega);

/// Instantaneous eigenbasis (D0, D1, D+, D-) in the bare basis, from the
/// closed-form eigenvectors (no numerical diagonalization).
struct TripodFrame {
    SpherePoint point;
    std::array<Vector4c, 4> basis;
    std::array<double, 4> energies;  ///< 0, 0, +Omega, -Omega

    /// Columns are the basis vectors.
    Matrix4c matrix() const;
};

TripodFrame frame(SpherePoint p, double omega = 1.0);

/// The frame at (theta, phi) = (0, 0). Every propagator and density matrix of
/// the library is expressed in this basis: D0 = |0>, D1 = |1>,
/// D+- = (|a> +- |e>)/sqrt(2).
const Matrix4c &reference_frame();

/// Frame vectors at p written in the reference basis: entries <D_k(ref)|D_i(p)>.
Matrix4c frame_in_reference(SpherePoint p);

/// Converts an operator written in the reference basis to the bare basis.
Matrix4c to_bare_basis(const Matrix4c &m);

/// Level energies diag(0, 0, +Omega, -Omega) in the eigenbasis.
Matrix4c eigen_hamiltonian(double omega);

/// Connection D = -i R^dagger dR/dt for motion with the given angular rates,
/// written in the eigenbasis at the motion's start. Hermitian.
Matrix4c connection_d(SpherePoint p, double theta_rate, double phi_rate);

/// Adiabatic connection on the dark space span{D0, D1}:
/// A_theta = 0, A_phi = i sigma_y cos(theta).
struct AdiabaticConnection {
    ComplexMatrix a_theta;
    ComplexMatrix a_phi;
};
AdiabaticConnection adiabatic_connection(SpherePoint p);

/// Non-Abelian holonomy exp(i sigma_y omega) of a closed loop on the dark
/// space, omega being the enclosed solid angle. 2x2, in the (D0, D1) basis at
/// the loop's start.
ComplexMatrix adiabatic_holonomy(const PathSpec &path);

}  // namespace holo

#endif
