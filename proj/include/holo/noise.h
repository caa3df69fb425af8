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

#ifndef HOLO_NOISE_H
#define HOLO_NOISE_H

#include <array>
#include <iosfwd>

#include "holo/linalg.h"
#include "holo/sphere_path.h"
#include "holo/tripod.h"

namespace holo {

/// Decay rates Gamma_{ab} and Lamb shifts Delta_{ab} over the four eigenlevels,
/// in units of Omega. Unlisted pairs are zero.
struct RateTable {
    std::array<std::array<double, 4>, 4> gamma{};
    std::array<std::array<double, 4>, 4> delta{};

    double &gamma_at(Level a, Level b) {
        return gamma[index_of(a)][index_of(b)];
    }
    double gamma_at(Level a, Level b) const {
        return gamma[index_of(a)][index_of(b)];
    }
    double &delta_at(Level a, Level b) {
        return delta[index_of(a)][index_of(b)];
    }
    double delta_at(Level a, Level b) const {
        return delta[index_of(a)][index_of(b)];
    }

    /// Throws ValidationError for a negative or non-finite rate.
    void validate() const;
};

/// Human-readable table, one pair per line: "a b gamma delta".
void print_rate_table(std::ostream &out, const RateTable &rates);

/// Ohmic spectral density xi(w) = kappa w exp(-w / omega_c) for w > 0.
struct OhmicBath {
    double kappa = 0.01;
    double omega_c = 100.0;
    double temperature = 0.0;  ///< T = 1/beta, units of Omega

    void validate() const;
    double spectral_density(double w) const;
};

struct NoiseModel {
    RateTable rates;
    double lambda2 = 0.0;  ///< dimensionless coupling lambda^2

    void validate() const;
};

/// Angular weight of the pair (a, b) in the dissipator at point p. Nonzero only
/// for pairs with a bright index: (+-, 0), (+-, 1), (+-, +-) and their mirrors.
double f_coefficient(Level a, Level b, SpherePoint p);
/// Index overload; throws ValidationError for an index outside {0, 1, 2, 3}.
double f_coefficient(int a, int b, SpherePoint p);

/// L_{ab} = |D_a(0)><D_b(0)| in the reference basis.
Matrix4c lindblad_operator(Level a, Level b);

/// xi_th(w) = xi(w) (n_B(w) + 1) + xi(-w) n_B(-w). At T = 0 the occupation
/// terms are dropped.
double thermal_spectral_density(double w, const OhmicBath &bath);

/// Lamb shifts and decay rates at the transition frequencies eps_a - eps_b of
/// the levels {0, 0, +Omega, -Omega}. Degenerate pairs use
/// Gamma = 2 pi kappa T and Delta = integral of xi(w)/w; the others use
/// Gamma = 2 pi xi_th(eps_a - eps_b) and a principal-value Delta. Quadrature
/// upper limit is 20 omega_c.
RateTable rates_from_bath(const OhmicBath &bath, double omega = 1.0);

/// Principal value P integral xi_th(w) / (w - w0) over the whole real line.
double lamb_shift_principal_value(double w0, const OhmicBath &bath);

/// Illustrative rate table used for the fixed-rate noise experiments.
RateTable fixed_rates_preset(double omega = 1.0);

}  // namespace holo

#endif
