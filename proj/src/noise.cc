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

#include "holo/noise.h"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <vector>

#include "holo/errors.h"
#include "holo/quadrature.h"

namespace holo {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

bool is_bright(Level l) {
    return l == Level::Plus || l == Level::Minus;
}

double level_energy(Level l, double omega) {
    switch (l) {
        case Level::Plus:
            return omega;
        case Level::Minus:
            return -omega;
        default:
            return 0.0;
    }
}

}  // namespace

void RateTable::validate() const {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (!(gamma[a][b] >= 0.0) || !std::isfinite(gamma[a][b])) {
                throw ValidationError("decay rates must be finite and non-negative");
            }
            if (!std::isfinite(delta[a][b])) {
                throw ValidationError("Lamb shifts must be finite");
            }
        }
    }
}

void print_rate_table(std::ostream &out, const RateTable &rates) {
    auto flags = out.flags();
    auto prec = out.precision();
    out << std::setprecision(12);
    out << "# a b gamma delta\n";
    for (Level a : kLevels) {
        for (Level b : kLevels) {
            out << level_name(a) << ' ' << level_name(b) << ' ' << rates.gamma_at(a, b) << ' '
                << rates.delta_at(a, b) << '\n';
        }
    }
    out.flags(flags);
    out.precision(prec);
}

void OhmicBath::validate() const {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw ValidationError("Ohmic bath: kappa must be positive");
    }
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
        throw ValidationError("Ohmic bath: cutoff omega_c must be positive");
    }
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw ValidationError("Ohmic bath: temperature must be non-negative");
    }
}

double OhmicBath::spectral_density(double w) const {
    return w > 0.0 ? kappa * w * std::exp(-w / omega_c) : 0.0;
}

void NoiseModel::validate() const {
    rates.validate();
    if (!(lambda2 >= 0.0) || !std::isfinite(lambda2)) {
        throw ValidationError("noise coupling lambda^2 must be non-negative");
    }
}

double f_coefficient(Level a, Level b, SpherePoint p) {
    if (!is_bright(a) && !is_bright(b)) {
        return 0.0;
    }
    // f is symmetric; put the bright index first.
    Level other = is_bright(a) ? b : a;
    double sp = std::sin(p.phi), cp = std::cos(p.phi);
    double st = std::sin(p.theta), ct = std::cos(p.theta);
    switch (other) {
        case Level::Zero:
            return cp * cp / 2;
        case Level::One:
            return sp * sp * ct * ct / 2;
        default:
            return sp * sp * st * st / 4;
    }
}

double f_coefficient(int a, int b, SpherePoint p) {
    return f_coefficient(level_from_index(a), level_from_index(b), p);
}

Matrix4c lindblad_operator(Level a, Level b) {
    Matrix4c l = Matrix4c::Zero();
    l(index_of(a), index_of(b)) = 1.0;
    return l;
}

double thermal_spectral_density(double w, const OhmicBath &bath) {
    bath.validate();
    const double t = bath.temperature;
    if (t == 0.0) {
        return bath.spectral_density(w);
    }
    if (w == 0.0) {
        // Limit of kappa w / (1 - exp(-w/T)).
        return bath.kappa * t;
    }
    // For the Ohmic form both branches collapse to
    // kappa w exp(-|w|/omega_c) / (1 - exp(-w/T)).
    double denom = -std::expm1(-w / t);
    if (std::isinf(denom)) {
        return 0.0;
    }
    return bath.kappa * w * std::exp(-std::abs(w) / bath.omega_c) / denom;
}

double lamb_shift_principal_value(double w0, const OhmicBath &bath) {
    bath.validate();
    const double hi = 20.0 * bath.omega_c;
    const double lo = bath.temperature > 0.0 ? -hi : 0.0;
    const double t = bath.temperature;
    const double wc = bath.omega_c;
    std::vector<double> breaks{0.0, wc, -wc, 5 * wc, -5 * wc};
    if (t > 0.0) {
        for (double m : {1.0, 5.0, 20.0}) {
            breaks.push_back(m * t);
            breaks.push_back(-m * t);
        }
    }
    auto xi_th = [&](double w) { return thermal_spectral_density(w, bath); };
    return principal_value(xi_th, lo, hi, w0, breaks);
}

RateTable rates_from_bath(const OhmicBath &bath, double omega) {
    bath.validate();
    if (!(omega > 0.0)) {
        throw ValidationError("rates_from_bath: Omega must be positive");
    }
    const double hi = 20.0 * bath.omega_c;
    const std::vector<double> breaks{bath.omega_c, 5 * bath.omega_c};
    const double degenerate_shift =
        integrate([&](double w) { return bath.kappa * std::exp(-w / bath.omega_c); }, 0.0, hi, breaks);

    RateTable r;
    for (Level a : kLevels) {
        for (Level b : kLevels) {
            double w0 = level_energy(a, omega) - level_energy(b, omega);
            if (w0 == 0.0) {
                // xi'(0+) = kappa for the Ohmic form.
                r.gamma_at(a, b) = kTwoPi * bath.kappa * bath.temperature;
                r.delta_at(a, b) = degenerate_shift;
            } else {
                r.gamma_at(a, b) = kTwoPi * thermal_spectral_density(w0, bath);
                r.delta_at(a, b) = lamb_shift_principal_value(w0, bath);
            }
        }
    }
    return r;
}

RateTable fixed_rates_preset(double omega) {
    using L = Level;
    RateTable r;
    auto set = [&](L a, L b, double g, double d) {
        r.gamma_at(a, b) = g * omega;
        r.delta_at(a, b) = d * omega;
    };
    for (auto [a, b] : {std::pair{L::Plus, L::Zero}, {L::Plus, L::One}, {L::Zero, L::Minus}, {L::One, L::Minus}}) {
        set(a, b, 1.1, -1.1);
    }
    for (auto [a, b] : {std::pair{L::Zero, L::Plus}, {L::Minus, L::Zero}, {L::One, L::Plus}, {L::Minus, L::One}}) {
        set(a, b, 0.8, 0.8);
    }
    set(L::Plus, L::Plus, 1.0, 1.0);
    set(L::Minus, L::Minus, 1.0, 1.0);
    set(L::Plus, L::Minus, 1.2, -1.2);
    set(L::Minus, L::Plus, 0.7, 0.7);
    return r;
}

}  // namespace holo
