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

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "holo/errors.h"
#include "test_support.h"

namespace holo {
namespace {

using L = Level;
using testing::Gen;
using testing::kPi;

TEST(FCoefficient, TableValues) {
    EXPECT_NEAR(f_coefficient(L::Plus, L::Zero, {0.3, 0.0}), 0.5, 1e-16);
    EXPECT_NEAR(f_coefficient(L::Plus, L::Minus, {kPi / 2, kPi / 2}), 0.25, 1e-16);
    EXPECT_NEAR(f_coefficient(L::Minus, L::One, {0.0, kPi / 2}), 0.5, 1e-16);
    Gen gen(41);
    for (int i = 0; i < 20; ++i) {
        SpherePoint p = gen.point();
        EXPECT_EQ(f_coefficient(L::Zero, L::One, p), 0.0);
        EXPECT_EQ(f_coefficient(L::Zero, L::Zero, p), 0.0);
        EXPECT_EQ(f_coefficient(L::One, L::One, p), 0.0);
    }
}

TEST(FCoefficient, SymmetricAndNonNegative) {
    Gen gen(42);
    for (int i = 0; i < 50; ++i) {
        SpherePoint p = gen.point();
        for (L a : kLevels) {
            for (L b : kLevels) {
                double f = f_coefficient(a, b, p);
                EXPECT_GE(f, 0.0);
                EXPECT_EQ(f, f_coefficient(b, a, p));
            }
        }
    }
}

TEST(FCoefficient, InvalidIndexThrows) {
    EXPECT_THROW(f_coefficient(4, 0, {0.0, 0.0}), ValidationError);
    EXPECT_THROW(f_coefficient(0, -1, {0.0, 0.0}), ValidationError);
    EXPECT_NO_THROW(f_coefficient(2, 0, {0.0, 0.0}));
}

TEST(LindbladOperator, ProjectorsAndAdjoints) {
    Matrix4c l00 = lindblad_operator(L::Zero, L::Zero);
    EXPECT_LT((l00 * l00 - l00).cwiseAbs().maxCoeff(), 1e-16);
    EXPECT_EQ(l00(0, 0), cplx(1.0));
    for (L a : kLevels) {
        for (L b : kLevels) {
            EXPECT_EQ(lindblad_operator(a, b).adjoint(), lindblad_operator(b, a));
        }
    }
    Matrix4c l = lindblad_operator(L::Plus, L::One);
    EXPECT_EQ(l * l.adjoint(), lindblad_operator(L::Plus, L::Plus));
}

TEST(ThermalDensity, ZeroTemperature) {
    OhmicBath bath{0.01, 100.0, 0.0};
    EXPECT_EQ(thermal_spectral_density(-1.0, bath), 0.0);
    EXPECT_NEAR(thermal_spectral_density(1.0, bath), 0.01 * std::exp(-0.01), 1e-17);
}

TEST(ThermalDensity, FiniteTemperature) {
    OhmicBath bath{0.01, 100.0, 1.0};
    const double expected = 0.01 * std::exp(-0.01) * (1 / (std::exp(1.0) - 1) + 1);
    EXPECT_NEAR(thermal_spectral_density(1.0, bath), expected, 1e-15);
    EXPECT_NEAR(expected, 0.015662, 1e-6);
    // Detailed balance: xi_th(-w) = exp(-w/T) xi_th(w)
    EXPECT_NEAR(thermal_spectral_density(-1.0, bath), std::exp(-1.0) * expected, 1e-15);
    EXPECT_NEAR(thermal_spectral_density(0.0, bath), 0.01, 1e-15);
    EXPECT_GE(thermal_spectral_density(-5000.0, bath), 0.0);
}

TEST(OhmicBath, Validation) {
    EXPECT_THROW((OhmicBath{0.0, 100.0, 1.0}.validate()), ValidationError);
    EXPECT_THROW((OhmicBath{0.01, -1.0, 1.0}.validate()), ValidationError);
    EXPECT_THROW((OhmicBath{0.01, 100.0, -0.1}.validate()), ValidationError);
}

TEST(RatesFromBath, DegenerateAnalytic) {
    for (double t : {0.1, 1.0, 5.0, 10.0}) {
        RateTable r = rates_from_bath({0.01, 100.0, t});
        for (L a : kLevels) {
            EXPECT_NEAR(r.gamma_at(a, a), 2 * kPi * 0.01 * t, 1e-10);
            EXPECT_NEAR(r.delta_at(a, a), 1.0, 1e-4);
        }
        EXPECT_NEAR(r.gamma_at(L::Zero, L::One), 2 * kPi * 0.01 * t, 1e-10);
    }
    EXPECT_NEAR(rates_from_bath({0.01, 100.0, 1.0}).gamma_at(L::Zero, L::Zero), 0.06283, 1e-5);
}

TEST(RatesFromBath, DecayRateIsTwoPiThermalDensity) {
    OhmicBath bath{0.01, 100.0, 5.0};
    RateTable r = rates_from_bath(bath);
    EXPECT_NEAR(r.gamma_at(L::Plus, L::Zero), 2 * kPi * thermal_spectral_density(1.0, bath), 1e-15);
    EXPECT_NEAR(r.gamma_at(L::Minus, L::Plus), 2 * kPi * thermal_spectral_density(-2.0, bath), 1e-15);
}

struct FrozenRates {
    double t, gamma_p0, delta_p0, delta_pm;
};

void PrintTo(const FrozenRates &r, std::ostream *os) {
    *os << "T=" << r.t;
}

// Reference values from an independent adaptive Cauchy-weight quadrature
// (QUADPACK QAWC) with the same 20 omega_c cutoff.
class RatesFromBathFrozen : public ::testing::TestWithParam<FrozenRates> {};

TEST_P(RatesFromBathFrozen, MatchesReference) {
    const FrozenRates &ref = GetParam();
    RateTable r = rates_from_bath({0.01, 100.0, ref.t});
    EXPECT_NEAR(r.gamma_at(L::Plus, L::Zero), ref.gamma_p0, 1e-6);
    EXPECT_NEAR(r.delta_at(L::Plus, L::Zero), ref.delta_p0, 1e-6);
    EXPECT_NEAR(r.delta_at(L::Plus, L::Minus), ref.delta_pm, 1e-6);
    r.validate();
}

INSTANTIATE_TEST_SUITE_P(Temperatures, RatesFromBathFrozen,
                         ::testing::Values(FrozenRates{0.1, 0.0622095, 1.039434, 1.064815},
                                           FrozenRates{1.0, 0.0984095, 1.026836, 1.051448},
                                           FrozenRates{5.0, 0.343173, 1.009482, 1.019496},
                                           FrozenRates{10.0, 0.653688, 0.999686, 1.001366}),
                         [](const ::testing::TestParamInfo<FrozenRates> &info) {
                             return "T" + std::to_string(info.index);
                         });

TEST(RatesFromBath, ZeroTemperatureHasNoAbsorption) {
    RateTable r = rates_from_bath({0.01, 100.0, 0.0});
    EXPECT_EQ(r.gamma_at(L::Zero, L::Plus), 0.0);
    EXPECT_EQ(r.gamma_at(L::Minus, L::Plus), 0.0);
    EXPECT_GT(r.gamma_at(L::Plus, L::Zero), 0.0);
    EXPECT_EQ(r.gamma_at(L::Zero, L::Zero), 0.0);
}

TEST(FixedPreset, ListedValues) {
    RateTable r = fixed_rates_preset();
    EXPECT_EQ(r.gamma_at(L::Plus, L::Minus), 1.2);
    EXPECT_EQ(r.delta_at(L::Plus, L::Minus), -1.2);
    EXPECT_EQ(r.delta_at(L::Minus, L::Plus), 0.7);
    EXPECT_EQ(r.gamma_at(L::Minus, L::Plus), 0.7);
    for (auto [a, b] : {std::pair{L::Plus, L::Zero}, {L::Plus, L::One}, {L::Zero, L::Minus}, {L::One, L::Minus}}) {
        EXPECT_EQ(r.gamma_at(a, b), 1.1);
        EXPECT_EQ(r.delta_at(a, b), -1.1);
    }
    for (auto [a, b] : {std::pair{L::Zero, L::Plus}, {L::Minus, L::Zero}, {L::One, L::Plus}, {L::Minus, L::One}}) {
        EXPECT_EQ(r.gamma_at(a, b), 0.8);
        EXPECT_EQ(r.delta_at(a, b), 0.8);
    }
    EXPECT_EQ(r.gamma_at(L::Plus, L::Plus), 1.0);
    EXPECT_EQ(r.gamma_at(L::Minus, L::Minus), 1.0);
    EXPECT_EQ(r.gamma_at(L::Zero, L::One), 0.0);
    EXPECT_NO_THROW(r.validate());
}

TEST(RateTable, RejectsNegativeRate) {
    RateTable r;
    r.gamma_at(L::Plus, L::Zero) = -0.1;
    EXPECT_THROW(r.validate(), ValidationError);
    EXPECT_THROW((NoiseModel{RateTable{}, -1.0}.validate()), ValidationError);
}

TEST(RateTable, PrintsEveryPair) {
    std::ostringstream ss;
    print_rate_table(ss, fixed_rates_preset());
    std::string text = ss.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 17);
    EXPECT_NE(text.find("+ - 1.2 -1.2"), std::string::npos);
}

}  // namespace
}  // namespace holo
