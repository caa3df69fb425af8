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

#include "holo/quadrature.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "holo/errors.h"

namespace holo {
namespace {

TEST(Integrate, Polynomials) {
    EXPECT_NEAR(integrate([](double x) { return x * x; }, 0.0, 1.0), 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi), 2.0, 1e-13);
}

TEST(Integrate, BreakpointsHandleKinks) {
    const double b[] = {0.3};
    EXPECT_NEAR(integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, b), 0.29, 1e-14);
}

TEST(Integrate, ReversedAndEmptyInterval) {
    auto f = [](double x) { return std::exp(x); };
    EXPECT_NEAR(integrate(f, 1.0, 0.0), -(std::exp(1.0) - 1.0), 1e-13);
    EXPECT_EQ(integrate(f, 2.0, 2.0), 0.0);
}

TEST(Integrate, ThrowsWhenUnresolved) {
    QuadratureOptions tight;
    tight.max_depth = 1;
    EXPECT_THROW(integrate([](double x) { return std::sin(400 * x) * std::exp(x); }, 0.0, 20.0, {}, tight),
                 NumericalError);
}

TEST(PrincipalValue, OddKernelVanishes) {
    EXPECT_NEAR(principal_value([](double) { return 1.0; }, -1.0, 1.0, 0.0), 0.0, 1e-13);
    EXPECT_NEAR(principal_value([](double) { return 1.0; }, 0.0, 2.0, 1.0), 0.0, 1e-13);
}

TEST(PrincipalValue, Logarithmic) {
    // P int_0^3 x / (x - 1) dx = 3 + ln 2
    EXPECT_NEAR(principal_value([](double x) { return x; }, 0.0, 3.0, 1.0), 3.0 + std::log(2.0), 1e-12);
}

TEST(PrincipalValue, ExponentialAgainstShi) {
    // P int_{-1}^{1} e^x / x dx = 2 Shi(1)
    EXPECT_NEAR(principal_value([](double x) { return std::exp(x); }, -1.0, 1.0, 0.0), 2.1145017507514571, 1e-12);
}

TEST(PrincipalValue, PoleOutsideIsOrdinaryIntegral) {
    double pv = principal_value([](double) { return 1.0; }, 2.0, 3.0, 1.0);
    EXPECT_NEAR(pv, std::log(2.0), 1e-13);
}

TEST(PrincipalValue, PoleOnEndpointThrows) {
    EXPECT_THROW(principal_value([](double) { return 1.0; }, 0.0, 1.0, 1.0), ValidationError);
}

}  // namespace
}  // namespace holo
