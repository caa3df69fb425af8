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

#ifndef HOLO_TESTS_TEST_SUPPORT_H
#define HOLO_TESTS_TEST_SUPPORT_H

#include <cmath>
#include <numbers>
#include <random>

#include "holo/linalg.h"
#include "holo/sphere_path.h"

namespace holo::testing {

inline constexpr double kPi = std::numbers::pi;

/// Seeded generators for property-style tests.
class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    cplx complex_normal() {
        std::normal_distribution<double> n;
        return {n(rng_), n(rng_)};
    }

    Matrix4c hermitian() {
        Matrix4c m;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                m(i, j) = complex_normal();
            }
        }
        return 0.5 * (m + m.adjoint());
    }

    Matrix4c anti_hermitian() {
        return kI * hermitian();
    }

    Vector4c computational_state() {
        Vector4c v = Vector4c::Zero();
        v(0) = complex_normal();
        v(1) = complex_normal();
        return v / v.norm();
    }

    SpherePoint point() {
        return {uniform(0.05, kPi - 0.05), uniform(-kPi, kPi)};
    }

   private:
    std::mt19937_64 rng_;
};

inline Matrix4c embed2(const ComplexMatrix &b) {
    Matrix4c m = Matrix4c::Zero();
    m.topLeftCorner<2, 2>() = b;
    return m;
}

inline double max_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace holo::testing

#endif
