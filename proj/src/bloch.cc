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

#include "holo/bloch.h"

#include <cmath>
#include <numbers>
#include <random>

#include "holo/errors.h"

namespace holo {

void BlochSampling::validate() const {
    if (count < 1) {
        throw ValidationError("Bloch sampling count must be >= 1");
    }
}

SamplingScheme parse_sampling_scheme(const std::string &name) {
    if (name == "fibonacci") {
        return SamplingScheme::Fibonacci;
    }
    if (name == "random" || name == "random-seeded") {
        return SamplingScheme::Random;
    }
    throw ValidationError("unknown sampling scheme '" + name + "'");
}

const char *sampling_scheme_name(SamplingScheme s) {
    return s == SamplingScheme::Fibonacci ? "fibonacci" : "random";
}

namespace {

Vector4c qubit_state(double theta, double phi) {
    return Vector4c(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi), 0.0, 0.0);
}

}  // namespace

std::vector<Vector4c> bloch_states(const BlochSampling &s) {
    s.validate();
    std::vector<Vector4c> out;
    out.reserve(s.count);
    if (s.scheme == SamplingScheme::Fibonacci) {
        const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < s.count; ++i) {
            double z = 1.0 - (2.0 * i + 1.0) / s.count;
            double phi = std::fmod(golden_angle * i, 2 * std::numbers::pi);
            out.push_back(qubit_state(std::acos(z), phi));
        }
    } else {
        // Top 53 bits of each draw; unlike uniform_real_distribution this is
        // identical across standard libraries.
        std::mt19937_64 rng(s.seed);
        auto uni = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        for (int i = 0; i < s.count; ++i) {
            double u = uni();
            double v = uni();
            out.push_back(qubit_state(std::acos(1.0 - 2.0 * u), 2 * std::numbers::pi * v));
        }
    }
    return out;
}

std::vector<DensityMatrix> bloch_samples(const BlochSampling &s) {
    std::vector<DensityMatrix> out;
    for (const auto &v : bloch_states(s)) {
        out.push_back(DensityMatrix::pure(v));
    }
    return out;
}

}  // namespace holo
