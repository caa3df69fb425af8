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

#ifndef HOLO_BLOCH_H
#define HOLO_BLOCH_H

#include <cstdint>
#include <string>
#include <vector>

#include "holo/linalg.h"

namespace holo {

enum class SamplingScheme { Fibonacci, Random };

/// How pure qubit states on the computational block are drawn.
struct BlochSampling {
    SamplingScheme scheme = SamplingScheme::Fibonacci;
    int count = 200;
    std::uint64_t seed = 0;  ///< random scheme only

    void validate() const;
};

SamplingScheme parse_sampling_scheme(const std::string &name);
const char *sampling_scheme_name(SamplingScheme s);

/// Amplitudes cos(t/2)|0> + e^{ip} sin(t/2)|1> embedded in the four-level
/// space. Fibonacci points follow the spherical Fibonacci lattice (point 0 is
/// the lattice origin); random points are uniform in the surface measure.
std::vector<Vector4c> bloch_states(const BlochSampling &s);

std::vector<DensityMatrix> bloch_samples(const BlochSampling &s);

}  // namespace holo

#endif
