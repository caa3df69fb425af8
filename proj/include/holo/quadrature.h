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

#ifndef HOLO_QUADRATURE_H
#define HOLO_QUADRATURE_H

#include <functional>
#include <span>

namespace holo {

struct QuadratureOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    unsigned max_depth = 20;
};

/// Adaptive Gauss-Kronrod integral of f over [a, b], split at the interior
/// breakpoints. Throws NumericalError when the error estimate stays above
/// tolerance.
double integrate(const std::function<double(double)> &f, double a, double b,
                 std::span<const double> breakpoints = {}, QuadratureOptions opts = {});

struct PrincipalValueOptions {
    QuadratureOptions quad;
    /// Required agreement between excision widths h and h/2.
    double consistency_tol = 1e-6;
    /// Upper bound on the excision half-width.
    double max_half_width = 0.5;
};

/// Cauchy principal value of the integral of f(x) / (x - pole) over [a, b].
///
/// The interval is split into the two outer pieces [a, pole - h] and
/// [pole + h, b], integrated directly, plus the symmetric neighbourhood folded
/// onto [0, h]:
///
///     integral_0^h (f(pole + u) - f(pole - u)) / u du
///
/// which has a removable singularity. The decomposition is exact for every h;
/// it is evaluated at h and h/2 and the two results must agree to
/// `consistency_tol` (relative), otherwise NumericalError is thrown. A pole
/// outside (a, b) degenerates to an ordinary integral.
double principal_value(const std::function<double(double)> &f, double a, double b, double pole,
                       std::span<const double> breakpoints = {}, PrincipalValueOptions opts = {});

}  // namespace holo

#endif
