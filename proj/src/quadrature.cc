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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "holo/errors.h"

namespace holo {

namespace {

std::vector<double> split_points(double a, double b, std::span<const double> breakpoints) {
    std::vector<double> pts{a};
    for (double x : breakpoints) {
        if (x > a && x < b) {
            pts.push_back(x);
        }
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

double integrate(const std::function<double(double)> &f, double a, double b, std::span<const double> breakpoints,
                 QuadratureOptions opts) {
    if (b < a) {
        return -integrate(f, b, a, breakpoints, opts);
    }
    if (!(b > a)) {
        return 0.0;
    }
    auto pts = split_points(a, b, breakpoints);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        double err = 0.0, l1 = 0.0;
        double piece = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            f, pts[k], pts[k + 1], opts.max_depth, opts.rel_tol, &err, &l1);
        if (!std::isfinite(piece) || err > std::max(opts.abs_tol, 1e3 * opts.rel_tol * l1)) {
            std::ostringstream ss;
            ss << "quadrature on [" << pts[k] << ", " << pts[k + 1] << "] did not converge (estimate " << piece
               << ", error " << err << ", L1 " << l1 << ")";
            throw NumericalError(ss.str());
        }
        total += piece;
    }
    return total;
}

namespace {

double pv_with_width(const std::function<double(double)> &f, double a, double b, double pole, double h,
                     std::span<const double> breakpoints, const QuadratureOptions &quad) {
    auto outer = [&](double x) { return f(x) / (x - pole); };
    auto folded = [&](double u) { return (f(pole + u) - f(pole - u)) / u; };
    double left = integrate(outer, a, pole - h, breakpoints, quad);
    double right = integrate(outer, pole + h, b, breakpoints, quad);
    std::vector<double> inner_breaks;
    for (double x : breakpoints) {
        double d = std::abs(x - pole);
        if (d > 0.0 && d < h) {
            inner_breaks.push_back(d);
        }
    }
    double centre = integrate(folded, 0.0, h, inner_breaks, quad);
    return left + right + centre;
}

}  // namespace

double principal_value(const std::function<double(double)> &f, double a, double b, double pole,
                       std::span<const double> breakpoints, PrincipalValueOptions opts) {
    if (!(b > a)) {
        throw ValidationError("principal_value: empty interval");
    }
    const double margin = std::min(pole - a, b - pole);
    if (margin <= 0.0) {
        if (pole == a || pole == b) {
            throw ValidationError("principal_value: pole on an interval endpoint");
        }
        return integrate([&](double x) { return f(x) / (x - pole); }, a, b, breakpoints, opts.quad);
    }
    const double h = std::min(opts.max_half_width, 0.5 * margin);
    double coarse = pv_with_width(f, a, b, pole, h, breakpoints, opts.quad);
    double fine = pv_with_width(f, a, b, pole, 0.5 * h, breakpoints, opts.quad);
    double scale = std::max({std::abs(fine), std::abs(coarse), 1e-300});
    if (std::abs(fine - coarse) > opts.consistency_tol * scale) {
        std::ostringstream ss;
        ss << "principal value at pole " << pole << " inconsistent between widths " << h << " and " << 0.5 * h
           << ": " << coarse << " vs " << fine;
        throw NumericalError(ss.str());
    }
    return fine;
}

}  // namespace holo
