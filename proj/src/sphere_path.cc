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

#include "holo/sphere_path.h"

#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "holo/errors.h"

namespace holo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaSlack = 1e-12;

}  // namespace

bool SpherePoint::at_pole(double tol) const {
    return std::abs(theta) <= tol || std::abs(theta - kPi) <= tol;
}

bool same_point(const SpherePoint &a, const SpherePoint &b, double tol) {
    if (std::abs(a.theta - b.theta) > tol) {
        return false;
    }
    if (a.at_pole(tol) && b.at_pole(tol)) {
        return true;
    }
    // Azimuths are compared modulo 2 pi.
    double d = std::remainder(a.phi - b.phi, 2 * kPi);
    return std::abs(d) <= tol;
}

SpherePoint PathSegment::at(double elapsed) const {
    return {start.theta + theta_rate * elapsed, start.phi + phi_rate * elapsed};
}

void PathSegment::validate() const {
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw ValidationError("path segment duration must be positive and finite");
    }
    if (theta_rate != 0.0 && phi_rate != 0.0) {
        throw ValidationError("path segment must move along one angle at a time");
    }
    if (!std::isfinite(theta_rate) || !std::isfinite(phi_rate)) {
        throw ValidationError("path segment rates must be finite");
    }
    double t0 = start.theta;
    double t1 = end().theta;
    if (t0 < -kThetaSlack || t0 > kPi + kThetaSlack || t1 < -kThetaSlack || t1 > kPi + kThetaSlack) {
        throw ValidationError("path segment leaves theta in [0, pi]");
    }
}

PathSpec::PathSpec(std::vector<PathSegment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw ValidationError("path needs at least one segment");
    }
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        segments_[k].validate();
        if (k > 0 && !same_point(segments_[k - 1].end(), segments_[k].start)) {
            std::ostringstream ss;
            ss << "path is discontinuous between segments " << k - 1 << " and " << k;
            throw ValidationError(ss.str());
        }
        total_time_ += segments_[k].duration;
    }
}

bool PathSpec::is_closed(double tol) const {
    return same_point(start(), end(), tol);
}

void PathSpec::require_closed(const char *who) const {
    if (!is_closed()) {
        throw ValidationError(std::string(who) + ": path is not a closed loop");
    }
}

PathSpec PathSpec::reversed() const {
    std::vector<PathSegment> out;
    out.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
        out.push_back({it->end(), -it->theta_rate, -it->phi_rate, it->duration});
    }
    return PathSpec(std::move(out));
}

SpherePoint PathSpec::at(double t) const {
    double elapsed = 0.0;
    for (const auto &seg : segments_) {
        if (t <= elapsed + seg.duration) {
            return seg.at(std::max(0.0, t - elapsed));
        }
        elapsed += seg.duration;
    }
    return end();
}

PathSpec not_gate_path(double tau) {
    return generalized_loop_path(tau, 1);
}

PathSpec generalized_loop_path(double tau, int n, bool reversed) {
    if (!(tau > 0.0)) {
        throw ValidationError("loop duration tau must be positive");
    }
    if (n < 1) {
        throw ValidationError("loop index n must be >= 1");
    }
    const double arc = kPi / (2.0 * n);
    const double length = kPi + arc;
    const double speed = length / tau;
    const double t_meridian = (kPi / 2) / speed;
    const double t_equator = arc / speed;
    PathSpec forward({
        {{0.0, 0.0}, speed, 0.0, t_meridian},
        {{kPi / 2, 0.0}, 0.0, speed, t_equator},
        {{kPi / 2, arc}, -speed, 0.0, t_meridian},
    });
    return reversed ? forward.reversed() : forward;
}

double solid_angle(const PathSpec &path) {
    double omega = 0.0;
    for (const auto &seg : path.segments()) {
        // Meridian arcs contribute nothing; azimuthal arcs sit at fixed theta.
        if (seg.phi_rate != 0.0) {
            omega += seg.phi_rate * seg.duration * (1.0 - std::cos(seg.start.theta));
        }
    }
    return omega;
}

PathSpec read_path_text(std::istream &in) {
    std::vector<PathSegment> segs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        double theta0, phi0, dtheta, dphi, duration;
        if (!(ls >> theta0 >> phi0 >> dtheta >> dphi >> duration)) {
            throw ValidationError("path text line " + std::to_string(lineno) +
                                  ": expected 'theta0 phi0 dtheta dphi duration'");
        }
        std::string rest;
        if (ls >> rest) {
            throw ValidationError("path text line " + std::to_string(lineno) + ": trailing fields");
        }
        if (!(duration > 0.0)) {
            throw ValidationError("path text line " + std::to_string(lineno) + ": duration must be positive");
        }
        segs.push_back({{theta0, phi0}, dtheta / duration, dphi / duration, duration});
    }
    return PathSpec(std::move(segs));
}

void write_path_text(std::ostream &out, const PathSpec &path) {
    auto flags = out.flags();
    auto prec = out.precision();
    out << std::setprecision(17);
    out << "# theta0 phi0 dtheta dphi duration\n";
    for (const auto &seg : path.segments()) {
        out << seg.start.theta << ' ' << seg.start.phi << ' ' << seg.theta_rate * seg.duration << ' '
            << seg.phi_rate * seg.duration << ' ' << seg.duration << '\n';
    }
    out.flags(flags);
    out.precision(prec);
}

}  // namespace holo
