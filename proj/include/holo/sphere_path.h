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

#ifndef HOLO_SPHERE_PATH_H
#define HOLO_SPHERE_PATH_H

#include <iosfwd>
#include <string>
#include <vector>

namespace holo {

/// Point on the parameter sphere. Rabi frequencies follow as
/// Omega_1 = Omega sin(theta) cos(phi), Omega_0 = Omega sin(theta) sin(phi),
/// Omega_a = Omega cos(theta).
struct SpherePoint {
    double theta = 0.0;  ///< polar angle in [0, pi]
    double phi = 0.0;    ///< azimuth, unwrapped

    bool at_pole(double tol = 1e-12) const;
};

/// True when the two points coincide; at a pole the azimuth is ignored.
bool same_point(const SpherePoint &a, const SpherePoint &b, double tol = 1e-9);

/// A path piece swept at constant angular speed along one coordinate.
struct PathSegment {
    SpherePoint start;
    double theta_rate = 0.0;  ///< radians per unit time
    double phi_rate = 0.0;    ///< radians per unit time
    double duration = 0.0;

    SpherePoint at(double elapsed) const;
    SpherePoint end() const {
        return at(duration);
    }
    /// Throws ValidationError unless at most one rate is nonzero, the duration
    /// is positive and theta stays in [0, pi].
    void validate() const;
};

/// An ordered, continuous chain of segments. Closure is not required by the
/// type; operations that need a loop check `is_closed()`.
class PathSpec {
   public:
    explicit PathSpec(std::vector<PathSegment> segments);

    const std::vector<PathSegment> &segments() const {
        return segments_;
    }
    double total_time() const {
        return total_time_;
    }
    SpherePoint start() const {
        return segments_.front().start;
    }
    SpherePoint end() const {
        return segments_.back().end();
    }
    bool is_closed(double tol = 1e-9) const;
    /// Throws ValidationError when the path is not a closed loop.
    void require_closed(const char *who) const;

    /// Same loop traversed backwards.
    PathSpec reversed() const;

    /// Point at absolute time t in [0, total_time].
    SpherePoint at(double t) const;

   private:
    std::vector<PathSegment> segments_;
    double total_time_ = 0.0;
};

/// Pole -> equator along phi = 0, a quarter turn along the equator, back to the
/// pole along phi = pi/2. Each arc takes tau/3.
PathSpec not_gate_path(double tau);

/// Pole -> equator -> equatorial arc of pi/(2n) -> pole, all arcs at the same
/// angular speed. n = 1 is the NOT loop. `reversed` walks it backwards.
PathSpec generalized_loop_path(double tau, int n, bool reversed = false);

/// Solid angle enclosed by a loop, measured from the north pole cap:
/// sum over segments of the integral of (1 - cos theta) dphi.
double solid_angle(const PathSpec &path);

/// Plain-text segment list, one segment per line:
///   theta0 phi0 dtheta dphi duration
/// where dtheta and dphi are the total angle swept by the segment. Blank lines
/// and lines starting with '#' are skipped.
PathSpec read_path_text(std::istream &in);
void write_path_text(std::ostream &out, const PathSpec &path);

}  // namespace holo

#endif
