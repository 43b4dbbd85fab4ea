#pragma once

#include "relvel/algebra3.hpp"

namespace relvel {

/// Inputs to the Einstein operations must satisfy ||v|| <= (1 - margin) * c;
/// closer to c the composition denominator is no longer trustworthy.
inline constexpr double einstein_input_margin = 1e-12;

/// One Einstein composition result. `denom` is the evaluated 1 + a.b/c^2,
/// kept for diagnostics; it is positive for any pair of subluminal inputs.
struct EinsteinSum {
    Velocity w;
    double denom;
};

/// Einstein (special-relativistic) velocity composition a (+) b:
///
///   a (+) b = [ sqrt(1-(a/c)^2) b + (k(a) (a.b) + 1) a ] / (1 + a.b/c^2)
///   k(a)    = (1 - sqrt(1-(a/c)^2)) / ||a||^2
///           = 1 / (c^2 (1 + sqrt(1-(a/c)^2)))   (cancellation-free form used here)
///
/// Throws MixedContext if the light-speed contexts differ, Superluminal if an
/// input exceeds the acceptance margin.
EinsteinSum einstein_add(const Velocity& a, const Velocity& b);

/// Relative velocity of `object` as seen by `observer`: (-observer) (+) object.
EinsteinSum relative_velocity(const Velocity& observer, const Velocity& object);

/// gyr[u,v]w = -(u (+) v) (+) (u (+) (v (+) w)): the rotation that measures the
/// failure of associativity. Preserves the Euclidean norm of w; reduces to the
/// identity when v = 0 or u is parallel to v.
Velocity gyration(const Velocity& u, const Velocity& v, const Velocity& w);

}  // namespace relvel
