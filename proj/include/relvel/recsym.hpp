#pragma once

#include "relvel/algebra3.hpp"

namespace relvel {

/// |denom| at or below this is treated as a projective singularity and
/// rejected with DegenerateDenominator. Only reachable for complex or
/// superluminal inputs; real subluminal pairs always have denom >= 1 - b1*b2.
inline constexpr double denominator_tolerance = 1e-12;

/// Scalar-plus-vector pair over the complex numbers, multiplying by
///   (s1,w1)(s2,w2) = (s1 s2 + w1.w2, s1 w2 + s2 w1 + i w1 x w2)
/// with the bilinear dot and cross. Velocities embed as (1, v/c).
struct PauliQuaternion {
    CScalar s;
    CVec3 w;
};

/// Reciprocal-symmetric composition result; `w` is generally complex even for
/// real inputs. `denom` is the evaluated 1 + a.b/c^2.
struct RSum {
    CVec3 w;
    CScalar denom;
};

/// Reciprocal-symmetric velocity composition
///
///   a (+) b = (a + b + (i/c) a x b) / (1 + a.b/c^2)
///
/// defined on arbitrary complex 3-vectors so that results (which are complex)
/// can be composed again. Throws DegenerateDenominator when |denom| falls at
/// or below `denominator_tolerance`.
RSum rs_add(const CVec3& a, const CVec3& b, LightSpeed ctx);

/// Relative velocity of `object` as seen by `observer`: rs_add(-observer, object).
/// Swapping the arguments negates the result exactly.
RSum rs_relative_velocity(const CVec3& observer, const CVec3& object, LightSpeed ctx);

/// (1, v/c). The scalar part of an embedded velocity is exactly 1.
PauliQuaternion quat_embed(const CVec3& v, LightSpeed ctx);

/// Associative bilinear product; the multiplicative carrier of rs_add.
PauliQuaternion quat_mul(const PauliQuaternion& p, const PauliQuaternion& q);

/// Recover a velocity from a quaternion: w = c q.w / q.s, denom = q.s.
/// Throws DegenerateDenominator when |q.s| <= denominator_tolerance.
RSum quat_project(const PauliQuaternion& q, LightSpeed ctx);

}  // namespace relvel
