#include "relvel/recsym.hpp"

namespace relvel {

namespace {

void require_finite(const CVec3& v) {
    if (!is_finite(v)) {
        throw std::invalid_argument("vector components must be finite");
    }
}

}  // namespace

RSum rs_add(const CVec3& a, const CVec3& b, LightSpeed ctx) {
    require_finite(a);
    require_finite(b);

    const double c = ctx.c();
    const CScalar denom = 1.0 + dot_bilinear(a, b) / (c * c);
    if (std::abs(denom) <= denominator_tolerance) {
        throw DegenerateDenominator("rs_add denominator within 1e-12 of zero");
    }
    const CVec3 numerator = a + b + CScalar(0.0, 1.0 / c) * cross(a, b);
    return {numerator / denom, denom};
}

RSum rs_relative_velocity(const CVec3& observer, const CVec3& object, LightSpeed ctx) {
    return rs_add(-observer, object, ctx);
}

PauliQuaternion quat_embed(const CVec3& v, LightSpeed ctx) {
    require_finite(v);
    return {CScalar(1.0), (1.0 / ctx.c()) * v};
}

PauliQuaternion quat_mul(const PauliQuaternion& p, const PauliQuaternion& q) {
    return {p.s * q.s + dot_bilinear(p.w, q.w),
            p.s * q.w + q.s * p.w + CScalar(0.0, 1.0) * cross(p.w, q.w)};
}

RSum quat_project(const PauliQuaternion& q, LightSpeed ctx) {
    if (std::abs(q.s) <= denominator_tolerance) {
        throw DegenerateDenominator("quaternion scalar part within 1e-12 of zero");
    }
    return {(CScalar(ctx.c()) / q.s) * q.w, q.s};
}

}  // namespace relvel
