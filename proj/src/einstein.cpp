#include "relvel/einstein.hpp"

namespace relvel {

namespace {

void require_compatible(const Velocity& a, const Velocity& b) {
    if (a.context() != b.context()) {
        throw MixedContext("velocities carry different light-speed contexts");
    }
}

void require_within_margin(const Velocity& v) {
    if (v.speed() > (1.0 - einstein_input_margin) * v.context().c()) {
        throw Superluminal("input speed exceeds (1 - 1e-12) c");
    }
}

}  // namespace

EinsteinSum einstein_add(const Velocity& a, const Velocity& b) {
    require_compatible(a, b);
    require_within_margin(a);
    require_within_margin(b);

    const double c = a.context().c();
    const double c2 = c * c;
    const CVec3& av = a.vec();
    const CVec3& bv = b.vec();

    const double beta_a = a.beta();
    const double gamma_inv = std::sqrt(1.0 - beta_a * beta_a);
    // k(a) written so that a -> 0 tends smoothly to 1/(2c^2) instead of 0/0.
    const double k = 1.0 / (c2 * (1.0 + gamma_inv));

    const double ab = dot_bilinear(av, bv).real();
    const double denom = 1.0 + ab / c2;

    const CVec3 numerator = gamma_inv * bv + (k * ab + 1.0) * av;
    const CVec3 w = (1.0 / denom) * numerator;
    return {Velocity(w, a.context()), denom};
}

EinsteinSum relative_velocity(const Velocity& observer, const Velocity& object) {
    return einstein_add(-observer, object);
}

Velocity gyration(const Velocity& u, const Velocity& v, const Velocity& w) {
    require_compatible(u, v);
    require_compatible(u, w);
    const Velocity uv = einstein_add(u, v).w;
    const Velocity vw = einstein_add(v, w).w;
    const Velocity u_vw = einstein_add(u, vw).w;
    return einstein_add(-uv, u_vw).w;
}

}  // namespace relvel
