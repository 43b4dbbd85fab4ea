#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "relvel/errors.hpp"

namespace relvel {

using CScalar = std::complex<double>;

/// Complex 3-vector. Velocities, composition results and law defects all live
/// here; a real velocity is the special case with zero imaginary parts.
struct CVec3 {
    CScalar x{0.0, 0.0};
    CScalar y{0.0, 0.0};
    CScalar z{0.0, 0.0};

    CVec3() = default;
    CVec3(CScalar x_, CScalar y_, CScalar z_) : x(x_), y(y_), z(z_) {}
    CVec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    CScalar& operator[](int i) {
        switch (i) {
            case 0: return x;
            case 1: return y;
            case 2: return z;
            default: throw std::out_of_range("CVec3 index out of range");
        }
    }

    const CScalar& operator[](int i) const {
        switch (i) {
            case 0: return x;
            case 1: return y;
            case 2: return z;
            default: throw std::out_of_range("CVec3 index out of range");
        }
    }
};

inline bool operator==(const CVec3& a, const CVec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
}

inline bool operator!=(const CVec3& a, const CVec3& b) { return !(a == b); }

inline CVec3 operator+(const CVec3& a, const CVec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline CVec3 operator-(const CVec3& a, const CVec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline CVec3 operator-(const CVec3& a) { return {-a.x, -a.y, -a.z}; }

inline CVec3 operator*(CScalar s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline CVec3 operator*(double s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline CVec3 operator/(const CVec3& a, CScalar s) { return {a.x / s, a.y / s, a.z / s}; }

/// Dot product extended bilinearly to complex vectors: no conjugation.
/// The composition laws and the magnitude identity only close under this form;
/// the Hermitian norm below is used for defect measurement only.
inline CScalar dot_bilinear(const CVec3& a, const CVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

/// Hermitian (defect) norm: sqrt(sum |a_k|^2). Zero iff a is the zero vector.
inline double norm_hermitian(const CVec3& a) {
    return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

/// Principal square root of the bilinear self-dot. Branch cut along the
/// negative real axis; nonnegative real part, and nonnegative imaginary part
/// when the real part vanishes (the signed-zero cases are canonicalized so the
/// branch is deterministic). Coincides with the Euclidean norm on real vectors.
inline CScalar magnitude_bilinear(const CVec3& a) {
    const CScalar d = dot_bilinear(a, a);
    if (d.imag() == 0.0) {
        return d.real() >= 0.0 ? CScalar(std::sqrt(d.real()), 0.0)
                               : CScalar(0.0, std::sqrt(-d.real()));
    }
    return std::sqrt(d);
}

inline bool is_finite(CScalar s) { return std::isfinite(s.real()) && std::isfinite(s.imag()); }

inline bool is_finite(const CVec3& a) {
    return is_finite(a.x) && is_finite(a.y) && is_finite(a.z);
}

inline bool is_real(const CVec3& a) {
    return a.x.imag() == 0.0 && a.y.imag() == 0.0 && a.z.imag() == 0.0;
}

/// Speed-of-light context attached to every velocity. Strictly positive, finite.
class LightSpeed {
public:
    explicit LightSpeed(double c = 1.0) : c_(c) {
        if (!(std::isfinite(c) && c > 0.0)) {
            throw std::invalid_argument("light speed must be finite and > 0");
        }
    }

    double c() const noexcept { return c_; }

    friend bool operator==(LightSpeed a, LightSpeed b) { return a.c_ == b.c_; }
    friend bool operator!=(LightSpeed a, LightSpeed b) { return a.c_ != b.c_; }

private:
    double c_;
};

/// Real subluminal 3-velocity: zero imaginary parts and ||v|| < c strictly.
/// The constructor is the only gate; once built, a Velocity is always valid.
class Velocity {
public:
    Velocity(const CVec3& v, LightSpeed ctx) : v_(v), ctx_(ctx) {
        if (!is_finite(v)) {
            throw std::invalid_argument("velocity components must be finite");
        }
        if (!is_real(v)) {
            throw NonRealVelocity("velocity must have zero imaginary parts");
        }
        if (!(norm_hermitian(v) < ctx.c())) {
            throw Superluminal("velocity magnitude must be strictly below c");
        }
    }

    Velocity(double x, double y, double z, LightSpeed ctx) : Velocity(CVec3{x, y, z}, ctx) {}

    const CVec3& vec() const noexcept { return v_; }
    LightSpeed context() const noexcept { return ctx_; }
    double speed() const { return norm_hermitian(v_); }
    double beta() const { return speed() / ctx_.c(); }

    Velocity operator-() const { return Velocity(-v_, ctx_); }

private:
    CVec3 v_;
    LightSpeed ctx_;
};

}  // namespace relvel
