#pragma once

#include <random>

#include "relvel/algebra3.hpp"

// Test-only generators, kept independent of the lawlab sampler on purpose.

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline relvel::CScalar random_cscalar(std::mt19937_64& rng, double radius = 1.0) {
    return {uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
}

inline relvel::CVec3 random_cvec3(std::mt19937_64& rng, double radius = 1.0) {
    return {random_cscalar(rng, radius), random_cscalar(rng, radius),
            random_cscalar(rng, radius)};
}

// Real vector with Euclidean norm strictly below max_norm.
inline relvel::CVec3 random_real_vec3(std::mt19937_64& rng, double max_norm) {
    for (;;) {
        relvel::CVec3 v{uniform(rng, -max_norm, max_norm), uniform(rng, -max_norm, max_norm),
                        uniform(rng, -max_norm, max_norm)};
        if (relvel::norm_hermitian(v) < max_norm) return v;
    }
}
