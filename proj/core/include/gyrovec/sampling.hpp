#pragma once

#include "gyrovec/motions.hpp"
#include "gyrovec/types.hpp"

#include <cstdint>
#include <random>

namespace gyrovec::sampling {

/// Uniform double in [0, 1) built directly from the generator's bits, so the
/// stream is identical across standard library implementations.
double unit_real(std::mt19937_64& rng);

double uniform(std::mt19937_64& rng, double lo, double hi);

/// Standard normal via Box-Muller (same portability rationale).
double normal(std::mt19937_64& rng);

/// Random point with norm in [lo_frac, hi_frac] * s. Directions are isotropic.
BallPoint point_in_ball(std::mt19937_64& rng, const SpaceContext& ctx, double lo_frac = 0.0,
                        double hi_frac = 0.95);

/// Point of exact norm frac * s.
BallPoint point_on_shell(std::mt19937_64& rng, const SpaceContext& ctx, double frac);

/// Haar-ish random rotation: QR of a Gaussian matrix with the sign fix that
/// makes the factorization unique, reflected into SO(n) if needed.
RotationMatrix random_rotation(std::mt19937_64& rng, int n);

GyroMotion random_gyromotion(std::mt19937_64& rng, const SpaceContext& ctx,
                             double hi_frac = 0.9);

}  // namespace gyrovec::sampling
