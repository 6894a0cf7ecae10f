#pragma once

#include "gyrovec/ball.hpp"
#include "gyrovec/types.hpp"

namespace gyrovec {

/// Einstein scalar multiplication,
///
///     r (x) v = s tanh(r atanh(||v||/s)) v/||v||,   r (x) 0 = 0.
///
/// The tanh/atanh form is used exclusively; the equivalent rational-power
/// form overflows for large |r|.
BallPoint scalar_mul(double r, const BallPoint& v, const SpaceContext& ctx);

/// Einstein half, (gamma_v / (1 + gamma_v)) v. Equals scalar_mul(0.5, v),
/// and doubling it under Einstein addition returns v.
BallPoint einstein_half(const BallPoint& v, const SpaceContext& ctx);

/// Gyroline through two distinct points: t -> A (+) ((-A (+) B) (x) t).
/// In this (Beltrami-Klein) model its trace is the Euclidean chord of the
/// ball through A and B.
struct Gyroline {
    Gyroline(BallPoint a, BallPoint b, const SpaceContext& ctx);

    BallPoint a;
    BallPoint b;
};

/// Point of the gyroline at parameter t (t=0 -> A, t=1 -> B, t=1/2 -> the
/// gyromidpoint).
BallPoint gyroline_point(const Gyroline& line, double t, const SpaceContext& ctx);

/// Gyrodistance d(A, B) = ||(-A) (+) B||.
double gyrodistance(const BallPoint& a, const BallPoint& b, const SpaceContext& ctx);

/// Gyromidpoint of a gyrosegment,
///
///     M = (gamma_A1 A1 + gamma_A2 A2) / (gamma_A1 + gamma_A2),
///
/// the unique point of segment A1A2 equidistant from both endpoints.
BallPoint gyromidpoint(const BallPoint& a1, const BallPoint& a2, const SpaceContext& ctx);

/// The two ideal points where the gyroline through A1, A2 meets the boundary
/// sphere. Both have norm s; they are genuinely outside the ball type.
struct BoundaryPair {
    Vec e_a1;  // on the A1 side (negative gyroline parameter)
    Vec e_a2;  // on the A2 side (positive gyroline parameter)
};

BoundaryPair boundary_points(const BallPoint& a1, const BallPoint& a2, const SpaceContext& ctx);

}  // namespace gyrovec
