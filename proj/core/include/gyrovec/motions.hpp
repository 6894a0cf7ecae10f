#pragma once

#include "gyrovec/gyration.hpp"
#include "gyrovec/space.hpp"
#include "gyrovec/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace gyrovec {

/// Direct isometry of the ambient Euclidean space: A -> X + R A.
struct EuclideanMotion {
    Vec translation;
    RotationMatrix rotation;

    static EuclideanMotion identity(int n) {
        return {Vec::Zero(n), RotationMatrix::identity(n)};
    }
};

Vec apply_euclidean(const EuclideanMotion& m, const Vec& a);
EuclideanMotion compose_euclidean(const EuclideanMotion& m1, const EuclideanMotion& m2);
EuclideanMotion inverse_euclidean(const EuclideanMotion& m);

/// Direct gyroisometry (gyromotion) of the ball: A -> X (+) R A.
/// Element of the gyrosemidirect product of the ball gyrogroup with SO(n).
struct GyroMotion {
    BallPoint translation;
    RotationMatrix rotation;

    static GyroMotion identity(const SpaceContext& ctx) {
        return {BallPoint::origin(ctx), RotationMatrix::identity(ctx.dim)};
    }
};

/// Left gyrotranslation X (+) A: the hyperbolic counterpart of translation,
/// a gyroisometry of the ball.
BallPoint left_gyrotranslate(const BallPoint& x, const BallPoint& a, const SpaceContext& ctx);

BallPoint apply_gyromotion(const GyroMotion& m, const BallPoint& a, const SpaceContext& ctx);

/// Gyrosemidirect product:
/// (X1, R1)(X2, R2) = (X1 (+) R1 X2, gyr[X1, R1 X2] R1 R2).
GyroMotion compose_gyromotions(const GyroMotion& m1, const GyroMotion& m2,
                               const SpaceContext& ctx);

/// Inverse gyromotion, A -> (-R^t X) (+) R^t A.
GyroMotion inverse_gyromotion(const GyroMotion& m, const SpaceContext& ctx);

/// Result of recovering the (X, R) form of a point map.
struct GyroDecomposition {
    enum class Status { ok, opposite_isometry, not_a_gyroisometry };

    Status status = Status::not_a_gyroisometry;
    Vec translation;   // phi(O)
    Mat linear_map;    // recovered orthogonal factor, det +1 or -1
    double residual = 0.0;  // worst ||phi(P) - (X (+) R P)|| over the probes
};

/// Recover X = phi(O) and R from a candidate gyroisometry. R is read off
/// scaled basis probes (step 0.1 s) and orthonormalized through its polar
/// factor; the decomposition is then validated on the caller's probe set.
/// Maps with det R = -1 are reported as opposite isometries, not errors.
GyroDecomposition decompose_gyroisometry(
    const std::function<BallPoint(const BallPoint&)>& phi,
    const std::vector<BallPoint>& probes, const SpaceContext& ctx,
    double residual_tol = 1e-6);

/// A map of k ball points to an ambient vector, for gyrocovariance checking.
using PointMap = std::function<Vec(std::span<const BallPoint>, const SpaceContext&)>;

struct GyrocovarianceReport {
    double translation_residual = 0.0;  // worst X (+) T(A...) vs T(X (+) A...)
    double rotation_residual = 0.0;     // worst R T(A...) vs T(R A...)

    double max_residual() const {
        return translation_residual > rotation_residual ? translation_residual
                                                        : rotation_residual;
    }
};

/// Check both gyrocovariance identities of T over every sample tuple and
/// every motion; returns the worst relative residual of each identity.
GyrocovarianceReport check_gyrocovariance(const PointMap& map,
                                          const std::vector<std::vector<BallPoint>>& samples,
                                          const std::vector<GyroMotion>& motions,
                                          const SpaceContext& ctx);

}  // namespace gyrovec
