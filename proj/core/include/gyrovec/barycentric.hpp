#pragma once

#include "gyrovec/ball.hpp"
#include "gyrovec/motions.hpp"
#include "gyrovec/relativity.hpp"
#include "gyrovec/types.hpp"

#include <vector>

namespace gyrovec {

using AnchorSet = std::vector<BallPoint>;

/// Anchors are (gyro)barycentrically independent when the N-1 gyrovectors
/// (-A1) (+) A_k, read as ambient vectors, have full rank.
bool gyro_independent(const AnchorSet& anchors, const SpaceContext& ctx);
bool euclidean_independent(const std::vector<Vec>& anchors);

/// Scale so the largest-magnitude weight is 1, then flip the overall sign so
/// the first nonzero weight is positive. Homogeneous coordinates get one
/// canonical representative this way.
Vec canonical_weights(const Vec& weights);

/// Euclidean barycentric evaluation P = sum m_k A_k / sum m_k.
Vec eval_euclidean(const std::vector<Vec>& anchors, const Vec& weights);

/// Recover special (sum = 1) barycentric coordinates of P by least squares
/// on -A1 + P = sum_{k>=2} m_k (-A1 + A_k). Throws "not_in_flat" when the
/// residual exceeds 1e-8 of the anchor spread.
Vec solve_euclidean(const Vec& p, const std::vector<Vec>& anchors);

/// Gyrobarycentric representation of a point: anchors, canonical homogeneous
/// weights, and the signed squared representation constant
///
///   m_P^2 = (sum m_k)^2 + 2 sum_{j<k} m_j m_k (gamma_jk - 1),
///
/// whose sign locates P relative to the ball.
struct GyrobarycentricRep {
    AnchorSet anchors;
    Vec weights;      // canonical form
    double const_sq;  // m_P^2 of the canonical weights
};

/// Evaluate P = sum m_k gamma_k A_k / sum m_k gamma_k. P is returned as an
/// ambient vector: it lies inside the ball exactly when the representation
/// constant squared is positive.
struct GyroEval {
    Vec point;
    GyrobarycentricRep rep;
};

GyroEval eval_gyro(const AnchorSet& anchors, const Vec& weights, const SpaceContext& ctx);

/// The representation constant squared, computed in both printed forms
/// ((sum m)^2 + 2 sum m_j m_k (gamma_jk - 1) and
///  sum m^2 + 2 sum m_j m_k gamma_jk) which are cross-checked against each
/// other before the first is returned.
double rep_constant_sq(const AnchorSet& anchors, const Vec& weights, const SpaceContext& ctx);

/// Classify the represented point against the ball by the sign of m_P^2,
/// with a boundary band of 1e-10 (sum |m_k|)^2 so the test is invariant
/// under weight rescaling.
BallClass classify(const GyrobarycentricRep& rep, const SpaceContext& ctx);

/// Solve for the gyrobarycentric coordinates of P: least squares on
/// (-A_b) (+) P = sum_k m_k gamma_bk a_bk over the non-base anchors, then the
/// base weight from the normalization sum m_k gamma_bk = 1, then canonical
/// form. The answer is independent of the base anchor choice.
GyrobarycentricRep solve_gyro(const BallPoint& p, const AnchorSet& anchors,
                              const SpaceContext& ctx, int base_index = 0);

/// Move a representation by a gyromotion: anchors transform, weights are
/// copied bit for bit, and the recomputed representation constant must agree
/// with the original (it is a gyromotion invariant).
GyrobarycentricRep transform_rep(const GyroMotion& motion, const GyrobarycentricRep& rep,
                                 const SpaceContext& ctx);

}  // namespace gyrovec
