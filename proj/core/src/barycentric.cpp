#include "gyrovec/barycentric.hpp"

#include <algorithm>
#include <cmath>

namespace gyrovec {

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kFlatResidualTol = 1e-8;

void require_anchor_weights(std::size_t anchors, const Vec& weights) {
    if (anchors == 0)
        throw Error("dependent_anchors", "anchor set is empty");
    if (static_cast<std::size_t>(weights.size()) != anchors)
        throw Error("dimension_mismatch", "weight count does not match anchor count");
}

}  // namespace

bool gyro_independent(const AnchorSet& anchors, const SpaceContext& ctx) {
    if (anchors.empty())
        return false;
    const int count = static_cast<int>(anchors.size()) - 1;
    if (count == 0)
        return true;
    Mat m(ctx.dim, count);
    for (int k = 0; k < count; ++k)
        m.col(k) = gyrovector(anchors[0], anchors[static_cast<std::size_t>(k) + 1], ctx).coords();
    Eigen::ColPivHouseholderQR<Mat> qr(m);
    qr.setThreshold(kRankThreshold);
    return qr.rank() == count;
}

bool euclidean_independent(const std::vector<Vec>& anchors) {
    if (anchors.empty())
        return false;
    const int count = static_cast<int>(anchors.size()) - 1;
    if (count == 0)
        return true;
    Mat m(anchors[0].size(), count);
    for (int k = 0; k < count; ++k)
        m.col(k) = anchors[static_cast<std::size_t>(k) + 1] - anchors[0];
    Eigen::ColPivHouseholderQR<Mat> qr(m);
    qr.setThreshold(kRankThreshold);
    return qr.rank() == count;
}

Vec canonical_weights(const Vec& weights) {
    Eigen::Index imax = 0;
    const double largest = weights.cwiseAbs().maxCoeff(&imax);
    if (largest == 0.0)
        throw Error("zero_weight_sum", "all weights vanish");
    Vec scaled = weights / weights(imax);
    for (Eigen::Index i = 0; i < scaled.size(); ++i) {
        if (scaled(i) != 0.0) {
            if (scaled(i) < 0.0)
                scaled = -scaled;
            break;
        }
    }
    return scaled;
}

Vec eval_euclidean(const std::vector<Vec>& anchors, const Vec& weights) {
    require_anchor_weights(anchors.size(), weights);
    const double total = weights.sum();
    double abs_total = weights.cwiseAbs().sum();
    if (std::fabs(total) <= 1e-12 * std::max(1.0, abs_total))
        throw Error("zero_weight_sum", "barycentric weights sum to zero");
    Vec p = Vec::Zero(anchors[0].size());
    for (std::size_t k = 0; k < anchors.size(); ++k)
        p += weights(static_cast<Eigen::Index>(k)) * anchors[k];
    return p / total;
}

Vec solve_euclidean(const Vec& p, const std::vector<Vec>& anchors) {
    if (anchors.empty())
        throw Error("dependent_anchors", "anchor set is empty");
    const int n = static_cast<int>(anchors[0].size());
    const int count = static_cast<int>(anchors.size()) - 1;

    Vec rhs = p - anchors[0];
    if (count == 0) {
        if (rhs.norm() > kFlatResidualTol * std::max(1.0, anchors[0].norm()))
            throw Error("not_in_flat", "point is not the single anchor");
        Vec w(1);
        w(0) = 1.0;
        return w;
    }

    Mat m(n, count);
    for (int k = 0; k < count; ++k)
        m.col(k) = anchors[static_cast<std::size_t>(k) + 1] - anchors[0];

    Eigen::ColPivHouseholderQR<Mat> qr(m);
    qr.setThreshold(kRankThreshold);
    if (qr.rank() < count)
        throw Error("dependent_anchors", "anchors are barycentrically dependent");

    const Vec x = qr.solve(rhs);
    double spread = 0.0;
    for (int k = 0; k < count; ++k)
        spread = std::max(spread, m.col(k).norm());
    const double residual = (m * x - rhs).norm();
    if (residual > kFlatResidualTol * std::max({spread, rhs.norm(), 1e-30}))
        throw Error("not_in_flat", "point does not lie in the anchor flat");

    Vec weights(count + 1);
    weights.tail(count) = x;
    weights(0) = 1.0 - x.sum();
    return weights;
}

GyroEval eval_gyro(const AnchorSet& anchors, const Vec& weights, const SpaceContext& ctx) {
    require_anchor_weights(anchors.size(), weights);
    const std::size_t n = anchors.size();
    double denom = 0.0;
    double abs_denom = 0.0;
    std::vector<double> gammas(n);
    for (std::size_t k = 0; k < n; ++k) {
        gammas[k] = gamma(anchors[k], ctx);
        const double term = weights(static_cast<Eigen::Index>(k)) * gammas[k];
        denom += term;
        abs_denom += std::fabs(term);
    }
    if (std::fabs(denom) <= ctx.abs_tol * std::max(1.0, abs_denom))
        throw Error("zero_gamma_weight_sum",
                    "sum of gamma-weighted coordinates vanishes; the point is undefined");

    Vec numerator = Vec::Zero(ctx.dim);
    for (std::size_t k = 0; k < n; ++k)
        numerator += weights(static_cast<Eigen::Index>(k)) * gammas[k] * anchors[k].coords();

    GyroEval out;
    out.point = numerator / denom;
    out.rep.anchors = anchors;
    out.rep.weights = canonical_weights(weights);
    out.rep.const_sq = rep_constant_sq(anchors, out.rep.weights, ctx);
    return out;
}

double rep_constant_sq(const AnchorSet& anchors, const Vec& weights, const SpaceContext& ctx) {
    require_anchor_weights(anchors.size(), weights);
    const std::size_t n = anchors.size();

    double pair_form = 0.0;   // 2 sum m_j m_k (gamma_jk - 1)
    double gamma_form = 0.0;  // 2 sum m_j m_k gamma_jk
    double scale = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const double g_jk = gamma_of_diff(anchors[j], anchors[k], ctx);
            const double mm = weights(static_cast<Eigen::Index>(j)) *
                              weights(static_cast<Eigen::Index>(k));
            pair_form += 2.0 * mm * (g_jk - 1.0);
            gamma_form += 2.0 * mm * g_jk;
            scale += 2.0 * std::fabs(mm) * g_jk;
        }

    const double sum = weights.sum();
    const double sq_sum = weights.squaredNorm();
    const double form1 = sum * sum + pair_form;
    const double form2 = sq_sum + gamma_form;
    scale += sum * sum + sq_sum;

    if (std::fabs(form1 - form2) > std::max(ctx.abs_tol, ctx.rel_tol * std::max(1.0, scale)))
        throw Error("rep_constant",
                    "the two representation-constant forms disagree beyond tolerance");
    return form1;
}

BallClass classify(const GyrobarycentricRep& rep, const SpaceContext& ctx) {
    (void)ctx;
    const double abs_sum = rep.weights.cwiseAbs().sum();
    const double band = 1e-10 * abs_sum * abs_sum;
    if (rep.const_sq > band)
        return BallClass::inside;
    if (rep.const_sq < -band)
        return BallClass::outside;
    return BallClass::boundary;
}

GyrobarycentricRep solve_gyro(const BallPoint& p, const AnchorSet& anchors,
                              const SpaceContext& ctx, int base_index) {
    if (anchors.empty())
        throw Error("dependent_anchors", "anchor set is empty");
    if (base_index < 0 || base_index >= static_cast<int>(anchors.size()))
        throw Error("usage", "base anchor index out of range");

    const std::size_t n = anchors.size();
    const BallPoint& base = anchors[static_cast<std::size_t>(base_index)];
    const Vec rhs = gyrovector(base, p, ctx).coords();

    if (n == 1) {
        if (rhs.norm() > kFlatResidualTol * std::max(1.0, ctx.s))
            throw Error("not_in_gyroflat", "point is not the single anchor");
        GyrobarycentricRep rep;
        rep.anchors = anchors;
        rep.weights = Vec::Ones(1);
        rep.const_sq = 1.0;
        return rep;
    }

    const int count = static_cast<int>(n) - 1;
    Mat m(ctx.dim, count);
    std::vector<double> base_gammas;  // gamma_{bk} for the non-base anchors
    base_gammas.reserve(static_cast<std::size_t>(count));
    int col = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (static_cast<int>(k) == base_index)
            continue;
        const BallPoint a_bk = gyrovector(base, anchors[k], ctx);
        const double g_bk = gamma(a_bk, ctx);
        m.col(col) = g_bk * a_bk.coords();
        base_gammas.push_back(g_bk);
        ++col;
    }

    Eigen::ColPivHouseholderQR<Mat> qr(m);
    qr.setThreshold(kRankThreshold);
    if (qr.rank() < count)
        throw Error("dependent_anchors", "anchors are gyrobarycentrically dependent");

    const Vec x = qr.solve(rhs);
    double spread = 0.0;
    for (int k = 0; k < count; ++k)
        spread = std::max(spread, m.col(k).norm());
    const double residual = (m * x - rhs).norm();
    if (residual > kFlatResidualTol * std::max({spread, rhs.norm(), 1e-30}))
        throw Error("not_in_gyroflat", "point does not lie in the anchor gyroflat");

    // Normalization sum m_k gamma_bk = 1 fixes the base weight; canonical
    // form then removes the homogeneous scale again.
    Vec weights(n);
    double weighted = 0.0;
    col = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (static_cast<int>(k) == base_index)
            continue;
        weights(static_cast<Eigen::Index>(k)) = x(col);
        weighted += x(col) * base_gammas[static_cast<std::size_t>(col)];
        ++col;
    }
    weights(base_index) = 1.0 - weighted;

    GyrobarycentricRep rep;
    rep.anchors = anchors;
    rep.weights = canonical_weights(weights);
    rep.const_sq = rep_constant_sq(anchors, rep.weights, ctx);
    return rep;
}

GyrobarycentricRep transform_rep(const GyroMotion& motion, const GyrobarycentricRep& rep,
                                 const SpaceContext& ctx) {
    GyrobarycentricRep out;
    out.anchors.reserve(rep.anchors.size());
    for (const BallPoint& a : rep.anchors)
        out.anchors.push_back(apply_gyromotion(motion, a, ctx));
    out.weights = rep.weights;
    out.const_sq = rep_constant_sq(out.anchors, out.weights, ctx);
    if (!ctx.near(out.const_sq, rep.const_sq, std::fabs(rep.const_sq)))
        throw Error("rep_constant",
                    "representation constant changed under a gyromotion");
    return out;
}

}  // namespace gyrovec
