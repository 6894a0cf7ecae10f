#include "gyrovec/relativity.hpp"

#include <cmath>
#include <limits>

namespace gyrovec {

namespace {

// Kahan-compensated accumulator; keeps mixed-sign mass sums reproducible.
class CompensatedSum {
public:
    void add(double value) {
        const double y = value - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace

FourVector four_velocity(const BallPoint& v, const SpaceContext& ctx) {
    const double g = gamma(v, ctx);
    return {g, Vec(g * v.coords())};
}

FourVector boost_apply(const BallPoint& u, const FourVector& fv, const SpaceContext& ctx) {
    ctx.require_dim(fv.x, "boost_apply");
    const double s2 = ctx.s * ctx.s;
    const double gu = gamma(u, ctx);
    const Vec& uc = u.coords();
    const double ux = uc.dot(fv.x);
    FourVector out;
    out.t = gu * (fv.t + ux / s2);
    out.x = gu * fv.t * uc + fv.x + (gu * gu / (1.0 + gu)) * (ux / s2) * uc;
    return out;
}

Eigen::Matrix4d boost_matrix(const BallPoint& u, const SpaceContext& ctx) {
    if (ctx.dim != 3)
        throw Error("dimension_mismatch", "boost_matrix is defined for dimension 3 only");
    const double s2 = ctx.s * ctx.s;
    const double g = gamma(u, ctx);
    const Vec& v = u.coords();
    Eigen::Matrix4d m;
    m(0, 0) = g;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = g * v(i) / s2;
        m(i + 1, 0) = g * v(i);
        for (int j = 0; j < 3; ++j)
            m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (g * g / (g + 1.0)) * v(i) * v(j) / s2;
    }
    return m;
}

FourVector galilei_boost(const Vec& v, const FourVector& fv) {
    if (v.size() != fv.x.size())
        throw Error("dimension_mismatch", "galilei_boost: velocity/space dimensions differ");
    return {fv.t, Vec(fv.x + fv.t * v)};
}

double minkowski_norm_sq(const FourVector& fv, const SpaceContext& ctx) {
    ctx.require_dim(fv.x, "minkowski_norm_sq");
    return fv.t * fv.t - fv.x.squaredNorm() / (ctx.s * ctx.s);
}

FourVector four_momentum(const Particle& p, const SpaceContext& ctx) {
    const double g = gamma(p.v, ctx);
    return {p.m * g, Vec(p.m * g * p.v.coords())};
}

SystemResult resultant_invariant_mass(const std::vector<Particle>& system,
                                      const SpaceContext& ctx) {
    if (system.empty())
        throw Error("degenerate_system", "empty particle system");

    const std::size_t n = system.size();
    std::vector<double> gammas(n);
    CompensatedSum gamma_sum;       // sum m_k gamma_k
    double gamma_abs_sum = 0.0;
    double mass_sum = 0.0;
    double abs_mass_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        gammas[k] = gamma(system[k].v, ctx);
        gamma_sum.add(system[k].m * gammas[k]);
        gamma_abs_sum += std::fabs(system[k].m) * gammas[k];
        mass_sum += system[k].m;
        abs_mass_sum += std::fabs(system[k].m);
    }
    const double s1 = gamma_sum.value();
    if (std::fabs(s1) <= ctx.abs_tol * std::max(1.0, gamma_abs_sum))
        throw Error("degenerate_system",
                    "sum of relativistic masses vanishes; the resultant is undefined");

    CompensatedSum pair_sum;  // 2 sum_{j<k} m_j m_k (gamma_{jk} - 1)
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const double g_jk = gamma_of_diff(system[j].v, system[k].v, ctx);
            pair_sum.add(2.0 * system[j].m * system[k].m * (g_jk - 1.0));
        }
    const double m0_sq = mass_sum * mass_sum + pair_sum.value();

    SystemResult result;
    result.m0_sq = m0_sq;
    result.relativistic_mass = s1;

    Vec momentum = Vec::Zero(ctx.dim);
    for (std::size_t k = 0; k < n; ++k)
        momentum += system[k].m * gammas[k] * system[k].v.coords();
    result.v0 = momentum / s1;

    // The sign classification uses the same scale-invariant band as
    // gyrobarycentric representation constants.
    const double band = 1e-10 * abs_mass_sum * abs_mass_sum;
    if (m0_sq > band) {
        result.classification = BallClass::inside;
        result.m0 = (s1 > 0.0 ? 1.0 : -1.0) * std::sqrt(m0_sq);
        result.gamma_v0 = SignedGamma{s1 * s1 / m0_sq, SignedGamma::Kind::real};
    } else if (m0_sq < -band) {
        result.classification = BallClass::outside;
        result.m0 = std::nullopt;
        result.gamma_v0 = SignedGamma{s1 * s1 / m0_sq, SignedGamma::Kind::imaginary};
    } else {
        result.classification = BallClass::boundary;
        result.m0 = 0.0;
        result.gamma_v0 = SignedGamma{std::numeric_limits<double>::infinity(),
                                      SignedGamma::Kind::infinite};
    }
    return result;
}

NewtonianResult newtonian_resultant(const std::vector<NewtonianParticle>& system) {
    if (system.empty())
        throw Error("degenerate_system", "empty particle system");
    double mass_sum = 0.0;
    double abs_mass_sum = 0.0;
    for (const auto& p : system) {
        mass_sum += p.m;
        abs_mass_sum += std::fabs(p.m);
    }
    if (std::fabs(mass_sum) <= 1e-12 * std::max(1.0, abs_mass_sum))
        throw Error("degenerate_system", "total mass vanishes");
    Vec momentum = Vec::Zero(system.front().v.size());
    for (const auto& p : system) {
        if (p.v.size() != momentum.size())
            throw Error("dimension_mismatch", "newtonian_resultant: inconsistent dimensions");
        momentum += p.m * p.v;
    }
    return {mass_sum, Vec(momentum / mass_sum)};
}

}  // namespace gyrovec
