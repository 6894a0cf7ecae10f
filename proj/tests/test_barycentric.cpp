#include "gyrovec/barycentric.hpp"
#include "gyrovec/sampling.hpp"
#include "gyrovec/space.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace gyrovec;
using oracles::make_point;
using oracles::make_vec;

namespace {
const SpaceContext unit2(1.0, 2);
const SpaceContext unit3(1.0, 3);

AnchorSet random_anchors(std::mt19937_64& rng, const SpaceContext& ctx, int count) {
    // Rejection keeps the anchor gyrovectors well-conditioned.
    while (true) {
        AnchorSet anchors;
        for (int k = 0; k < count; ++k)
            anchors.push_back(sampling::point_in_ball(rng, ctx, 0.0, 0.85));
        if (count == 1)
            return anchors;
        Mat m(ctx.dim, count - 1);
        for (int k = 1; k < count; ++k)
            m.col(k - 1) = gyrovector(anchors[0], anchors[static_cast<std::size_t>(k)], ctx)
                               .coords();
        Eigen::JacobiSVD<Mat> svd(m);
        if (svd.singularValues()(svd.singularValues().size() - 1) > 0.05)
            return anchors;
    }
}
}  // namespace

TEST_CASE("canonical weights") {
    CHECK(canonical_weights(make_vec({2.0, 4.0})) == make_vec({0.5, 1.0}));
    CHECK(canonical_weights(make_vec({-2.0, 4.0})) == make_vec({0.5, -1.0}));
    CHECK(canonical_weights(make_vec({0.0, -3.0, 1.5})) == make_vec({0.0, 1.0, -0.5}));
    CHECK_THROWS_AS(canonical_weights(make_vec({0.0, 0.0})), Error);
}

TEST_CASE("euclidean barycentric evaluation") {
    const std::vector<Vec> anchors = {make_vec({0.0, 0.0}), make_vec({2.0, 0.0})};
    CHECK(oracles::rel_err(eval_euclidean(anchors, make_vec({1.0, 1.0})),
                           make_vec({1.0, 0.0}))
          < 1e-15);
    CHECK(oracles::rel_err(eval_euclidean(anchors, make_vec({1.0, 0.0})),
                           make_vec({0.0, 0.0}))
          < 1e-15);

    // t : (1 - t) splits the segment 3 : 1 from the second anchor
    const Vec p = eval_euclidean(anchors, make_vec({0.25, 0.75}));
    CHECK((p - anchors[0]).norm() / (p - anchors[1]).norm() == doctest::Approx(3.0));

    CHECK_THROWS_AS(eval_euclidean(anchors, make_vec({1.0, -1.0})), Error);

    SUBCASE("translation and rotation covariance") {
        std::mt19937_64 rng(68);
        const Vec w = make_vec({0.4, 0.6});
        const Vec shift = make_vec({-2.0, 3.5});
        const Mat rot = sampling::random_rotation(rng, 2).matrix();
        const Vec base = eval_euclidean(anchors, w);
        std::vector<Vec> shifted, rotated;
        for (const Vec& a : anchors) {
            shifted.push_back(a + shift);
            rotated.push_back(rot * a);
        }
        CHECK(oracles::rel_err(eval_euclidean(shifted, w), Vec(base + shift)) < 1e-13);
        CHECK(oracles::rel_err(eval_euclidean(rotated, w), Vec(rot * base)) < 1e-13);
    }
}

TEST_CASE("euclidean barycentric solving") {
    const std::vector<Vec> anchors = {make_vec({0.1, 0.2, 0.0}), make_vec({1.0, 0.0, 0.5}),
                                      make_vec({0.0, 1.0, -0.5})};
    SUBCASE("vertices and midpoints") {
        const Vec at_first = solve_euclidean(anchors[0], anchors);
        CHECK(oracles::rel_err(at_first, make_vec({1.0, 0.0, 0.0})) < 1e-12);
        const Vec mid = solve_euclidean(Vec(0.5 * (anchors[0] + anchors[1])),
                                        {anchors[0], anchors[1]});
        CHECK(oracles::rel_err(mid, make_vec({0.5, 0.5})) < 1e-12);
    }
    SUBCASE("round trip recovers canonical weights") {
        std::mt19937_64 rng(61);
        for (int i = 0; i < 50; ++i) {
            Vec w(3);
            for (int k = 0; k < 3; ++k)
                w(k) = sampling::uniform(rng, 0.1, 2.0);
            const Vec p = eval_euclidean(anchors, w);
            const Vec solved = solve_euclidean(p, anchors);
            CHECK(oracles::rel_err(canonical_weights(solved), canonical_weights(w)) < 1e-10);
            CHECK(oracles::rel_err(eval_euclidean(anchors, solved), p) < 1e-12);
        }
    }
    SUBCASE("points off the flat are rejected") {
        const std::vector<Vec> pair = {anchors[0], anchors[1]};
        CHECK_THROWS_AS(solve_euclidean(make_vec({5.0, -3.0, 2.0}), pair), Error);
    }
    SUBCASE("dependent anchors are rejected") {
        const std::vector<Vec> collinear = {make_vec({0.0, 0.0}), make_vec({1.0, 1.0}),
                                            make_vec({2.0, 2.0})};
        CHECK_THROWS_AS(solve_euclidean(make_vec({0.5, 0.5}), collinear), Error);
    }
}

TEST_CASE("gyrobarycentric evaluation") {
    const BallPoint a1 = make_point({0.1, -0.2}, unit2);
    const BallPoint a2 = make_point({0.5, 0.3}, unit2);

    SUBCASE("equal weights give the gyromidpoint with its known constant") {
        const GyroEval eval = eval_gyro({a1, a2}, make_vec({1.0, 1.0}), unit2);
        CHECK(oracles::rel_err(eval.point, gyromidpoint(a1, a2, unit2).coords()) < 1e-13);
        const double g12 = gamma_of_diff(a1, a2, unit2);
        CHECK(std::sqrt(eval.rep.const_sq)
              == doctest::Approx(std::sqrt(2.0) * std::sqrt(g12 + 1.0)).epsilon(1e-12));
        CHECK(classify(eval.rep, unit2) == BallClass::inside);
    }
    SUBCASE("single anchor") {
        const GyroEval eval = eval_gyro({a1}, make_vec({1.0}), unit2);
        CHECK(oracles::rel_err(eval.point, a1.coords()) < 1e-15);
        CHECK(eval.rep.const_sq == doctest::Approx(1.0));
    }
    SUBCASE("the boundary-root weights land on the boundary points") {
        const double g12 = gamma_of_diff(a1, a2, unit2);
        const double root = std::sqrt(g12 * g12 - 1.0);
        const BoundaryPair ends = boundary_points(a1, a2, unit2);

        const GyroEval plus = eval_gyro({a1, a2}, make_vec({g12 + root, -1.0}), unit2);
        CHECK(oracles::rel_err(plus.point, ends.e_a1) < 1e-9);
        CHECK(classify(plus.rep, unit2) == BallClass::boundary);
        CHECK(std::fabs(plus.rep.const_sq) < 1e-10);

        const GyroEval minus = eval_gyro({a1, a2}, make_vec({g12 - root, -1.0}), unit2);
        CHECK(oracles::rel_err(minus.point, ends.e_a2) < 1e-9);
        CHECK(classify(minus.rep, unit2) == BallClass::boundary);
    }
    SUBCASE("vanishing gamma-weight sums are rejected") {
        const double g1 = gamma(a1, unit2), g2 = gamma(a2, unit2);
        CHECK_THROWS_AS(eval_gyro({a1, a2}, make_vec({g2, -g1}), unit2), Error);
    }
    SUBCASE("gamma identities of the represented point") {
        // gamma_P = sum m_k gamma_k / m_P and gamma_P P = sum m_k gamma_k A_k / m_P
        std::mt19937_64 rng(67);
        const SpaceContext ctx(1.0, 3);
        for (int i = 0; i < 30; ++i) {
            AnchorSet anchors = {sampling::point_in_ball(rng, ctx),
                                 sampling::point_in_ball(rng, ctx),
                                 sampling::point_in_ball(rng, ctx)};
            Vec w(3);
            for (int k = 0; k < 3; ++k)
                w(k) = sampling::uniform(rng, 0.2, 1.5);
            const GyroEval eval = eval_gyro(anchors, w, ctx);
            REQUIRE(eval.rep.const_sq > 0.0);
            const double m_p = std::sqrt(eval.rep.const_sq);
            double gamma_sum = 0.0;
            Vec weighted = Vec::Zero(3);
            for (int k = 0; k < 3; ++k) {
                const double g = gamma(anchors[static_cast<std::size_t>(k)], ctx);
                gamma_sum += eval.rep.weights(k) * g;
                weighted += eval.rep.weights(k) * g *
                            anchors[static_cast<std::size_t>(k)].coords();
            }
            const BallPoint p(eval.point, ctx);
            const double gamma_p = gamma(p, ctx);
            CHECK(gamma_p == doctest::Approx(gamma_sum / m_p).epsilon(1e-9));
            CHECK(oracles::rel_err(Vec(gamma_p * p.coords()), Vec(weighted / m_p)) < 1e-9);
        }
    }
}

TEST_CASE("representation constant") {
    const BallPoint a1 = make_point({0.2, 0.1, 0.0}, unit3);
    const BallPoint a2 = make_point({-0.3, 0.4, 0.2}, unit3);
    const double g12 = gamma_of_diff(a1, a2, unit3);

    CHECK(rep_constant_sq({a1, a2}, make_vec({1.0, 1.0}), unit3)
          == doctest::Approx(2.0 * (g12 + 1.0)).epsilon(1e-12));
    CHECK(rep_constant_sq({a1, a2}, make_vec({1.0, -1.0}), unit3)
          == doctest::Approx(-2.0 * (g12 - 1.0)).epsilon(1e-12));
    CHECK(rep_constant_sq({a1}, make_vec({0.7}), unit3) == doctest::Approx(0.49));

    SUBCASE("homogeneity: weights scale, point fixed, constant scales by lambda^2") {
        const Vec w = make_vec({0.8, 1.7});
        const double lambda = -2.5;
        const GyroEval base = eval_gyro({a1, a2}, w, unit3);
        const GyroEval scaled = eval_gyro({a1, a2}, Vec(lambda * w), unit3);
        CHECK(oracles::rel_err(base.point, scaled.point) < 1e-13);
        CHECK(rep_constant_sq({a1, a2}, Vec(lambda * w), unit3)
              == doctest::Approx(lambda * lambda * rep_constant_sq({a1, a2}, w, unit3))
                     .epsilon(1e-12));
        // canonical reps coincide entirely
        CHECK(oracles::rel_err(base.rep.weights, scaled.rep.weights) < 1e-15);
    }
}

TEST_CASE("opposite unit weights on distinct anchors land outside") {
    const BallPoint a1 = make_point({0.1, 0.0, 0.0}, unit3);
    const BallPoint a2 = make_point({0.5, 0.2, 0.0}, unit3);
    const GyroEval eval = eval_gyro({a1, a2}, make_vec({1.0, -1.0}), unit3);
    CHECK(classify(eval.rep, unit3) == BallClass::outside);
    CHECK(eval.point.norm() > unit3.s);
}

TEST_CASE("classification against direct norm comparison") {
    std::mt19937_64 rng(62);
    int compared = 0;
    for (int i = 0; i < 300; ++i) {
        const AnchorSet anchors = random_anchors(rng, unit3, 3);
        Vec w(3);
        for (int k = 0; k < 3; ++k)
            w(k) = sampling::uniform(rng, -1.5, 2.0);
        GyroEval eval;
        try {
            eval = eval_gyro(anchors, w, unit3);
        } catch (const Error&) {
            continue;
        }
        const double band = 10.0 * 1e-10 * std::pow(eval.rep.weights.cwiseAbs().sum(), 2);
        if (std::fabs(eval.rep.const_sq) <= band)
            continue;  // boundary band: the sign is no longer meaningful
        const BallClass by_const = classify(eval.rep, unit3);
        const BallClass by_norm =
            eval.point.norm() < unit3.s ? BallClass::inside : BallClass::outside;
        CHECK(by_const == by_norm);
        ++compared;
    }
    CHECK(compared > 100);
}

TEST_CASE("gyrobarycentric solving") {
    std::mt19937_64 rng(63);

    SUBCASE("midpoint solves to equal weights") {
        const BallPoint a1 = make_point({0.3, 0.2, -0.1}, unit3);
        const BallPoint a2 = make_point({-0.4, 0.3, 0.3}, unit3);
        const GyrobarycentricRep rep =
            solve_gyro(gyromidpoint(a1, a2, unit3), {a1, a2}, unit3);
        CHECK(oracles::rel_err(rep.weights, make_vec({1.0, 1.0})) < 1e-10);
    }
    SUBCASE("an anchor solves to a unit vertex weight") {
        const AnchorSet anchors = random_anchors(rng, unit3, 3);
        const GyrobarycentricRep rep = solve_gyro(anchors[1], anchors, unit3);
        CHECK(oracles::rel_err(rep.weights, make_vec({0.0, 1.0, 0.0})) < 1e-10);
    }
    SUBCASE("eval then solve round-trips to the same canonical weights") {
        for (int i = 0; i < 50; ++i) {
            const int count = 2 + static_cast<int>(sampling::uniform(rng, 0.0, 2.999));
            const AnchorSet anchors = random_anchors(rng, unit3, count);
            Vec w(count);
            for (int k = 0; k < count; ++k)
                w(k) = sampling::uniform(rng, 0.1, 2.0);
            const GyroEval eval = eval_gyro(anchors, w, unit3);
            const BallPoint p(eval.point, unit3);
            const GyrobarycentricRep solved = solve_gyro(p, anchors, unit3);
            CHECK(oracles::rel_err(solved.weights, eval.rep.weights) < 1e-8);
            // and independence of the base anchor
            const GyrobarycentricRep alt = solve_gyro(p, anchors, unit3, count - 1);
            CHECK(oracles::rel_err(alt.weights, solved.weights) < 1e-8);
        }
    }
    SUBCASE("points off the gyroflat are rejected") {
        const BallPoint a1 = make_point({0.3, 0.0, 0.0}, unit3);
        const BallPoint a2 = make_point({-0.2, 0.4, 0.0}, unit3);
        CHECK_THROWS_AS(solve_gyro(make_point({0.1, 0.1, 0.5}, unit3), {a1, a2}, unit3),
                        Error);
    }
    SUBCASE("dependent anchors are rejected") {
        const BallPoint a1 = make_point({0.1, 0.0, 0.0}, unit3);
        const BallPoint a2 = make_point({0.3, 0.0, 0.0}, unit3);
        const BallPoint a3 = make_point({0.5, 0.0, 0.0}, unit3);
        CHECK(!gyro_independent({a1, a2, a3}, unit3));
        CHECK_THROWS_AS(solve_gyro(a2, {a1, a2, a3}, unit3), Error);
    }
}

TEST_CASE("gyroconvex span identity and interior characterization") {
    std::mt19937_64 rng(64);
    SUBCASE("gyrovector span form holds for any translation base") {
        for (int i = 0; i < 30; ++i) {
            const AnchorSet anchors = random_anchors(rng, unit3, 3);
            Vec w(3);
            for (int k = 0; k < 3; ++k)
                w(k) = sampling::uniform(rng, 0.2, 1.5);
            const GyroEval eval = eval_gyro(anchors, w, unit3);
            const BallPoint a0 = sampling::point_in_ball(rng, unit3);

            double denom = 0.0;
            Vec numer = Vec::Zero(3);
            for (int k = 0; k < 3; ++k) {
                const BallPoint d = gyrovector(a0, anchors[static_cast<std::size_t>(k)], unit3);
                const double g = gamma(d, unit3);
                numer += w(k) * g * d.coords();
                denom += w(k) * g;
            }
            const Vec lhs = gyrovector(a0, eval.point, unit3);
            CHECK(oracles::rel_err(lhs, Vec(numer / denom)) < 1e-10);
        }
    }
    SUBCASE("positive weights put the point between two anchors") {
        for (int i = 0; i < 30; ++i) {
            const AnchorSet anchors = random_anchors(rng, unit3, 2);
            Vec w(2);
            w(0) = sampling::uniform(rng, 0.2, 2.0);
            w(1) = sampling::uniform(rng, 0.2, 2.0);
            const GyroEval eval = eval_gyro(anchors, w, unit3);
            CHECK(classify(eval.rep, unit3) == BallClass::inside);
            const BallPoint p(eval.point, unit3);
            const double through = scalar_norm_add(gyrodistance(anchors[0], p, unit3),
                                                   gyrodistance(p, anchors[1], unit3), unit3);
            CHECK(through
                  == doctest::Approx(gyrodistance(anchors[0], anchors[1], unit3))
                         .epsilon(1e-9));
        }
    }
}

TEST_CASE("representation transforms gyrocovariantly") {
    std::mt19937_64 rng(65);
    const AnchorSet anchors = random_anchors(rng, unit3, 3);
    const Vec w = make_vec({1.0, 0.6, 0.4});
    const GyroEval eval = eval_gyro(anchors, w, unit3);

    SUBCASE("identity motion keeps everything") {
        const GyrobarycentricRep moved =
            transform_rep(GyroMotion::identity(unit3), eval.rep, unit3);
        CHECK(oracles::rel_err(moved.weights, eval.rep.weights) == 0.0);
        CHECK(moved.const_sq == doctest::Approx(eval.rep.const_sq).epsilon(1e-12));
    }
    SUBCASE("evaluation commutes with motions and the constant is invariant") {
        for (int i = 0; i < 100; ++i) {
            const GyroMotion m = sampling::random_gyromotion(rng, unit3);
            const GyrobarycentricRep moved = transform_rep(m, eval.rep, unit3);
            CHECK(moved.weights == eval.rep.weights);  // bit identical
            CHECK(std::fabs(moved.const_sq - eval.rep.const_sq)
                  <= 1e-10 * std::fabs(eval.rep.const_sq));

            const GyroEval moved_eval = eval_gyro(moved.anchors, moved.weights, unit3);
            const Vec expected =
                apply_gyromotion(m, BallPoint(eval.point, unit3), unit3).coords();
            CHECK(oracles::rel_err(moved_eval.point, expected) < 1e-9);
        }
    }
}

TEST_CASE("uniqueness via canonicalization") {
    std::mt19937_64 rng(66);
    const AnchorSet anchors = random_anchors(rng, unit3, 4);
    Vec w(4);
    for (int k = 0; k < 4; ++k)
        w(k) = sampling::uniform(rng, 0.2, 1.2);
    const GyroEval e1 = eval_gyro(anchors, w, unit3);
    const GyroEval e2 = eval_gyro(anchors, Vec(-3.7 * w), unit3);
    CHECK(oracles::rel_err(e1.rep.weights, e2.rep.weights) < 1e-14);
    const GyrobarycentricRep solved = solve_gyro(BallPoint(e1.point, unit3), anchors, unit3);
    CHECK(oracles::rel_err(solved.weights, e1.rep.weights) < 1e-8);
}

TEST_CASE("gyrobarycentric weights approach euclidean weights for large s") {
    const std::vector<Vec> raw = {make_vec({10.0, 0.0, 0.0}), make_vec({0.0, 20.0, 0.0}),
                                  make_vec({0.0, 0.0, 15.0}), make_vec({-12.0, 5.0, 4.0})};
    const Vec w = make_vec({0.4, 0.3, 0.2, 0.1});
    const Vec p_euclidean = eval_euclidean(raw, w);
    const Vec expected = canonical_weights(solve_euclidean(p_euclidean, raw));

    std::vector<double> radii, errors;
    for (int k = 3; k <= 8; ++k) {
        const double s = std::pow(10.0, k);
        const SpaceContext ctx(s, 3);
        AnchorSet anchors;
        for (const Vec& a : raw)
            anchors.emplace_back(a, ctx);
        const GyrobarycentricRep rep = solve_gyro(BallPoint(p_euclidean, ctx), anchors, ctx);
        radii.push_back(s);
        errors.push_back((rep.weights - expected).norm());
    }
    CHECK(oracles::fit_loglog_order(radii, errors) >= 1.9);
}
