#pragma once

#include "gyrovec/barycentric.hpp"
#include "gyrovec/gyration.hpp"
#include "gyrovec/motions.hpp"
#include "gyrovec/types.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gyrovec::checks {

/// Outcome of one law over a sample set. `pass_below_limit` is false for
/// detector laws (a known counterexample must produce a LARGE residual).
struct LawResult {
    std::string law;
    double residual = 0.0;
    double limit = 0.0;
    bool pass_below_limit = true;
    bool passed = true;
    std::size_t samples = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<LawResult> laws;

    bool passed() const;
    double worst_residual() const;
};

/// Fixed-size text table of a report; stable formatting for golden output.
std::string format_table(const SuiteReport& report);

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 200;
    int dim = 3;
    double s = 1.0;
    double tolerance = 1e-9;
    /// Checker self-test: route the suites through a gyration with one sign
    /// flipped, which must make the gyration-dependent laws fail.
    bool mutate_gyr_sign = false;
};

/// Gyration evaluation hook; the default is gyr_apply.
using GyrApplyFn = std::function<Vec(const Gyration&, const Vec&, const SpaceContext&)>;

/// Deliberately wrong gyration (the B coefficient enters with the opposite
/// sign). Exists so the suites can prove they detect violations.
Vec broken_gyr_apply(const Gyration& p, const Vec& w, const SpaceContext& ctx);

/// Gyrogroup laws G1-G6 plus the reduction, even, inversion, automorphic
/// inverse and left cancellation laws, each reported with its worst residual
/// over the given triples.
SuiteReport check_gyrogroup_axioms(const std::vector<std::array<BallPoint, 3>>& triples,
                                   const SpaceContext& ctx, double tolerance = 1e-9,
                                   const GyrApplyFn& gyr = {});

SuiteReport run_gyrogroup_suite(const SuiteOptions& options);

/// Gyrovector space axioms V1-V10 (inner-product gyroinvariance, scalar
/// distributive/associative laws, scaling, homogeneity, gyrotriangle
/// inequality, one-dimensional vector structure of the norms).
SuiteReport run_gyrovector_suite(const SuiteOptions& options);

/// Group structure of the gyromotions: composition against sequential
/// application, identity, inverses, associativity, rotation respecting
/// Einstein addition, and the left gyrotranslation theorem.
SuiteReport run_motions_suite(const SuiteOptions& options);

/// Gyrocovariance of gyromidpoint, gyroline points and gyrobarycentric
/// evaluation, plus the Euclidean-midpoint counterexample, which must be
/// flagged as NOT gyrocovariant.
SuiteReport run_covariance_suite(const SuiteOptions& options);

/// All four suites in order.
std::vector<SuiteReport> run_all_suites(const SuiteOptions& options);

}  // namespace gyrovec::checks
