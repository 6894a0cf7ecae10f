// gyrovec: command-line front end for the Einstein gyrovector space library.
//
// Subcommands wrap the library operations one to one; all results go to
// stdout as single-line JSON with the inputs echoed. Exit codes: 0 success,
// 1 property-suite failure, 2 usage or domain error.

#include "gyrovec/ball.hpp"
#include "gyrovec/barycentric.hpp"
#include "gyrovec/checks.hpp"
#include "gyrovec/gyration.hpp"
#include "gyrovec/io.hpp"
#include "gyrovec/relativity.hpp"
#include "gyrovec/space.hpp"
#include "gyrovec/svg.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace io = gyrovec::io;

using gyrovec::BallPoint;
using gyrovec::Error;
using gyrovec::SpaceContext;
using gyrovec::Vec;
using nlohmann::json;

Vec parse_vector(const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error("parse", "cannot parse vector component '" + token + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (values.empty())
        throw Error("parse", "empty vector");
    Vec v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = values[i];
    return v;
}

json vec_json(const Vec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back(v(i) == 0.0 ? 0.0 : v(i));  // fold -0.0
    return arr;
}

json mat_json(const gyrovec::Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

const char* class_name(gyrovec::BallClass c) {
    switch (c) {
        case gyrovec::BallClass::inside: return "inside";
        case gyrovec::BallClass::boundary: return "boundary";
        case gyrovec::BallClass::outside: return "outside";
    }
    return "unknown";
}

SpaceContext context_for(double s, const Vec& reference, std::optional<int> dim) {
    const int n = dim.value_or(static_cast<int>(reference.size()));
    return SpaceContext(s, n);
}

struct VectorArgs {
    double s = 1.0;
    std::optional<int> dim;
    std::string first;
    std::string second;
    std::string extra;
    double r = 0.0;
};

int run_check(const std::string& suite, const gyrovec::checks::SuiteOptions& options) {
    std::vector<gyrovec::checks::SuiteReport> reports;
    if (suite == "all")
        reports = gyrovec::checks::run_all_suites(options);
    else if (suite == "gyrogroup")
        reports = {gyrovec::checks::run_gyrogroup_suite(options)};
    else if (suite == "gyrovector")
        reports = {gyrovec::checks::run_gyrovector_suite(options)};
    else if (suite == "motions")
        reports = {gyrovec::checks::run_motions_suite(options)};
    else if (suite == "covariance")
        reports = {gyrovec::checks::run_covariance_suite(options)};
    else
        throw Error("usage", "unknown suite '" + suite + "'");

    bool all_passed = true;
    for (const auto& report : reports) {
        std::cout << gyrovec::checks::format_table(report);
        all_passed = all_passed && report.passed();
    }
    std::cout << (all_passed ? "PASS" : "FAIL") << "\n";
    return all_passed ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Einstein gyrovector spaces: ball arithmetic, gyrations, gyrolines, "
                 "Lorentz boosts, invariant mass and gyrobarycentric coordinates"};
    app.require_subcommand(1);

    VectorArgs args;
    std::string json_path;
    std::string out_path;
    std::string mode = "eval";
    std::string suite = "all";
    gyrovec::checks::SuiteOptions suite_options;
    bool want_matrix = false;

    auto* add = app.add_subcommand("add", "Einstein addition u (+) v");
    add->add_option("--s", args.s, "ball radius")->capture_default_str();
    add->add_option("--dim", args.dim, "dimension override");
    add->add_option("--u", args.first, "left operand (inside the ball)")->required();
    add->add_option("--v", args.second, "right operand (any ambient vector)")->required();

    auto* gyr = app.add_subcommand("gyr", "apply gyr[u, v] to w");
    gyr->add_option("--s", args.s, "ball radius")->capture_default_str();
    gyr->add_option("--dim", args.dim, "dimension override");
    gyr->add_option("--u", args.first, "first generator")->required();
    gyr->add_option("--v", args.second, "second generator")->required();
    gyr->add_option("--w", args.extra, "vector to rotate")->required();
    gyr->add_flag("--matrix", want_matrix, "also emit the gyration matrix");

    auto* mul = app.add_subcommand("mul", "Einstein scalar multiplication r (x) v");
    mul->add_option("--s", args.s, "ball radius")->capture_default_str();
    mul->add_option("--dim", args.dim, "dimension override");
    mul->add_option("--r", args.r, "scalar")->required();
    mul->add_option("--v", args.first, "ball point")->required();

    auto* dist = app.add_subcommand("dist", "gyrodistance between two ball points");
    dist->add_option("--s", args.s, "ball radius")->capture_default_str();
    dist->add_option("--dim", args.dim, "dimension override");
    dist->add_option("--a", args.first, "first point")->required();
    dist->add_option("--b", args.second, "second point")->required();

    auto* midpoint = app.add_subcommand("midpoint", "gyromidpoint of a gyrosegment");
    midpoint->add_option("--s", args.s, "ball radius")->capture_default_str();
    midpoint->add_option("--dim", args.dim, "dimension override");
    midpoint->add_option("--a", args.first, "first endpoint")->required();
    midpoint->add_option("--b", args.second, "second endpoint")->required();

    auto* boundary = app.add_subcommand("boundary", "boundary points of a gyroline");
    boundary->add_option("--s", args.s, "ball radius")->capture_default_str();
    boundary->add_option("--dim", args.dim, "dimension override");
    boundary->add_option("--a", args.first, "first point")->required();
    boundary->add_option("--b", args.second, "second point")->required();

    auto* commass = app.add_subcommand(
        "commass", "resultant invariant mass and center of momentum of a particle system");
    commass->add_option("--json", json_path, "ParticleSystem JSON file")->required();

    auto* bary = app.add_subcommand("bary", "gyrobarycentric evaluate / solve / classify");
    bary->add_option("--json", json_path, "PointSet JSON file")->required();
    bary->add_option("--mode", mode, "eval | solve | classify")->capture_default_str();

    auto* check = app.add_subcommand("check", "run a property suite");
    check->add_option("suite", suite, "gyrogroup | gyrovector | motions | covariance | all")
        ->capture_default_str();
    check->add_option("--seed", suite_options.seed, "RNG seed")->capture_default_str();
    check->add_option("--count", suite_options.count, "samples per law")
        ->capture_default_str();
    check->add_option("--dim", suite_options.dim, "dimension")->capture_default_str();
    check->add_option("--s", suite_options.s, "ball radius")->capture_default_str();
    check->add_option("--tol", suite_options.tolerance, "residual tolerance")
        ->capture_default_str();
    check->add_flag("--mutate-gyr-sign", suite_options.mutate_gyr_sign,
                    "checker self-test: flip a sign inside the gyration and expect failure");

    auto* plot = app.add_subcommand("plot", "render a 2D point set as a Klein disk SVG");
    plot->add_option("--json", json_path, "PointSet JSON file")->required();
    plot->add_option("--out", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit({{"error", {{"code", "usage"}, {"message", e.what()}}}});
        return 2;
    }

    if (add->parsed()) {
        const Vec u = parse_vector(args.first);
        const Vec v = parse_vector(args.second);
        const SpaceContext ctx = context_for(args.s, u, args.dim);
        const Vec result = einstein_add(BallPoint(u, ctx), v, ctx);
        emit({{"op", "add"},
              {"s", ctx.s},
              {"dim", ctx.dim},
              {"u", vec_json(u)},
              {"v", vec_json(v)},
              {"result", vec_json(result)}});
        return 0;
    }
    if (gyr->parsed()) {
        const Vec u = parse_vector(args.first);
        const Vec v = parse_vector(args.second);
        const Vec w = parse_vector(args.extra);
        const SpaceContext ctx = context_for(args.s, u, args.dim);
        const gyrovec::Gyration p{BallPoint(u, ctx), BallPoint(v, ctx)};
        json out = {{"op", "gyr"},      {"s", ctx.s},        {"dim", ctx.dim},
                    {"u", vec_json(u)}, {"v", vec_json(v)},  {"w", vec_json(w)},
                    {"result", vec_json(gyr_apply(p, w, ctx))}};
        if (want_matrix)
            out["matrix"] = mat_json(gyr_matrix(p, ctx).matrix());
        emit(out);
        return 0;
    }
    if (mul->parsed()) {
        const Vec v = parse_vector(args.first);
        const SpaceContext ctx = context_for(args.s, v, args.dim);
        const BallPoint result = gyrovec::scalar_mul(args.r, BallPoint(v, ctx), ctx);
        emit({{"op", "mul"},
              {"s", ctx.s},
              {"dim", ctx.dim},
              {"r", args.r},
              {"v", vec_json(v)},
              {"result", vec_json(result.coords())}});
        return 0;
    }
    if (dist->parsed()) {
        const Vec a = parse_vector(args.first);
        const Vec b = parse_vector(args.second);
        const SpaceContext ctx = context_for(args.s, a, args.dim);
        emit({{"op", "dist"},
              {"s", ctx.s},
              {"dim", ctx.dim},
              {"a", vec_json(a)},
              {"b", vec_json(b)},
              {"result", gyrovec::gyrodistance(BallPoint(a, ctx), BallPoint(b, ctx), ctx)}});
        return 0;
    }
    if (midpoint->parsed()) {
        const Vec a = parse_vector(args.first);
        const Vec b = parse_vector(args.second);
        const SpaceContext ctx = context_for(args.s, a, args.dim);
        const BallPoint m = gyrovec::gyromidpoint(BallPoint(a, ctx), BallPoint(b, ctx), ctx);
        emit({{"op", "midpoint"},
              {"s", ctx.s},
              {"dim", ctx.dim},
              {"a", vec_json(a)},
              {"b", vec_json(b)},
              {"result", vec_json(m.coords())}});
        return 0;
    }
    if (boundary->parsed()) {
        const Vec a = parse_vector(args.first);
        const Vec b = parse_vector(args.second);
        const SpaceContext ctx = context_for(args.s, a, args.dim);
        const gyrovec::BoundaryPair ends =
            gyrovec::boundary_points(BallPoint(a, ctx), BallPoint(b, ctx), ctx);
        emit({{"op", "boundary"},
              {"s", ctx.s},
              {"dim", ctx.dim},
              {"a", vec_json(a)},
              {"b", vec_json(b)},
              {"e_a1", vec_json(ends.e_a1)},
              {"e_a2", vec_json(ends.e_a2)}});
        return 0;
    }
    if (commass->parsed()) {
        const io::ParticleSystemFile file =
            gyrovec::io::parse_particle_system(gyrovec::io::read_file(json_path));
        const SpaceContext ctx = file.context();
        const auto particles = file.particles(ctx);
        const gyrovec::SystemResult r = gyrovec::resultant_invariant_mass(particles, ctx);

        gyrovec::FourVector total{0.0, Vec(Vec::Zero(ctx.dim))};
        for (const auto& p : particles)
            total = total + gyrovec::four_momentum(p, ctx);

        std::vector<gyrovec::NewtonianParticle> classical;
        for (const auto& p : particles)
            classical.push_back({p.m, p.v.coords()});
        const gyrovec::NewtonianResult newton = gyrovec::newtonian_resultant(classical);

        json out = {{"op", "commass"},
                    {"s", ctx.s},
                    {"dim", ctx.dim},
                    {"particles", particles.size()},
                    {"m0_sq", r.m0_sq},
                    {"m0", r.m0 ? json(*r.m0) : json(nullptr)},
                    {"v0", vec_json(r.v0)},
                    {"gamma_v0_sq", r.gamma_v0.gamma_sq},
                    {"gamma_v0", r.gamma_v0.is_real() ? json(r.gamma_v0.gamma())
                                                      : json(nullptr)},
                    {"classification", class_name(r.classification)},
                    {"relativistic_mass", r.relativistic_mass},
                    {"newtonian",
                     {{"m0", newton.m0}, {"v0", vec_json(newton.v0)}}}};
        if (r.classification == gyrovec::BallClass::inside) {
            const BallPoint neg_v0(Vec(-r.v0), ctx);
            const gyrovec::FourVector rest = gyrovec::boost_apply(neg_v0, total, ctx);
            out["boost_residual"] = rest.x.norm();
        } else {
            out["boost_residual"] = nullptr;
        }
        emit(out);
        return 0;
    }
    if (bary->parsed()) {
        const io::PointSetFile file =
            gyrovec::io::parse_point_set(gyrovec::io::read_file(json_path));
        const SpaceContext ctx = file.context();
        const gyrovec::AnchorSet anchors = file.anchor_points(ctx);
        json out = {{"op", "bary"}, {"mode", mode}, {"s", ctx.s}, {"dim", ctx.dim}};

        if (mode == "eval" || mode == "classify") {
            if (!file.weights)
                throw Error("usage", "mode '" + mode + "' needs weights in the point set");
            const gyrovec::GyroEval eval = gyrovec::eval_gyro(anchors, *file.weights, ctx);
            out["weights"] = vec_json(*file.weights);
            out["canonical_weights"] = vec_json(eval.rep.weights);
            out["P"] = vec_json(eval.point);
            out["const_sq"] = eval.rep.const_sq;
            out["classification"] = class_name(gyrovec::classify(eval.rep, ctx));
        } else if (mode == "solve") {
            if (!file.query)
                throw Error("usage", "mode 'solve' needs a query point in the point set");
            const BallPoint p(*file.query, ctx);
            const gyrovec::GyrobarycentricRep rep = gyrovec::solve_gyro(p, anchors, ctx);
            const gyrovec::GyroEval round = gyrovec::eval_gyro(anchors, rep.weights, ctx);
            out["weights"] = vec_json(rep.weights);
            out["const_sq"] = rep.const_sq;
            out["classification"] = class_name(gyrovec::classify(rep, ctx));
            out["residual"] = (round.point - *file.query).norm();
        } else {
            throw Error("usage", "unknown mode '" + mode + "'");
        }
        emit(out);
        return 0;
    }
    if (check->parsed())
        return run_check(suite, suite_options);
    if (plot->parsed()) {
        const io::PointSetFile file =
            gyrovec::io::parse_point_set(gyrovec::io::read_file(json_path));
        const std::string svg = gyrovec::io::render_klein_svg(file);
        gyrovec::io::write_file(out_path, svg);
        emit({{"op", "plot"}, {"out", out_path}, {"bytes", svg.size()}});
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const Error& e) {
        emit({{"error", {{"code", e.code()}, {"message", e.what()}}}});
        return 2;
    } catch (const std::exception& e) {
        emit({{"error", {{"code", "internal"}, {"message", e.what()}}}});
        return 2;
    }
}
