#include "gyrovec/svg.hpp"

#include "gyrovec/space.hpp"

#include <cstdio>
#include <string>

namespace gyrovec::io {

namespace {

std::string num(double x) {
    char buf[32];
    // Fixed precision keeps the document byte-stable; -0.000000 is folded.
    std::snprintf(buf, sizeof(buf), "%.6f", x == 0.0 ? 0.0 : x);
    if (std::string(buf) == "-0.000000")
        return "0.000000";
    return buf;
}

}  // namespace

std::string render_klein_svg(const PointSetFile& file) {
    if (file.dim != 2)
        throw Error("dimension_mismatch", "Klein disk plots are two-dimensional");
    const SpaceContext ctx = file.context();
    const AnchorSet anchors = file.anchor_points(ctx);

    // Everything is drawn in disk units (coordinates divided by s), with the
    // y axis flipped into SVG screen orientation.
    auto px = [&](const Vec& v) { return num(v(0) / ctx.s); };
    auto py = [&](const Vec& v) { return num(-v(1) / ctx.s); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.15 -1.15 2.3 2.3\" "
           "width=\"640\" height=\"640\">\n";
    out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"0.008\"/>\n";

    for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
        const BallPoint& a = anchors[k];
        const BallPoint& b = anchors[k + 1];
        if (gyrodistance(a, b, ctx) <= ctx.abs_tol)
            continue;
        const BoundaryPair ends = boundary_points(a, b, ctx);
        out += "<line x1=\"" + px(ends.e_a1) + "\" y1=\"" + py(ends.e_a1) + "\" x2=\"" +
               px(ends.e_a2) + "\" y2=\"" + py(ends.e_a2) +
               "\" stroke=\"steelblue\" stroke-width=\"0.006\"/>\n";
        for (const Vec* e : {&ends.e_a1, &ends.e_a2})
            out += "<circle cx=\"" + px(*e) + "\" cy=\"" + py(*e) +
                   "\" r=\"0.014\" fill=\"steelblue\"/>\n";
        const BallPoint mid = gyromidpoint(a, b, ctx);
        out += "<circle cx=\"" + px(mid.coords()) + "\" cy=\"" + py(mid.coords()) +
               "\" r=\"0.012\" fill=\"seagreen\"/>\n";
    }

    for (std::size_t k = 0; k < anchors.size(); ++k) {
        const Vec& a = anchors[k].coords();
        out += "<circle cx=\"" + px(a) + "\" cy=\"" + py(a) +
               "\" r=\"0.016\" fill=\"black\"/>\n";
        out += "<text x=\"" + num(a(0) / ctx.s + 0.03) + "\" y=\"" + num(-a(1) / ctx.s - 0.03) +
               "\" font-family=\"sans-serif\" font-size=\"0.07\">A" + std::to_string(k + 1) +
               "</text>\n";
    }

    if (file.weights && !anchors.empty()) {
        const GyroEval eval = eval_gyro(anchors, *file.weights, ctx);
        out += "<circle cx=\"" + px(eval.point) + "\" cy=\"" + py(eval.point) +
               "\" r=\"0.014\" fill=\"crimson\"/>\n";
        out += "<text x=\"" + num(eval.point(0) / ctx.s + 0.03) + "\" y=\"" +
               num(-eval.point(1) / ctx.s - 0.03) +
               "\" font-family=\"sans-serif\" font-size=\"0.07\" fill=\"crimson\">P</text>\n";
    }

    if (file.query) {
        const Vec& q = *file.query;
        out += "<circle cx=\"" + px(q) + "\" cy=\"" + py(q) +
               "\" r=\"0.014\" fill=\"none\" stroke=\"darkorange\" stroke-width=\"0.008\"/>\n";
        out += "<text x=\"" + num(q(0) / ctx.s + 0.03) + "\" y=\"" + num(-q(1) / ctx.s - 0.03) +
               "\" font-family=\"sans-serif\" font-size=\"0.07\" "
               "fill=\"darkorange\">Q</text>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace gyrovec::io
