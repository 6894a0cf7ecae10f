#include "gyrovec/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace gyrovec::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error("parse", "input is not valid JSON");
    return j;
}

Vec to_vec(const json& j, int dim, const char* what) {
    if (!j.is_array())
        throw Error("parse", std::string(what) + " must be an array of numbers");
    if (dim >= 0 && static_cast<int>(j.size()) != dim)
        throw Error("parse", std::string(what) + " has wrong dimension");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw Error("parse", std::string(what) + " must contain numbers only");
        v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    }
    return v;
}

json from_vec(const Vec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back(v(i));
    return arr;
}

}  // namespace

std::vector<Particle> ParticleSystemFile::particles(const SpaceContext& ctx) const {
    std::vector<Particle> out;
    out.reserve(masses.size());
    for (std::size_t k = 0; k < masses.size(); ++k)
        out.push_back({masses[k], BallPoint(velocities[k], ctx)});
    return out;
}

ParticleSystemFile parse_particle_system(const std::string& text) {
    const json j = parse_json(text);
    ParticleSystemFile file;
    if (!j.is_object() || !j.contains("particles"))
        throw Error("parse", "particle system needs a \"particles\" array");
    file.s = j.value("s", 1.0);
    if (j.contains("dim"))
        file.dim = j["dim"].get<int>();
    else if (!j["particles"].empty())
        file.dim = static_cast<int>(j["particles"][0].value("v", json::array()).size());
    for (const auto& p : j["particles"]) {
        if (!p.contains("m") || !p.contains("v"))
            throw Error("parse", "each particle needs \"m\" and \"v\"");
        file.masses.push_back(p["m"].get<double>());
        file.velocities.push_back(to_vec(p["v"], file.dim, "particle velocity"));
    }
    return file;
}

std::string serialize(const ParticleSystemFile& file) {
    json j;
    j["s"] = file.s;
    j["dim"] = file.dim;
    j["particles"] = json::array();
    for (std::size_t k = 0; k < file.masses.size(); ++k)
        j["particles"].push_back({{"m", file.masses[k]}, {"v", from_vec(file.velocities[k])}});
    return j.dump();
}

AnchorSet PointSetFile::anchor_points(const SpaceContext& ctx) const {
    AnchorSet out;
    out.reserve(anchors.size());
    for (const Vec& a : anchors)
        out.emplace_back(a, ctx);
    return out;
}

PointSetFile parse_point_set(const std::string& text) {
    const json j = parse_json(text);
    PointSetFile file;
    if (!j.is_object())
        throw Error("parse", "point set must be a JSON object");
    file.s = j.value("s", 1.0);
    if (j.contains("dim"))
        file.dim = j["dim"].get<int>();
    else if (j.contains("anchors") && !j["anchors"].empty())
        file.dim = static_cast<int>(j["anchors"][0].size());
    if (j.contains("anchors"))
        for (const auto& a : j["anchors"])
            file.anchors.push_back(to_vec(a, file.dim, "anchor"));
    if (j.contains("weights")) {
        file.weights = to_vec(j["weights"], -1, "weights");
        if (file.weights->size() != static_cast<Eigen::Index>(file.anchors.size()))
            throw Error("parse", "weight count does not match anchor count");
    }
    if (j.contains("query"))
        file.query = to_vec(j["query"], file.dim, "query");
    return file;
}

std::string serialize(const PointSetFile& file) {
    json j;
    j["s"] = file.s;
    j["dim"] = file.dim;
    j["anchors"] = json::array();
    for (const Vec& a : file.anchors)
        j["anchors"].push_back(from_vec(a));
    if (file.weights)
        j["weights"] = from_vec(*file.weights);
    if (file.query)
        j["query"] = from_vec(*file.query);
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("parse", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("usage", "cannot write file: " + path);
    out << content;
}

}  // namespace gyrovec::io
