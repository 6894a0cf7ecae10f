#pragma once

#include "gyrovec/barycentric.hpp"
#include "gyrovec/relativity.hpp"
#include "gyrovec/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gyrovec::io {

/// On-disk particle system:
///   {"s": 1.0, "dim": 3, "particles": [{"m": 2.0, "v": [0.1, 0.2, 0.3]}, ...]}
struct ParticleSystemFile {
    double s = 1.0;
    int dim = 3;
    std::vector<double> masses;
    std::vector<Vec> velocities;

    SpaceContext context() const { return SpaceContext(s, dim); }
    std::vector<Particle> particles(const SpaceContext& ctx) const;
};

ParticleSystemFile parse_particle_system(const std::string& text);
std::string serialize(const ParticleSystemFile& file);

/// On-disk point set for barycentric work and plotting:
///   {"s": 1.0, "dim": 2, "anchors": [[...], ...],
///    "weights": [...], "query": [...]}    (weights, query optional)
struct PointSetFile {
    double s = 1.0;
    int dim = 2;
    std::vector<Vec> anchors;
    std::optional<Vec> weights;
    std::optional<Vec> query;

    SpaceContext context() const { return SpaceContext(s, dim); }
    AnchorSet anchor_points(const SpaceContext& ctx) const;
};

PointSetFile parse_point_set(const std::string& text);
std::string serialize(const PointSetFile& file);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gyrovec::io
