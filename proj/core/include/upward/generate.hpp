#pragma once

#include <cstdint>

#include "upward/geometry.hpp"

namespace upward {

// Seeded random upward planar drawings for property suites and fixtures.
// Vertices land on integer points with pairwise distinct y coordinates;
// edges are straight lines from the higher to the lower endpoint, accepted
// only when they touch nothing already drawn. Upwardness and acyclicity are
// automatic, so every output validates.
struct GeneratorConfig {
    std::size_t vertex_count = 1;      // n >= 1
    std::size_t target_edge_count = 0; // m >= 0; fewer may be achieved
    std::uint64_t seed = 0;
    std::size_t max_attempts = 200;    // per edge
    long coord_min = -16;
    long coord_max = 16;
};

struct GenerateResult {
    Drawing drawing;
    std::size_t achieved_edges = 0;
};

// Deterministic in (config, seed): equal configs give byte-identical
// serialized drawings. Throws DomainError on unsatisfiable configs (fewer
// distinct y values in range than vertices).
GenerateResult generate(const GeneratorConfig& config);

} // namespace upward
