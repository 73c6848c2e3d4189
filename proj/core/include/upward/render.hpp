#pragma once

#include <string>

#include "upward/geometry.hpp"

namespace upward {

struct RenderOptions {
    bool show_ids = false;
    bool show_polarization_labels = false; // in/out indices 1..k and 1..l per vertex
};

// Deterministic SVG 1.1 text for a drawing, valid or not. Stored
// coordinates are mathematical (y up); the renderer flips y for screen
// space. Arrowheads sit at the midpoint of each edge's middle segment.
// Violations of an invalid drawing are marked with a distinct class.
std::string render_svg(const Drawing& d, const RenderOptions& options = {});

} // namespace upward
