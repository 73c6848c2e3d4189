#pragma once

#include <string>
#include <utility>

#include "upward/embedding.hpp"
#include "upward/geometry.hpp"
#include "upward/graph.hpp"

namespace upward {

// A drawing of the NP-extended graph together with the mapping that
// produced it. Restricting the drawing to the original graph reproduces the
// input exactly; every stub is a single vertical segment (entering a source
// from directly above, leaving a sink directly below).
struct ExtendedDrawing {
    Drawing drawing;
    ExtensionMapping mapping;
    Rat stub_scale;
};

// Geometric NP-extension: for each non-leaf source at (x, y) a leaf at
// (x, y + h) joined by a vertical stub, where h is stub_scale times a
// rational lower bound on the distance to the nearest feature not touching
// the vertex (1 when there is none); symmetrically below each non-leaf
// sink. For scales above 1/2 two stubs can collide on first placement, in
// which case all heights are halved and the drawing rebuilt; the embedding
// signature of the result is independent of the scale either way.
//
// Throws DomainError when the drawing has isolated vertices or the scale is
// outside (0, 1); PreconditionError when the drawing is invalid.
ExtendedDrawing npp_extend(const Drawing& d, const Rat& stub_scale = Rat(1, 2));

// Geometric counterpart of virtualize_isolated: each isolated vertex at
// (x, y) becomes the vertical edge x__top -> x__bot centered on it, with
// half-length bounded by half the clearance around the vertex, so its
// face of residence is unchanged.
std::pair<Drawing, VirtualizationMapping> virtualize_isolated_drawing(const Drawing& d);

struct AutoExtended {
    ExtendedDrawing extended;
    VirtualizationMapping virtualization;
};

// virtualize_isolated_drawing followed by npp_extend; identity composition
// on drawings without isolated vertices.
AutoExtended npp_extend_auto(const Drawing& d, const Rat& stub_scale = Rat(1, 2));

// Polarizations of the original vertices computed through the extension:
// extend, extract rotations in the extended drawing (where every original
// vertex is processive or a leaf), convert via the rotation/polarization
// rules, and drop the stub edges. Agrees exactly with extract_polarization
// on every valid drawing. Requires no isolated vertices.
PolarizationStructure polarization_via_npp(const Drawing& d);

// Total version: virtualizes first when needed and restricts the result to
// the original vertex set (isolated vertices keep empty polarizations).
PolarizationStructure polarization_via_npp_auto(const Drawing& d);

// Removes mapped stubs and undoes virtualization (each virtual edge
// collapses back to the isolated vertex at its midpoint). Exact inverse of
// the two constructions; used to check the restriction round trip.
Drawing restrict_extension(const Drawing& extended, const ExtensionMapping& mapping,
                           const VirtualizationMapping& virtualization);

} // namespace upward
