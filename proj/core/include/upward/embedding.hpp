#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "upward/geometry.hpp"
#include "upward/graph.hpp"

namespace upward {

// Cyclic clockwise order of the edges incident to one vertex (standard
// orientation, y up). Stored rotated so the list starts at the smallest
// edge id, which makes equality of cyclic values plain list equality.
struct Rotation {
    std::string vertex;
    std::vector<std::string> edges_cw;

    friend bool operator==(const Rotation&, const Rotation&) = default;
};

Rotation make_rotation(std::string vertex, std::vector<std::string> edges_cw);

struct RotationSystem {
    std::map<std::string, Rotation> at; // one entry per vertex

    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

// Left-to-right linear orders on the incoming and outgoing edges of a vertex.
struct Polarization {
    std::string vertex;
    std::vector<std::string> in_order;
    std::vector<std::string> out_order;

    friend bool operator==(const Polarization&, const Polarization&) = default;
};

struct PolarizationStructure {
    std::map<std::string, Polarization> at; // one entry per vertex; isolated ones empty

    friend bool operator==(const PolarizationStructure&, const PolarizationStructure&) = default;
};

// Incident edges of v sorted clockwise by the exact direction of the first
// polyline segment leaving v; equal initial directions (possible only in
// invalid drawings) fall back to comparing the subsequent direction
// sequences, then edge ids. Isolated vertices yield the empty rotation.
Rotation extract_rotation(const Drawing& d, const std::string& v);

// Rotations for all vertices. Every extracted rotation of a valid drawing is
// bimodal; that is asserted internally and a failure indicates a geometry
// bug, not bad user input.
RotationSystem extract_rotation_system(const Drawing& d);

// True iff the incoming edges form one contiguous cyclic interval (and the
// outgoing ones the complementary interval). Sources, sinks and leaves are
// always bimodal. Throws StructuralError when the rotation does not list
// exactly the incident edges of its vertex.
bool check_bimodal(const Rotation& r, const Graph& g);

// The two conversion rules between a bimodal rotation and a polarization:
// reading the clockwise cycle as in_1..in_k, out_l..out_1. Defined for
// processive vertices and leaves; for a source or sink of degree >= 2 there
// is no canonical cycle break, so DomainError is thrown (likewise for a
// non-bimodal rotation).
Polarization rotation_to_polarization(const Rotation& r, const Graph& g);

// Inverse direction: clockwise cycle = in_order then reverse(out_order).
Rotation polarization_to_rotation(const Polarization& p, const Graph& g);

// The drawing-induced polarization: incoming edges sorted left to right (by
// exact direction vectors around the upward vertical), outgoing edges left
// to right below. Defined at every vertex including sources and sinks; the
// geometry supplies the cycle break that abstract rotations lack.
PolarizationStructure extract_polarization(const Drawing& d);

struct Dart {
    std::string edge;
    bool forward; // true: tail -> head

    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart& a, const Dart& b) {
        if (auto c = a.edge <=> b.edge; c != 0) return c;
        // forward sorts before backward
        return (a.forward ? 0 : 1) <=> (b.forward ? 0 : 1);
    }
};

struct Face {
    std::string component;  // component key (smallest vertex id)
    std::vector<Dart> walk; // canonical: rotated to start at the smallest dart
    bool is_outer = false;

    friend bool operator==(const Face&, const Face&) = default;
};

// Orbits of the next-dart permutation (twin, then clockwise successor at the
// target vertex): the face walks of the combinatorial embedding. Purely
// combinatorial; outer faces are not identified here.
std::vector<std::vector<Dart>> face_orbits(const RotationSystem& rs, const Graph& g);

// Faces of the drawing, one outer face per connected component, identified
// geometrically. The walks partition the darts and satisfy the Euler
// identity checked by euler_identity_holds. Throws DomainError when the
// graph has isolated vertices (virtualize first).
std::vector<Face> trace_faces(const Drawing& d);

// V - E + F = 1 + C with the outer-face convention fixed here: per-component
// outer walks are merged into the single unbounded region, so F counts all
// bounded faces plus one.
bool euler_identity_holds(const Drawing& d);

struct Containment {
    std::string component;  // key of the containing component
    std::vector<Dart> face; // canonical walk of its bounded containing face

    friend bool operator==(const Containment&, const Containment&) = default;
};

struct ComponentSignature {
    std::map<std::string, std::vector<std::string>> rotations; // canonical lists
    std::vector<Dart> outer_walk;                              // canonical
    std::optional<Containment> parent; // nullopt: directly in the unbounded region

    friend bool operator==(const ComponentSignature&, const ComponentSignature&) = default;
};

// Canonical, coordinate-free record of the plane embedding: per component
// the rotation system, the outer face walk, and which bounded face of which
// other component contains it. Two drawings of the same labeled graph have
// equal signatures iff they are related by a planar isotopy fixing labels.
struct EmbeddingSignature {
    std::map<std::string, ComponentSignature> components;

    friend bool operator==(const EmbeddingSignature&, const EmbeddingSignature&) = default;
};

// Throws DomainError when isolated vertices are present (virtualize first).
EmbeddingSignature signature(const Drawing& d);

} // namespace upward
