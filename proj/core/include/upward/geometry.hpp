#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "upward/graph.hpp"
#include "upward/rational.hpp"

namespace upward {

struct Point {
    Rat x, y;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Vec {
    Rat x, y;

    friend bool operator==(const Vec&, const Vec&) = default;
};

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

Rat cross(const Vec& a, const Vec& b);
Rat dot(const Vec& a, const Vec& b);

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

struct Segment {
    Point a, b;
};

bool point_on_segment(const Point& p, const Segment& s); // closed, endpoints included

Rat sq_dist(const Point& a, const Point& b);
Rat sq_dist_point_segment(const Point& p, const Segment& s);
Rat sq_dist_segments(const Segment& s, const Segment& t); // zero when they touch

enum class SegContact { None, Touch, Overlap };

struct SegIntersection {
    SegContact kind = SegContact::None;
    Point at; // a witness point for Touch; for Overlap, the smaller endpoint
              // (lexicographic by x then y) of the shared collinear part
};

// Exact contact classification of two closed segments. Degenerate
// (zero-length) segments are handled as points.
SegIntersection intersect_segments(const Segment& s, const Segment& t);

// Geometric realization of a graph: one point per vertex, one bend list per
// edge. The polyline of edge e is position(tail) + bends(e) + position(head).
// Construction checks structure only (every vertex placed, bends keyed by
// existing edges, graph acyclic); geometric validity is validate_drawing's
// job, so invalid drawings can be represented, reported on and rendered.
class Drawing {
public:
    Drawing() = default;

    static Drawing make(Graph graph, std::map<std::string, Point> positions,
                        std::map<std::string, std::vector<Point>> bends);

    const Graph& graph() const { return graph_; }
    const Point& position(const std::string& v) const;
    const std::vector<Point>& bends(const std::string& e) const;
    const std::map<std::string, Point>& positions() const { return positions_; }
    const std::map<std::string, std::vector<Point>>& all_bends() const { return bends_; }

    std::vector<Point> polyline(const std::string& e) const;
    std::vector<Segment> segments(const std::string& e) const;

    friend bool operator==(const Drawing&, const Drawing&) = default;

private:
    Graph graph_;
    std::map<std::string, Point> positions_;
    std::map<std::string, std::vector<Point>> bends_;
};

// Violation codes form the full, fixed enumeration used in reports and
// documents (kebab-case in serialized form):
//
//   CoincidentVertices        two vertices share a point
//   NonMonotoneEdge           y fails to strictly decrease along a polyline
//   SegmentCrossing           two segments touch/cross/overlap where not allowed
//   VertexOnSegment           a vertex lies in a segment's relative interior
//   BendAtVertex              a bend sits exactly on a vertex point
//   PointOutsideBox           a polyline point leaves the closed box
//   VertexOnVerticalBoundary  a vertex on x_min/x_max
//   NonLeafOnHorizontalBoundary  a non-leaf vertex on y_min/y_max
enum class ViolationCode {
    CoincidentVertices,
    NonMonotoneEdge,
    SegmentCrossing,
    VertexOnSegment,
    BendAtVertex,
    PointOutsideBox,
    VertexOnVerticalBoundary,
    NonLeafOnHorizontalBoundary,
};

const char* to_string(ViolationCode c);

struct Violation {
    ViolationCode code;
    std::vector<std::string> ids; // offending vertex/edge ids, scan order
    std::optional<Point> where;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Decides whether the drawing is a valid upward planar drawing:
//   - distinct vertices at distinct points;
//   - y strictly decreases along every polyline (tail above head);
//   - segments are pairwise disjoint except for shared polyline bends and
//     segments of edges meeting exactly at a shared vertex point;
//   - no vertex in the relative interior of any segment;
//   - no bend on a vertex point.
// Violations are collected in a fixed scan order (vertices ascending, then
// edge ids ascending with segment indices ascending), so reports are stable.
ValidationReport validate_drawing(const Drawing& d);

struct PlaneBox {
    Rat x_min, x_max, y_min, y_max;

    static PlaneBox make(Rat x_min, Rat x_max, Rat y_min, Rat y_max); // nonempty interior
};

// The boxed condition on top of a valid drawing: everything inside the
// closed box, horizontal-boundary vertices are leaves, no vertex on a
// vertical boundary (corners count as vertical). Throws PreconditionError
// if the drawing itself is invalid.
ValidationReport validate_progressive(const Drawing& d, const PlaneBox& box);

struct Clearance {
    bool finite = false;
    Rat sq; // squared distance; meaningful only when finite
};

// Minimum squared distance between non-adjacent drawing features, where the
// features are vertex points and polyline segments and a pair is adjacent iff
//   - two vertices joined by an edge,
//   - a vertex and a segment of an incident edge,
//   - two segments sharing an endpoint coordinate.
// Square roots are never taken; all comparisons stay rational. Not finite
// when no pair qualifies (e.g. a single straight edge). Throws
// PreconditionError if the drawing is invalid.
Clearance min_clearance(const Drawing& d);

// Squared distance from vertex v's point to the nearest feature not touching
// it (every other vertex point, every segment not ending at v). Not finite
// only when no such feature exists. Used for stub and virtual-edge sizing.
Clearance nearest_feature_sq_dist(const Drawing& d, const std::string& v);

struct Translate {
    Rat dx, dy;
};
struct ScalePositive {
    Rat sx, sy; // both > 0, checked
};
struct MirrorX {};

using PlaneMap = std::variant<Translate, ScalePositive, MirrorX>;

// Exact coordinate map over every vertex position and bend. Translate and
// scale_positive preserve validity and the embedding signature; mirror_x
// preserves validity and reverses the cyclic direction of every rotation.
Drawing transform(const Drawing& d, const PlaneMap& map);

} // namespace upward
