#include "upward/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "upward/errors.hpp"

namespace upward {

Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

int orientation(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).sign();
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (s.a == s.b) return p == s.a;
    if (orientation(s.a, s.b, p) != 0) return false;
    const Rat t = dot(p - s.a, s.b - s.a);
    return t.sign() >= 0 && t <= dot(s.b - s.a, s.b - s.a);
}

Rat sq_dist(const Point& a, const Point& b) {
    const Vec d = a - b;
    return d.x * d.x + d.y * d.y;
}

Rat sq_dist_point_segment(const Point& p, const Segment& s) {
    if (s.a == s.b) return sq_dist(p, s.a);
    const Vec d = s.b - s.a;
    Rat t = dot(p - s.a, d) / dot(d, d);
    if (t.sign() < 0) t = Rat(0);
    if (t > Rat(1)) t = Rat(1);
    const Point foot{s.a.x + t * d.x, s.a.y + t * d.y};
    return sq_dist(p, foot);
}

Rat sq_dist_segments(const Segment& s, const Segment& t) {
    if (intersect_segments(s, t).kind != SegContact::None) return Rat(0);
    Rat best = sq_dist_point_segment(s.a, t);
    best = std::min(best, sq_dist_point_segment(s.b, t));
    best = std::min(best, sq_dist_point_segment(t.a, s));
    best = std::min(best, sq_dist_point_segment(t.b, s));
    return best;
}

namespace {

bool point_lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return point_lex_less(a, b); }
};

} // namespace

SegIntersection intersect_segments(const Segment& s, const Segment& t) {
    const bool s_degenerate = s.a == s.b;
    const bool t_degenerate = t.a == t.b;
    if (s_degenerate && t_degenerate)
        return s.a == t.a ? SegIntersection{SegContact::Touch, s.a} : SegIntersection{};
    if (s_degenerate)
        return point_on_segment(s.a, t) ? SegIntersection{SegContact::Touch, s.a} : SegIntersection{};
    if (t_degenerate)
        return point_on_segment(t.a, s) ? SegIntersection{SegContact::Touch, t.a} : SegIntersection{};

    const Vec d1 = s.b - s.a;
    const Vec d2 = t.b - t.a;
    const Vec w = t.a - s.a;
    const Rat denom = cross(d1, d2);
    if (denom.sign() != 0) {
        const Rat u = cross(w, d2) / denom; // parameter along s
        const Rat v = cross(w, d1) / denom; // parameter along t
        if (u.sign() < 0 || u > Rat(1) || v.sign() < 0 || v > Rat(1)) return {};
        return {SegContact::Touch, Point{s.a.x + u * d1.x, s.a.y + u * d1.y}};
    }
    if (cross(w, d1).sign() != 0) return {}; // parallel, distinct lines

    // Collinear: any contact region is delimited by the four endpoints.
    std::vector<Point> hits;
    for (const Point& p : {s.a, s.b})
        if (point_on_segment(p, t)) hits.push_back(p);
    for (const Point& p : {t.a, t.b})
        if (point_on_segment(p, s)) hits.push_back(p);
    if (hits.empty()) return {};
    Point lo = hits.front();
    bool all_equal = true;
    for (const Point& p : hits) {
        if (!(p == hits.front())) all_equal = false;
        if (point_lex_less(p, lo)) lo = p;
    }
    return {all_equal ? SegContact::Touch : SegContact::Overlap, lo};
}

Drawing Drawing::make(Graph graph, std::map<std::string, Point> positions,
                      std::map<std::string, std::vector<Point>> bends) {
    for (const std::string& v : graph.vertex_ids())
        if (!positions.count(v)) throw StructuralError("vertex \"" + v + "\" has no position");
    for (const auto& [v, p] : positions)
        if (!graph.has_vertex(v)) throw StructuralError("position for unknown vertex \"" + v + "\"");
    for (const auto& [e, b] : bends)
        if (!graph.has_edge(e)) throw StructuralError("bends for unknown edge \"" + e + "\"");
    for (const Edge& e : graph.edges()) bends[e.id]; // default every route to straight

    const TopoResult topo = check_acyclic(graph);
    if (const auto* cycle = std::get_if<CycleWitness>(&topo)) {
        std::string ids;
        for (const std::string& id : cycle->edge_ids) ids += (ids.empty() ? "" : ", ") + id;
        throw StructuralError("graph has a directed cycle: " + ids);
    }

    Drawing d;
    d.graph_ = std::move(graph);
    d.positions_ = std::move(positions);
    d.bends_ = std::move(bends);
    return d;
}

const Point& Drawing::position(const std::string& v) const {
    auto it = positions_.find(v);
    if (it == positions_.end()) throw DomainError("unknown vertex id \"" + v + "\"");
    return it->second;
}

const std::vector<Point>& Drawing::bends(const std::string& e) const {
    auto it = bends_.find(e);
    if (it == bends_.end()) throw DomainError("unknown edge id \"" + e + "\"");
    return it->second;
}

std::vector<Point> Drawing::polyline(const std::string& e) const {
    const Edge& ed = graph_.edge(e);
    std::vector<Point> pts;
    pts.push_back(position(ed.tail));
    for (const Point& b : bends(e)) pts.push_back(b);
    pts.push_back(position(ed.head));
    return pts;
}

std::vector<Segment> Drawing::segments(const std::string& e) const {
    const std::vector<Point> pts = polyline(e);
    std::vector<Segment> segs;
    segs.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({pts[i], pts[i + 1]});
    return segs;
}

const char* to_string(ViolationCode c) {
    switch (c) {
    case ViolationCode::CoincidentVertices: return "coincident-vertices";
    case ViolationCode::NonMonotoneEdge: return "non-monotone-edge";
    case ViolationCode::SegmentCrossing: return "segment-crossing";
    case ViolationCode::VertexOnSegment: return "vertex-on-segment";
    case ViolationCode::BendAtVertex: return "bend-at-vertex";
    case ViolationCode::PointOutsideBox: return "point-outside-box";
    case ViolationCode::VertexOnVerticalBoundary: return "vertex-on-vertical-boundary";
    case ViolationCode::NonLeafOnHorizontalBoundary: return "nonleaf-on-horizontal-boundary";
    }
    return "?";
}

namespace {

struct SegRec {
    std::string edge;
    std::size_t index;
    Segment seg;
};

std::vector<SegRec> all_segments(const Drawing& d) {
    std::vector<SegRec> out;
    for (const Edge& e : d.graph().edges()) {
        const auto segs = d.segments(e.id);
        for (std::size_t i = 0; i < segs.size(); ++i) out.push_back({e.id, i, segs[i]});
    }
    return out;
}

std::string coord_str(const Point& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

// Contact points permitted for a pair of segments: the shared bend for
// consecutive segments of one polyline, the shared vertices' points for
// segments of two distinct edges. Everything else must stay disjoint.
std::vector<Point> allowed_contacts(const Drawing& d, const SegRec& a, const SegRec& b) {
    std::vector<Point> allowed;
    if (a.edge == b.edge) {
        if (b.index == a.index + 1) allowed.push_back(a.seg.b);
        return allowed;
    }
    const Edge& ea = d.graph().edge(a.edge);
    const Edge& eb = d.graph().edge(b.edge);
    for (const std::string& v : {ea.tail, ea.head})
        if (v == eb.tail || v == eb.head) allowed.push_back(d.position(v));
    return allowed;
}

} // namespace

ValidationReport validate_drawing(const Drawing& d) {
    ValidationReport report;
    auto add = [&](Violation v) {
        report.ok = false;
        report.violations.push_back(std::move(v));
    };

    // 1. Distinct vertices occupy distinct points.
    const auto& pos = d.positions();
    for (auto i = pos.begin(); i != pos.end(); ++i)
        for (auto j = std::next(i); j != pos.end(); ++j)
            if (i->second == j->second)
                add({ViolationCode::CoincidentVertices,
                     {i->first, j->first},
                     i->second,
                     "vertices \"" + i->first + "\" and \"" + j->first + "\" coincide at " +
                         coord_str(i->second)});

    // 2. Strict downward monotonicity along every polyline.
    for (const Edge& e : d.graph().edges()) {
        const auto pts = d.polyline(e.id);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (!(pts[i + 1].y < pts[i].y))
                add({ViolationCode::NonMonotoneEdge,
                     {e.id},
                     pts[i + 1],
                     "edge \"" + e.id + "\": y does not strictly decrease at segment " +
                         std::to_string(i)});
    }

    // 3. Bends never sit on vertex points.
    std::map<Point, std::string, PointLess> vertex_at;
    for (const auto& [v, p] : pos) vertex_at.emplace(p, v);
    for (const Edge& e : d.graph().edges()) {
        const auto& bends = d.bends(e.id);
        for (std::size_t i = 0; i < bends.size(); ++i)
            if (auto it = vertex_at.find(bends[i]); it != vertex_at.end())
                add({ViolationCode::BendAtVertex,
                     {e.id, it->second},
                     bends[i],
                     "bend " + std::to_string(i) + " of edge \"" + e.id + "\" lies on vertex \"" +
                         it->second + "\""});
    }

    // 4. No vertex in the relative interior of any segment.
    const auto segs = all_segments(d);
    for (const auto& [v, p] : pos)
        for (const SegRec& s : segs)
            if (!(p == s.seg.a) && !(p == s.seg.b) && point_on_segment(p, s.seg))
                add({ViolationCode::VertexOnSegment,
                     {v, s.edge},
                     p,
                     "vertex \"" + v + "\" lies inside segment " + std::to_string(s.index) +
                         " of edge \"" + s.edge + "\""});

    // 5. Pairwise segment contacts limited to the allowed meeting points.
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const SegIntersection hit = intersect_segments(segs[i].seg, segs[j].seg);
            if (hit.kind == SegContact::None) continue;
            bool ok = false;
            if (hit.kind == SegContact::Touch)
                for (const Point& p : allowed_contacts(d, segs[i], segs[j]))
                    if (p == hit.at) ok = true;
            if (ok) continue;
            const char* how = hit.kind == SegContact::Overlap ? "overlap" : "cross";
            add({ViolationCode::SegmentCrossing,
                 {segs[i].edge, segs[j].edge},
                 hit.at,
                 "edges \"" + segs[i].edge + "\" (segment " + std::to_string(segs[i].index) +
                     ") and \"" + segs[j].edge + "\" (segment " + std::to_string(segs[j].index) +
                     ") " + how + " at " + coord_str(hit.at)});
        }
    }
    return report;
}

PlaneBox PlaneBox::make(Rat x_min, Rat x_max, Rat y_min, Rat y_max) {
    if (!(x_min < x_max) || !(y_min < y_max)) throw DomainError("plane box has empty interior");
    return {std::move(x_min), std::move(x_max), std::move(y_min), std::move(y_max)};
}

ValidationReport validate_progressive(const Drawing& d, const PlaneBox& box) {
    const ValidationReport inner = validate_drawing(d);
    if (!inner.ok)
        throw PreconditionError("drawing is not a valid upward planar drawing: " +
                                inner.violations.front().message);

    ValidationReport report;
    auto add = [&](Violation v) {
        report.ok = false;
        report.violations.push_back(std::move(v));
    };
    auto inside = [&](const Point& p) {
        return box.x_min <= p.x && p.x <= box.x_max && box.y_min <= p.y && p.y <= box.y_max;
    };

    for (const auto& [v, p] : d.positions()) {
        if (!inside(p)) {
            add({ViolationCode::PointOutsideBox,
                 {v},
                 p,
                 "vertex \"" + v + "\" at " + coord_str(p) + " lies outside the box"});
            continue;
        }
        if (p.x == box.x_min || p.x == box.x_max) {
            add({ViolationCode::VertexOnVerticalBoundary,
                 {v},
                 p,
                 "vertex \"" + v + "\" lies on a vertical boundary"});
            continue;
        }
        if ((p.y == box.y_min || p.y == box.y_max) && d.graph().degree(v) != 1)
            add({ViolationCode::NonLeafOnHorizontalBoundary,
                 {v},
                 p,
                 "non-leaf vertex \"" + v + "\" lies on a horizontal boundary"});
    }
    // Segment containment in a convex box reduces to its endpoints, so bends
    // are the only remaining points to check.
    for (const Edge& e : d.graph().edges()) {
        const auto& bends = d.bends(e.id);
        for (std::size_t i = 0; i < bends.size(); ++i)
            if (!inside(bends[i]))
                add({ViolationCode::PointOutsideBox,
                     {e.id},
                     bends[i],
                     "bend " + std::to_string(i) + " of edge \"" + e.id + "\" lies outside the box"});
    }
    return report;
}

namespace {

void require_valid(const Drawing& d, const char* op) {
    const ValidationReport r = validate_drawing(d);
    if (!r.ok)
        throw PreconditionError(std::string(op) + " requires a valid drawing: " +
                                r.violations.front().message);
}

} // namespace

Clearance min_clearance(const Drawing& d) {
    require_valid(d, "min_clearance");

    std::set<std::pair<std::string, std::string>> adjacent;
    for (const Edge& e : d.graph().edges())
        adjacent.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});

    Clearance best;
    auto offer = [&](const Rat& sq) {
        if (!best.finite || sq < best.sq) best = {true, sq};
    };

    const auto& pos = d.positions();
    for (auto i = pos.begin(); i != pos.end(); ++i)
        for (auto j = std::next(i); j != pos.end(); ++j)
            if (!adjacent.count({i->first, j->first})) offer(sq_dist(i->second, j->second));

    const auto segs = all_segments(d);
    for (const auto& [v, p] : pos)
        for (const SegRec& s : segs) {
            const Edge& e = d.graph().edge(s.edge);
            if (e.tail == v || e.head == v) continue;
            offer(sq_dist_point_segment(p, s.seg));
        }

    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Segment& a = segs[i].seg;
            const Segment& b = segs[j].seg;
            if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) continue;
            offer(sq_dist_segments(a, b));
        }
    return best;
}

Clearance nearest_feature_sq_dist(const Drawing& d, const std::string& v) {
    const Point p = d.position(v);
    Clearance best;
    auto offer = [&](const Rat& sq) {
        if (!best.finite || sq < best.sq) best = {true, sq};
    };
    for (const auto& [w, q] : d.positions())
        if (w != v) offer(sq_dist(p, q));
    for (const SegRec& s : all_segments(d))
        if (!(s.seg.a == p) && !(s.seg.b == p)) offer(sq_dist_point_segment(p, s.seg));
    return best;
}

Drawing transform(const Drawing& d, const PlaneMap& map) {
    auto apply = [&](const Point& p) -> Point {
        if (const auto* t = std::get_if<Translate>(&map)) return {p.x + t->dx, p.y + t->dy};
        if (const auto* s = std::get_if<ScalePositive>(&map)) return {p.x * s->sx, p.y * s->sy};
        return {-p.x, p.y}; // MirrorX
    };
    if (const auto* s = std::get_if<ScalePositive>(&map))
        if (s->sx.sign() <= 0 || s->sy.sign() <= 0)
            throw DomainError("scale factors must be positive");

    std::map<std::string, Point> positions;
    for (const auto& [v, p] : d.positions()) positions[v] = apply(p);
    std::map<std::string, std::vector<Point>> bends;
    for (const auto& [e, pts] : d.all_bends()) {
        auto& out = bends[e];
        out.reserve(pts.size());
        for (const Point& p : pts) out.push_back(apply(p));
    }
    return Drawing::make(d.graph(), std::move(positions), std::move(bends));
}

} // namespace upward
