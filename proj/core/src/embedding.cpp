#include "upward/embedding.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>

#include "upward/errors.hpp"

namespace upward {

namespace {

// ---- clockwise direction comparison ------------------------------------
//
// Directions are compared exactly, as vectors. cw_class buckets a vector by
// its clockwise angle from a reference direction: 0 = parallel same sense,
// 1 = strictly clockwise side (0, 180), 2 = opposite, 3 = (180, 360).

int cw_class(const Vec& ref, const Vec& u) {
    const int cr = cross(ref, u).sign();
    if (cr == 0) return dot(ref, u).sign() > 0 ? 0 : 2;
    return cr < 0 ? 1 : 3;
}

// -1 / 0 / +1: u before / tied with / after w, clockwise starting at ref.
int cw_compare(const Vec& ref, const Vec& u, const Vec& w) {
    const int cu = cw_class(ref, u);
    const int cw_ = cw_class(ref, w);
    if (cu != cw_) return cu < cw_ ? -1 : 1;
    if (cu == 0 || cu == 2) return 0;
    const int s = cross(u, w).sign();
    return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

Vec mirror_x(const Vec& v) { return {-v.x, v.y}; }

std::vector<Dart> darts_at(const Graph& g, const std::string& v) {
    std::vector<Dart> out;
    for (const std::string& e : g.out_edges(v)) out.push_back({e, true});
    for (const std::string& e : g.in_edges(v)) out.push_back({e, false});
    return out;
}

// Successive direction vectors of a dart's polyline, read away from the
// vertex the dart originates at.
std::vector<Vec> dart_directions(const Drawing& d, const Dart& dart) {
    std::vector<Point> pts = d.polyline(dart.edge);
    if (!dart.forward) std::reverse(pts.begin(), pts.end());
    std::vector<Vec> dirs;
    dirs.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) dirs.push_back(pts[i + 1] - pts[i]);
    return dirs;
}

// Orders darts around a vertex, clockwise from `ref`. An exact tie of the
// initial directions (impossible in a valid drawing, where it would force a
// collinear overlap) is broken by comparing the subsequent direction
// sequences against the shared travel direction, then by edge id, so the
// order is total even for invalid drawings being reported or rendered.
// With `mirrored` set, every direction is reflected first, which yields the
// counterclockwise reading used for left-to-right orders of outgoing edges.
struct DartAngularLess {
    const Drawing* drawing;
    Vec ref;
    bool mirrored = false;

    bool operator()(const Dart& a, const Dart& b) const {
        std::vector<Vec> da = dart_directions(*drawing, a);
        std::vector<Vec> db = dart_directions(*drawing, b);
        if (mirrored) {
            for (Vec& v : da) v = mirror_x(v);
            for (Vec& v : db) v = mirror_x(v);
        }
        Vec r = ref;
        std::size_t k = 0;
        while (k < da.size() && k < db.size()) {
            const int c = cw_compare(r, da[k], db[k]);
            if (c != 0) return c < 0;
            r = da[k];
            ++k;
        }
        if (da.size() != db.size()) return da.size() < db.size();
        return a.edge < b.edge;
    }
};

void rotate_to_min(std::vector<std::string>& ids) {
    if (ids.empty()) return;
    auto min_it = std::min_element(ids.begin(), ids.end());
    std::rotate(ids.begin(), min_it, ids.end());
}

void require_incident_match(const Rotation& r, const Graph& g) {
    std::vector<std::string> expected = g.in_edges(r.vertex);
    const auto& out = g.out_edges(r.vertex);
    expected.insert(expected.end(), out.begin(), out.end());
    std::sort(expected.begin(), expected.end());
    std::vector<std::string> got = r.edges_cw;
    std::sort(got.begin(), got.end());
    if (got != expected)
        throw StructuralError("rotation at \"" + r.vertex +
                              "\" does not list exactly the incident edges");
}

} // namespace

Rotation make_rotation(std::string vertex, std::vector<std::string> edges_cw) {
    std::set<std::string> seen(edges_cw.begin(), edges_cw.end());
    if (seen.size() != edges_cw.size())
        throw StructuralError("rotation at \"" + vertex + "\" repeats an edge id");
    rotate_to_min(edges_cw);
    return {std::move(vertex), std::move(edges_cw)};
}

Rotation extract_rotation(const Drawing& d, const std::string& v) {
    std::vector<Dart> darts = darts_at(d.graph(), v);
    std::sort(darts.begin(), darts.end(), DartAngularLess{&d, Vec{Rat(0), Rat(1)}});
    std::vector<std::string> ids;
    ids.reserve(darts.size());
    for (const Dart& dt : darts) ids.push_back(dt.edge);
    return make_rotation(v, std::move(ids));
}

RotationSystem extract_rotation_system(const Drawing& d) {
    RotationSystem rs;
    for (const std::string& v : d.graph().vertex_ids()) {
        Rotation r = extract_rotation(d, v);
        if (!check_bimodal(r, d.graph()))
            throw std::logic_error("internal: non-bimodal rotation extracted at \"" + v + "\"");
        rs.at.emplace(v, std::move(r));
    }
    return rs;
}

bool check_bimodal(const Rotation& r, const Graph& g) {
    require_incident_match(r, g);
    const auto& in = g.in_edges(r.vertex);
    const std::size_t n = r.edges_cw.size();
    if (n <= 2) return true;
    auto incoming = [&](const std::string& e) {
        return std::binary_search(in.begin(), in.end(), e);
    };
    std::size_t transitions = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (incoming(r.edges_cw[i]) != incoming(r.edges_cw[(i + 1) % n])) ++transitions;
    return transitions <= 2;
}

Polarization rotation_to_polarization(const Rotation& r, const Graph& g) {
    require_incident_match(r, g);
    const auto& in = g.in_edges(r.vertex);
    const auto& out = g.out_edges(r.vertex);
    const std::size_t k = in.size(), l = out.size();

    if (k + l == 0)
        throw DomainError("vertex \"" + r.vertex + "\" is isolated; it has no polarization here");
    if (k + l > 1 && (k == 0 || l == 0))
        throw DomainError("no canonical polarization for the non-leaf " +
                          std::string(k == 0 ? "source" : "sink") + " \"" + r.vertex + "\"");
    if (!check_bimodal(r, g))
        throw DomainError("rotation at \"" + r.vertex + "\" is not bimodal");

    Polarization p{r.vertex, {}, {}};
    if (k + l == 1) {
        (k == 1 ? p.in_order : p.out_order) = r.edges_cw;
        return p;
    }
    // Processive: the clockwise cycle reads in_1 .. in_k, out_l .. out_1.
    const std::size_t n = r.edges_cw.size();
    auto incoming = [&](const std::string& e) {
        return std::binary_search(in.begin(), in.end(), e);
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (incoming(r.edges_cw[i]) && !incoming(r.edges_cw[(i + n - 1) % n])) {
            start = i;
            break;
        }
    for (std::size_t i = 0; i < k; ++i) p.in_order.push_back(r.edges_cw[(start + i) % n]);
    for (std::size_t i = 0; i < l; ++i) p.out_order.push_back(r.edges_cw[(start + k + i) % n]);
    std::reverse(p.out_order.begin(), p.out_order.end());
    return p;
}

Rotation polarization_to_rotation(const Polarization& p, const Graph& g) {
    auto check_perm = [&](const std::vector<std::string>& order,
                          const std::vector<std::string>& expected, const char* side) {
        std::vector<std::string> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expected)
            throw StructuralError("polarization at \"" + p.vertex + "\": " + side +
                                  " order is not a permutation of the incident edges");
    };
    check_perm(p.in_order, g.in_edges(p.vertex), "in");
    check_perm(p.out_order, g.out_edges(p.vertex), "out");

    std::vector<std::string> cycle = p.in_order;
    cycle.insert(cycle.end(), p.out_order.rbegin(), p.out_order.rend());
    return make_rotation(p.vertex, std::move(cycle));
}

PolarizationStructure extract_polarization(const Drawing& d) {
    PolarizationStructure ps;
    const Vec up{Rat(0), Rat(1)};
    const Vec down{Rat(0), Rat(-1)};
    for (const std::string& v : d.graph().vertex_ids()) {
        Polarization p{v, {}, {}};
        std::vector<Dart> ins, outs;
        for (const std::string& e : d.graph().in_edges(v)) ins.push_back({e, false});
        for (const std::string& e : d.graph().out_edges(v)) outs.push_back({e, true});
        // Incoming directions point strictly upward: left-to-right is
        // clockwise from straight down. Outgoing ones point strictly
        // downward: left-to-right is counterclockwise from straight up,
        // i.e. clockwise after reflection.
        std::sort(ins.begin(), ins.end(), DartAngularLess{&d, down});
        std::sort(outs.begin(), outs.end(), DartAngularLess{&d, up, /*mirrored=*/true});
        for (const Dart& dt : ins) p.in_order.push_back(dt.edge);
        for (const Dart& dt : outs) p.out_order.push_back(dt.edge);
        ps.at.emplace(v, std::move(p));
    }
    return ps;
}

namespace {

std::string dart_origin(const Graph& g, const Dart& d) {
    const Edge& e = g.edge(d.edge);
    return d.forward ? e.tail : e.head;
}

std::string dart_target(const Graph& g, const Dart& d) {
    const Edge& e = g.edge(d.edge);
    return d.forward ? e.head : e.tail;
}

void canonicalize_walk(std::vector<Dart>& walk) {
    if (walk.empty()) return;
    auto min_it = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), min_it, walk.end());
}

} // namespace

std::vector<std::vector<Dart>> face_orbits(const RotationSystem& rs, const Graph& g) {
    for (const std::string& v : g.vertex_ids()) {
        auto it = rs.at.find(v);
        if (it == rs.at.end())
            throw StructuralError("rotation system has no entry for vertex \"" + v + "\"");
        require_incident_match(it->second, g);
    }

    // Position of each dart within its origin's clockwise rotation.
    std::map<std::pair<std::string, std::string>, std::size_t> index_at; // (vertex, edge)
    for (const auto& [v, rot] : rs.at)
        for (std::size_t i = 0; i < rot.edges_cw.size(); ++i) index_at[{v, rot.edges_cw[i]}] = i;

    auto next_dart = [&](const Dart& d) -> Dart {
        const std::string v = dart_target(g, d);
        const Rotation& rot = rs.at.at(v);
        const std::size_t i = index_at.at({v, d.edge});
        const std::string& e = rot.edges_cw[(i + 1) % rot.edges_cw.size()];
        return Dart{e, g.edge(e).tail == v};
    };

    std::vector<Dart> all;
    for (const Edge& e : g.edges()) {
        all.push_back({e.id, true});
        all.push_back({e.id, false});
    }
    std::set<Dart> visited;
    std::vector<std::vector<Dart>> orbits;
    for (const Dart& start : all) {
        if (visited.count(start)) continue;
        std::vector<Dart> walk;
        Dart cur = start;
        do {
            walk.push_back(cur);
            visited.insert(cur);
            cur = next_dart(cur);
        } while (!(cur == start));
        canonicalize_walk(walk);
        orbits.push_back(std::move(walk));
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

namespace {

struct Traced {
    RotationSystem rotations;
    ComponentMap components;
    std::vector<Face> faces;               // sorted by (component, walk)
    std::map<Dart, std::size_t> face_of;   // dart -> index into faces
};

// Outer face of a component: at its topmost vertex every incident direction
// points strictly downward, so the upward gap there borders the unbounded
// region. The face walk through that gap is the orbit of the twin of the
// last dart in clockwise-from-up order.
std::string topmost_vertex(const Drawing& d, const std::vector<std::string>& members) {
    std::string best = members.front();
    for (const std::string& v : members) {
        const Point& p = d.position(v);
        const Point& q = d.position(best);
        if (p.y > q.y || (p.y == q.y && v < best)) best = v;
    }
    return best;
}

Traced build_traced(const Drawing& d) {
    for (const std::string& v : d.graph().vertex_ids())
        if (d.graph().degree(v) == 0)
            throw DomainError("isolated vertex \"" + v +
                              "\" has no face structure; apply virtualize_isolated first");

    Traced t;
    t.rotations = extract_rotation_system(d);
    t.components = connected_components(d.graph());

    const auto orbits = face_orbits(t.rotations, d.graph());
    for (const auto& walk : orbits) {
        Face f;
        f.component = t.components.component_of.at(dart_origin(d.graph(), walk.front()));
        f.walk = walk;
        t.faces.push_back(std::move(f));
    }
    std::sort(t.faces.begin(), t.faces.end(), [](const Face& a, const Face& b) {
        return std::tie(a.component, a.walk) < std::tie(b.component, b.walk);
    });
    for (std::size_t i = 0; i < t.faces.size(); ++i)
        for (const Dart& dt : t.faces[i].walk) t.face_of[dt] = i;

    for (const auto& [key, members] : t.components.members) {
        const std::string top = topmost_vertex(d, members);
        std::vector<Dart> darts = darts_at(d.graph(), top);
        std::sort(darts.begin(), darts.end(), DartAngularLess{&d, Vec{Rat(0), Rat(1)}});
        const Dart last = darts.back();
        const Dart twin{last.edge, !last.forward};
        t.faces[t.face_of.at(twin)].is_outer = true;
    }
    return t;
}

} // namespace

std::vector<Face> trace_faces(const Drawing& d) {
    return build_traced(d).faces;
}

bool euler_identity_holds(const Drawing& d) {
    const Traced t = build_traced(d);
    const long v = static_cast<long>(d.graph().vertex_ids().size());
    const long e = static_cast<long>(d.graph().edges().size());
    const long c = static_cast<long>(t.components.members.size());
    // Merge the per-component outer walks into the one unbounded region.
    const long f = static_cast<long>(t.faces.size()) - c + 1;
    return v - e + f == 1 + c;
}

namespace {

// Ray casting from `p` against the segments of one component. Returns the
// index of the bounded face of that component containing p, or nullopt when
// p sits in the component's unbounded face. `p` must not lie on the
// component's drawing (true for anchors of other components).
std::optional<std::size_t> locate_bounded_face(const Drawing& d, const Traced& t,
                                               const std::vector<std::string>& members,
                                               const Point& p) {
    struct Hit {
        std::string edge;
        Segment seg;
    };
    std::vector<Hit> segs;
    std::set<std::string> member_set(members.begin(), members.end());
    for (const Edge& e : d.graph().edges()) {
        if (!member_set.count(e.tail)) continue;
        for (const Segment& s : d.segments(e.id)) segs.push_back({e.id, s});
    }

    // A ray direction is usable when it is parallel to no segment and passes
    // through no polyline point; only finitely many slopes are bad.
    Vec dir{Rat(1), Rat(0)};
    for (long slope = 0;; ++slope) {
        bool ok = true;
        for (long sgn_ : {1L, -1L}) {
            dir = Vec{Rat(1), Rat(slope * sgn_)};
            ok = true;
            for (const Hit& h : segs) {
                if (cross(dir, h.seg.b - h.seg.a).sign() == 0) { ok = false; break; }
                for (const Point& q : {h.seg.a, h.seg.b}) {
                    if (cross(dir, q - p).sign() == 0 && dot(dir, q - p).sign() > 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) break;
            if (slope == 0) break; // (1,0) and (1,-0) coincide
        }
        if (ok) break;
    }

    std::optional<Rat> best_t;
    const Hit* best = nullptr;
    for (const Hit& h : segs) {
        const Vec e = h.seg.b - h.seg.a;
        const Vec w = h.seg.a - p;
        const Rat denom = cross(dir, e);
        const Rat tt = cross(w, e) / denom;
        const Rat u = cross(w, dir) / denom;
        if (tt.sign() <= 0 || u.sign() <= 0 || u >= Rat(1)) continue;
        if (!best_t || tt < *best_t) {
            best_t = tt;
            best = &h;
        }
    }
    if (!best) return std::nullopt;

    const int side = orientation(best->seg.a, best->seg.b, p);
    if (side == 0) throw std::logic_error("internal: ray origin collinear with first hit");
    // Walking a segment in polyline (tail-to-head) order keeps that dart's
    // face on its left.
    const Dart dart{best->edge, side > 0};
    const std::size_t idx = t.face_of.at(dart);
    if (t.faces[idx].is_outer) return std::nullopt;
    return idx;
}

} // namespace

EmbeddingSignature signature(const Drawing& d) {
    const Traced t = build_traced(d);

    std::map<std::string, Point> anchors;
    for (const auto& [key, members] : t.components.members)
        anchors.emplace(key, d.position(topmost_vertex(d, members)));

    EmbeddingSignature sig;
    for (const auto& [key, members] : t.components.members) {
        ComponentSignature cs;
        for (const std::string& v : members) cs.rotations[v] = t.rotations.at.at(v).edges_cw;
        for (const Face& f : t.faces)
            if (f.component == key && f.is_outer) cs.outer_walk = f.walk;

        // Candidates: components whose bounded face contains this anchor.
        // Their regions are nested, so the innermost is the candidate whose
        // own anchor lies inside every other candidate.
        std::map<std::string, std::size_t> candidates; // component key -> face idx
        for (const auto& [other, other_members] : t.components.members) {
            if (other == key) continue;
            if (auto idx = locate_bounded_face(d, t, other_members, anchors.at(key)))
                candidates.emplace(other, *idx);
        }
        if (!candidates.empty()) {
            std::string innermost;
            std::size_t best_depth = 0;
            bool first = true;
            for (const auto& [cand, idx] : candidates) {
                std::size_t depth = 0;
                for (const auto& [other, other_idx] : candidates) {
                    if (other == cand) continue;
                    if (locate_bounded_face(d, t, t.components.members.at(other),
                                            anchors.at(cand)))
                        ++depth;
                }
                if (first || depth > best_depth) {
                    innermost = cand;
                    best_depth = depth;
                    first = false;
                }
            }
            cs.parent = Containment{innermost, t.faces[candidates.at(innermost)].walk};
        }
        sig.components.emplace(key, std::move(cs));
    }
    return sig;
}

} // namespace upward
