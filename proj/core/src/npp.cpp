#include "upward/npp.hpp"

#include <algorithm>
#include <stdexcept>

#include "upward/errors.hpp"

namespace upward {

namespace {

void require_valid_drawing(const Drawing& d, const char* op) {
    const ValidationReport r = validate_drawing(d);
    if (!r.ok)
        throw PreconditionError(std::string(op) + " requires a valid drawing: " +
                                r.violations.front().message);
}

void require_no_isolated(const Drawing& d, const char* op) {
    for (const std::string& v : d.graph().vertex_ids())
        if (d.graph().degree(v) == 0)
            throw DomainError(std::string(op) + ": isolated vertex \"" + v +
                              "\" present; apply virtualize_isolated first");
}

// Rational lower bound on the plain (non-squared) distance from v to the
// nearest feature not touching it, or 1 when no feature qualifies.
Rat stub_room(const Drawing& d, const std::string& v) {
    const Clearance c = nearest_feature_sq_dist(d, v);
    if (!c.finite) return Rat(1);
    return sqrt_lower_bound(c.sq);
}

} // namespace

ExtendedDrawing npp_extend(const Drawing& d, const Rat& stub_scale) {
    if (stub_scale.sign() <= 0 || stub_scale >= Rat(1))
        throw DomainError("stub scale must lie strictly between 0 and 1, got " + stub_scale.str());
    require_valid_drawing(d, "npp_extend");
    require_no_isolated(d, "npp_extend");

    auto [extended_graph, mapping] = np_extend(d.graph());

    std::map<std::string, Rat> height;
    for (const StubEntry& s : mapping.input_stubs) height[s.vertex] = stub_scale * stub_room(d, s.vertex);
    for (const StubEntry& s : mapping.output_stubs) height[s.vertex] = stub_scale * stub_room(d, s.vertex);

    // A first placement can collide for scales above 1/2 (two stubs may
    // reach into each other's room). Halving every height shrinks all stubs
    // toward their vertices, which succeeds after finitely many rounds.
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::map<std::string, Point> positions = d.positions();
        std::map<std::string, std::vector<Point>> bends = d.all_bends();
        for (const StubEntry& s : mapping.input_stubs) {
            const Point& p = d.position(s.vertex);
            positions[s.leaf] = Point{p.x, p.y + height.at(s.vertex)};
            bends[s.edge] = {};
        }
        for (const StubEntry& s : mapping.output_stubs) {
            const Point& p = d.position(s.vertex);
            positions[s.leaf] = Point{p.x, p.y - height.at(s.vertex)};
            bends[s.edge] = {};
        }
        Drawing candidate = Drawing::make(extended_graph, std::move(positions), std::move(bends));
        if (validate_drawing(candidate).ok)
            return ExtendedDrawing{std::move(candidate), mapping, stub_scale};
        for (auto& [v, h] : height) h = h / Rat(2);
    }
    throw std::logic_error("internal: npp_extend failed to place stubs");
}

std::pair<Drawing, VirtualizationMapping> virtualize_isolated_drawing(const Drawing& d) {
    require_valid_drawing(d, "virtualize_isolated_drawing");
    auto [graph, mapping] = virtualize_isolated(d.graph());
    if (mapping.empty()) return {d, {}};

    std::map<std::string, Rat> half;
    for (const VirtualizedVertex& m : mapping) {
        const Clearance c = nearest_feature_sq_dist(d, m.vertex);
        half[m.vertex] = c.finite ? sqrt_lower_bound(c.sq) / Rat(2) : Rat(1, 2);
    }

    // Two mutually nearest isolated vertices on one vertical line get exact
    // half-distance edges that touch at the midpoint; halving resolves such
    // ties after finitely many rounds, as in npp_extend.
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::map<std::string, Point> positions = d.positions();
        std::map<std::string, std::vector<Point>> bends = d.all_bends();
        for (const VirtualizedVertex& m : mapping) {
            const Point p = d.position(m.vertex);
            const Rat& h = half.at(m.vertex);
            positions.erase(m.vertex);
            positions[m.top] = Point{p.x, p.y + h};
            positions[m.bottom] = Point{p.x, p.y - h};
            bends[m.edge] = {};
        }
        Drawing out = Drawing::make(graph, std::move(positions), std::move(bends));
        if (validate_drawing(out).ok) return {std::move(out), std::move(mapping)};
        for (auto& [v, h] : half) h = h / Rat(2);
    }
    throw std::logic_error("internal: virtualization failed to place virtual edges");
}

AutoExtended npp_extend_auto(const Drawing& d, const Rat& stub_scale) {
    auto [virtualized, vmap] = virtualize_isolated_drawing(d);
    return AutoExtended{npp_extend(virtualized, stub_scale), std::move(vmap)};
}

PolarizationStructure polarization_via_npp(const Drawing& d) {
    require_no_isolated(d, "polarization_via_npp");
    const ExtendedDrawing ext = npp_extend(d);

    std::map<std::string, std::string> stub_of; // original vertex -> stub edge id
    for (const StubEntry& s : ext.mapping.input_stubs) stub_of[s.vertex] = s.edge;
    for (const StubEntry& s : ext.mapping.output_stubs) stub_of[s.vertex] = s.edge;

    PolarizationStructure out;
    for (const std::string& v : d.graph().vertex_ids()) {
        // Every original vertex is processive or a leaf in the extension,
        // so the conversion rules apply.
        Polarization p =
            rotation_to_polarization(extract_rotation(ext.drawing, v), ext.drawing.graph());
        if (auto it = stub_of.find(v); it != stub_of.end()) {
            std::erase(p.in_order, it->second);
            std::erase(p.out_order, it->second);
        }
        out.at.emplace(v, std::move(p));
    }
    return out;
}

PolarizationStructure polarization_via_npp_auto(const Drawing& d) {
    bool any_isolated = false;
    for (const std::string& v : d.graph().vertex_ids())
        if (d.graph().degree(v) == 0) any_isolated = true;
    if (!any_isolated) return polarization_via_npp(d);

    auto [virtualized, vmap] = virtualize_isolated_drawing(d);
    const PolarizationStructure full = polarization_via_npp(virtualized);
    PolarizationStructure out;
    for (const std::string& v : d.graph().vertex_ids()) {
        if (auto it = full.at.find(v); it != full.at.end())
            out.at.emplace(v, it->second);
        else
            out.at.emplace(v, Polarization{v, {}, {}}); // virtualized-away isolated vertex
    }
    return out;
}

Drawing restrict_extension(const Drawing& extended, const ExtensionMapping& mapping,
                           const VirtualizationMapping& virtualization) {
    std::map<std::string, Point> positions = extended.positions();
    std::map<std::string, std::vector<Point>> bends = extended.all_bends();
    std::vector<std::string> vertices = extended.graph().vertex_ids();
    std::vector<Edge> edges = extended.graph().edges();

    auto drop_vertex = [&](const std::string& v) {
        std::erase(vertices, v);
        positions.erase(v);
    };
    auto drop_edge = [&](const std::string& e) {
        std::erase_if(edges, [&](const Edge& ed) { return ed.id == e; });
        bends.erase(e);
    };

    for (const StubEntry& s : mapping.input_stubs) {
        drop_edge(s.edge);
        drop_vertex(s.leaf);
    }
    for (const StubEntry& s : mapping.output_stubs) {
        drop_edge(s.edge);
        drop_vertex(s.leaf);
    }
    for (const VirtualizedVertex& m : virtualization) {
        const Point top = extended.position(m.top);
        const Point bottom = extended.position(m.bottom);
        drop_edge(m.edge);
        drop_vertex(m.top);
        drop_vertex(m.bottom);
        vertices.push_back(m.vertex);
        positions[m.vertex] =
            Point{(top.x + bottom.x) / Rat(2), (top.y + bottom.y) / Rat(2)};
    }
    return Drawing::make(Graph::make(std::move(vertices), std::move(edges)),
                         std::move(positions), std::move(bends));
}

} // namespace upward
