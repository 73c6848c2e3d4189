#include "upward/render.hpp"

#include <algorithm>
#include <sstream>

#include "upward/embedding.hpp"

namespace upward {

namespace {

// Fixed-point decimal with three fractional digits (floor), deterministic
// across runs; SVG needs no more precision than that here.
std::string svg_num(const Rat& r) {
    const Rat scaled = r * Rat(1000);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.raw().get_num().get_mpz_t(),
               scaled.raw().get_den().get_mpz_t());
    const bool neg = q < 0;
    mpz_class a = neg ? mpz_class(-q) : q;
    mpz_class ip = a / 1000;
    unsigned long frac = mpz_class(a % 1000).get_ui();
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%03lu", frac);
        std::string f(buf);
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

struct Frame {
    Rat x_min, y_max, margin, scale;

    Point to_screen(const Point& p) const {
        return {(p.x - x_min + margin) * scale, (y_max - p.y + margin) * scale};
    }
};

// Direction scaled to roughly unit length: dividing by a rational lower
// bound of the true length gives a vector of length in [1, 2).
Vec unitish(const Vec& v) {
    const Rat len_sq = v.x * v.x + v.y * v.y;
    if (len_sq.sign() == 0) return {Rat(0), Rat(0)};
    const Rat len = sqrt_lower_bound(len_sq);
    return {v.x / len, v.y / len};
}

} // namespace

std::string render_svg(const Drawing& d, const RenderOptions& options) {
    // Bounding box over every drawn point.
    bool first = true;
    Rat x_min(0), x_max(0), y_min(0), y_max(0);
    auto grow = [&](const Point& p) {
        if (first) {
            x_min = x_max = p.x;
            y_min = y_max = p.y;
            first = false;
            return;
        }
        x_min = std::min(x_min, p.x);
        x_max = std::max(x_max, p.x);
        y_min = std::min(y_min, p.y);
        y_max = std::max(y_max, p.y);
    };
    for (const auto& [v, p] : d.positions()) grow(p);
    for (const auto& [e, pts] : d.all_bends())
        for (const Point& p : pts) grow(p);
    if (first) grow(Point{Rat(0), Rat(0)});

    const Rat extent = std::max(x_max - x_min, y_max - y_min);
    const Rat margin = std::max(extent / Rat(10), Rat(1));
    const Frame frame{x_min, y_max, margin, Rat(32)};
    const Rat width = (x_max - x_min + margin * Rat(2)) * frame.scale;
    const Rat height = (y_max - y_min + margin * Rat(2)) * frame.scale;
    const Rat vertex_r = frame.scale / Rat(5);
    const Rat arrow = frame.scale / Rat(2);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << svg_num(width) << " "
        << svg_num(height) << "\">\n";
    svg << "  <style>\n"
           "    .edge { stroke: #222222; stroke-width: 1.5; fill: none; }\n"
           "    .arrow { fill: #222222; }\n"
           "    .vertex { fill: #222222; }\n"
           "    .label { font: 12px sans-serif; fill: #222222; }\n"
           "    .pol { font: 10px sans-serif; fill: #1553a0; }\n"
           "    .violation { fill: none; stroke: #c0392b; stroke-width: 1.5; }\n"
           "  </style>\n";

    for (const Edge& e : d.graph().edges()) {
        const auto pts = d.polyline(e.id);
        svg << "  <path class=\"edge\" id=\"edge-" << e.id << "\" d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point s = frame.to_screen(pts[i]);
            svg << (i == 0 ? "M " : " L ") << svg_num(s.x) << " " << svg_num(s.y);
        }
        svg << "\"/>\n";

        // Arrowhead at the midpoint of the middle segment, as in hand-drawn
        // upward diagrams.
        const auto segs = d.segments(e.id);
        const Segment& ms = segs[segs.size() / 2];
        const Point mid{(ms.a.x + ms.b.x) / Rat(2), (ms.a.y + ms.b.y) / Rat(2)};
        const Vec u = unitish(ms.b - ms.a);
        if (!(u == Vec{Rat(0), Rat(0)})) {
            const Vec n{-u.y, u.x};
            const Rat h = arrow / frame.scale; // arrow size in world units
            const Point tip{mid.x + u.x * h / Rat(2), mid.y + u.y * h / Rat(2)};
            const Point b1{mid.x - u.x * h / Rat(2) + n.x * h / Rat(3),
                           mid.y - u.y * h / Rat(2) + n.y * h / Rat(3)};
            const Point b2{mid.x - u.x * h / Rat(2) - n.x * h / Rat(3),
                           mid.y - u.y * h / Rat(2) - n.y * h / Rat(3)};
            const Point st = frame.to_screen(tip), s1 = frame.to_screen(b1), s2 = frame.to_screen(b2);
            svg << "  <path class=\"arrow\" d=\"M " << svg_num(st.x) << " " << svg_num(st.y)
                << " L " << svg_num(s1.x) << " " << svg_num(s1.y) << " L " << svg_num(s2.x) << " "
                << svg_num(s2.y) << " Z\"/>\n";
        }
    }

    for (const auto& [v, p] : d.positions()) {
        const Point s = frame.to_screen(p);
        svg << "  <circle class=\"vertex\" id=\"vertex-" << v << "\" cx=\"" << svg_num(s.x)
            << "\" cy=\"" << svg_num(s.y) << "\" r=\"" << svg_num(vertex_r) << "\"/>\n";
        if (options.show_ids)
            svg << "  <text class=\"label\" x=\"" << svg_num(s.x + vertex_r * Rat(2)) << "\" y=\""
                << svg_num(s.y - vertex_r * Rat(2)) << "\">" << v << "</text>\n";
    }

    if (options.show_polarization_labels) {
        const PolarizationStructure ps = extract_polarization(d);
        auto label = [&](const std::string& e, bool incoming, std::size_t index) {
            auto pts = d.polyline(e);
            if (incoming) std::reverse(pts.begin(), pts.end());
            const Vec u = unitish(pts[1] - pts[0]);
            const Rat dist = margin / Rat(2);
            const Point at{pts[0].x + u.x * dist, pts[0].y + u.y * dist};
            const Point s = frame.to_screen(at);
            svg << "  <text class=\"pol pol-" << (incoming ? "in" : "out") << "\" x=\""
                << svg_num(s.x) << "\" y=\"" << svg_num(s.y) << "\">" << index + 1 << "</text>\n";
        };
        for (const auto& [v, p] : ps.at) {
            for (std::size_t i = 0; i < p.in_order.size(); ++i) label(p.in_order[i], true, i);
            for (std::size_t i = 0; i < p.out_order.size(); ++i) label(p.out_order[i], false, i);
        }
    }

    const ValidationReport report = validate_drawing(d);
    for (const Violation& viol : report.violations) {
        if (!viol.where) continue;
        const Point s = frame.to_screen(*viol.where);
        svg << "  <circle class=\"violation\" data-code=\"" << to_string(viol.code) << "\" cx=\""
            << svg_num(s.x) << "\" cy=\"" << svg_num(s.y) << "\" r=\"" << svg_num(vertex_r * Rat(3))
            << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace upward
