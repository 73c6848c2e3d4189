#pragma once

#include <map>
#include <string>
#include <vector>

#include "upward/generate.hpp"
#include "upward/geometry.hpp"
#include "upward/graph.hpp"

// Shared hand-built drawings. Coordinates are small integers or short
// decimals so every expected value can be derived by hand or by the
// brute-force oracles in oracles.hpp.
namespace fixtures {

using namespace upward;

inline Rat R(const std::string& s) { return Rat::parse(s); }
inline Point P(const std::string& x, const std::string& y) { return {R(x), R(y)}; }

inline Drawing make_drawing(std::vector<std::string> vertices, std::vector<Edge> edges,
                            std::map<std::string, Point> pos,
                            std::map<std::string, std::vector<Point>> bends = {}) {
    return Drawing::make(Graph::make(std::move(vertices), std::move(edges)), std::move(pos),
                         std::move(bends));
}

// a(0,4) -> b(0,2) -> {c(-1,0), d(1,0)}: one source, two sink leaves.
inline Drawing d_tree() {
    return make_drawing({"a", "b", "c", "d"},
                        {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "b", "d"}},
                        {{"a", P("0", "4")},
                         {"b", P("0", "2")},
                         {"c", P("-1", "0")},
                         {"d", P("1", "0")}});
}

// a(0,4) over b(-1,2), c(1,2), joined at d(0,0).
inline Drawing d_diamond() {
    return make_drawing(
        {"a", "b", "c", "d"},
        {{"e1", "a", "b"}, {"e2", "a", "c"}, {"e3", "b", "d"}, {"e4", "c", "d"}},
        {{"a", P("0", "4")}, {"b", P("-1", "2")}, {"c", P("1", "2")}, {"d", P("0", "0")}});
}

// Two straight edges crossing at (0,1): invalid on purpose.
inline Drawing d_cross() {
    return make_drawing({"a", "b", "c", "d"}, {{"e1", "a", "d"}, {"e2", "c", "b"}},
                        {{"a", P("-1", "2")},
                         {"b", P("-1", "0")},
                         {"c", P("1", "2")},
                         {"d", P("1", "0")}});
}

inline Drawing single_edge() {
    return make_drawing({"a", "b"}, {{"e", "a", "b"}}, {{"a", P("0", "1")}, {"b", P("0", "0")}});
}

inline Drawing two_disjoint_edges() {
    return make_drawing({"a", "b", "c", "d"}, {{"e1", "a", "b"}, {"e2", "c", "d"}},
                        {{"a", P("0", "1")},
                         {"b", P("0", "0")},
                         {"c", P("3", "1")},
                         {"d", P("3", "0")}});
}

// Two parallel a->b edges, the second bent out to the right.
inline Drawing parallel_pair() {
    return make_drawing({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}},
                        {{"a", P("0", "2")}, {"b", P("0", "0")}},
                        {{"e2", {P("1", "1")}}});
}

inline Drawing lone_vertex() {
    return make_drawing({"v"}, {}, {{"v", P("0", "0")}});
}

// Acyclic 9-vertex drawing with one parallel pair (e9 straight, e13 bent),
// three non-leaf sources (v2, v4, v8) and two non-leaf sinks (v3, v9).
inline Drawing fig1() {
    return make_drawing(
        {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"},
        {{"e01", "v2", "v1"},
         {"e02", "v2", "v3"},
         {"e03", "v4", "v3"},
         {"e04", "v6", "v5"},
         {"e05", "v6", "v7"},
         {"e06", "v1", "v5"},
         {"e07", "v8", "v5"},
         {"e08", "v8", "v6"},
         {"e09", "v4", "v7"},
         {"e10", "v7", "v9"},
         {"e11", "v5", "v9"},
         {"e13", "v4", "v7"}},
        {{"v1", P("-3", "-3")},
         {"v2", P("0.5", "2")},
         {"v3", P("3", "-2.5")},
         {"v4", P("7", "0")},
         {"v5", P("-0.5", "-7.5")},
         {"v6", P("3.5", "-5.5")},
         {"v7", P("6", "-8.5")},
         {"v8", P("0.5", "-2")},
         {"v9", P("2", "-11")}},
        {{"e13", {P("8", "-2.5"), P("8.5", "-5.5"), P("7.5", "-7.5")}}});
}

// Boxed drawing with boundary leaves, a parallel pair (e10/e14), a separate
// vertical edge component and four isolated vertices sitting in faces.
inline Drawing fig2() {
    return make_drawing(
        {"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8", "u9", "u10", "w1", "w2", "p1", "p2",
         "p3", "p4"},
        {{"f01", "u1", "u2"},
         {"f02", "u3", "u2"},
         {"f03", "u3", "u4"},
         {"f04", "u4", "u5"},
         {"f05", "u2", "u6"},
         {"f06", "u2", "u4"},
         {"f07", "u7", "u8"},
         {"f08", "u3", "u8"},
         {"f09", "u4", "u9"},
         {"f10", "u8", "u9"},
         {"f11", "u3", "u10"},
         {"f12", "u8", "u10"},
         {"f13", "w1", "w2"},
         {"f14", "u8", "u9"}},
        {{"u1", P("-1", "1.5")},
         {"u2", P("0", "-1")},
         {"u3", P("1.5", "0.5")},
         {"u4", P("0.5", "-3.5")},
         {"u5", P("0.5", "-6.5")},
         {"u6", P("-1.5", "-4.5")},
         {"u7", P("4", "1.5")},
         {"u8", P("4", "-2")},
         {"u9", P("3", "-5.5")},
         {"u10", P("2", "-3.5")},
         {"w1", P("6.5", "1.5")},
         {"w2", P("6.5", "-6.5")},
         {"p1", P("5.5", "-1")},
         {"p2", P("2.7", "-1.7")},
         {"p3", P("0.35", "0.45")},
         {"p4", P("5.5", "-4.5")}},
        {{"f14", {P("4.5", "-3"), P("4", "-4.5")}}});
}

inline PlaneBox fig2_box() { return PlaneBox::make(R("-3"), R("8.5"), R("-6.5"), R("1.5")); }

// The corpus used by property suites: small seeded drawings with n up to 12
// vertices and m up to 20 attempted edges.
inline GeneratorConfig corpus_config(std::uint64_t seed) {
    GeneratorConfig c;
    c.seed = seed;
    c.vertex_count = 1 + static_cast<std::size_t>(seed % 12);
    c.target_edge_count = static_cast<std::size_t>(seed % 21);
    return c;
}

inline std::vector<Drawing> corpus(std::uint64_t seeds) {
    std::vector<Drawing> out;
    out.reserve(seeds);
    for (std::uint64_t s = 0; s < seeds; ++s) out.push_back(generate(corpus_config(s)).drawing);
    return out;
}

} // namespace fixtures
