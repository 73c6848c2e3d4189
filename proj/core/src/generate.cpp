#include "upward/generate.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "upward/errors.hpp"

namespace upward {

namespace {

// Candidate straight edge between the points of u and v: accepted when it
// meets the existing segments at most in the shared endpoint vertices and
// passes through no other vertex point.
bool candidate_fits(const std::vector<Point>& pos, const std::vector<Segment>& segs,
                    const std::vector<std::pair<std::size_t, std::size_t>>& seg_ends,
                    std::size_t u, std::size_t v) {
    const Segment cand{pos[u], pos[v]};
    for (std::size_t w = 0; w < pos.size(); ++w) {
        if (w == u || w == v) continue;
        if (point_on_segment(pos[w], cand)) return false;
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const SegIntersection hit = intersect_segments(cand, segs[i]);
        if (hit.kind == SegContact::None) continue;
        if (hit.kind == SegContact::Overlap) return false;
        const auto [a, b] = seg_ends[i];
        bool shared = false;
        for (std::size_t x : {a, b})
            if ((x == u || x == v) && hit.at == pos[x]) shared = true;
        if (!shared) return false;
    }
    return true;
}

} // namespace

GenerateResult generate(const GeneratorConfig& config) {
    if (config.vertex_count < 1) throw DomainError("generator needs at least one vertex");
    if (config.coord_min >= config.coord_max) throw DomainError("empty coordinate range");
    const unsigned long span = static_cast<unsigned long>(config.coord_max - config.coord_min) + 1;
    if (span < config.vertex_count)
        throw DomainError("coordinate range holds fewer distinct y values than vertices");

    std::mt19937_64 rng(config.seed);
    auto draw = [&](unsigned long n) { return static_cast<long>(rng() % n); };

    std::vector<Point> pos;
    std::set<long> used_y;
    for (std::size_t i = 0; i < config.vertex_count; ++i) {
        const long x = config.coord_min + draw(span);
        long y = config.coord_min + draw(span);
        while (used_y.count(y)) y = config.coord_min + draw(span);
        used_y.insert(y);
        pos.push_back(Point{Rat(x), Rat(y)});
    }

    std::vector<Edge> edges;
    std::vector<Segment> segs;
    std::vector<std::pair<std::size_t, std::size_t>> seg_ends; // (tail idx, head idx)
    for (std::size_t j = 0; j < config.target_edge_count; ++j) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < config.max_attempts && !placed; ++attempt) {
            std::size_t u = static_cast<std::size_t>(draw(config.vertex_count));
            std::size_t v = static_cast<std::size_t>(draw(config.vertex_count));
            if (u == v) continue;
            if (pos[u].y < pos[v].y) std::swap(u, v); // tail above head
            if (!candidate_fits(pos, segs, seg_ends, u, v)) continue;
            edges.push_back({"e" + std::to_string(edges.size()), "v" + std::to_string(u),
                             "v" + std::to_string(v)});
            segs.push_back({pos[u], pos[v]});
            seg_ends.push_back({u, v});
            placed = true;
        }
        if (!placed) break; // attempts exhausted; report what we have
    }

    std::vector<std::string> ids;
    std::map<std::string, Point> positions;
    for (std::size_t i = 0; i < config.vertex_count; ++i) {
        ids.push_back("v" + std::to_string(i));
        positions["v" + std::to_string(i)] = pos[i];
    }
    GenerateResult result{
        Drawing::make(Graph::make(std::move(ids), std::move(edges)), std::move(positions), {}),
        segs.size()};
    if (!validate_drawing(result.drawing).ok)
        throw std::logic_error("internal: generator produced an invalid drawing");
    return result;
}

} // namespace upward
