#include "upward/equivalence.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "upward/errors.hpp"
#include "upward/formats.hpp"
#include "upward/npp.hpp"

namespace upward {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::NotEquivalent: return "not-equivalent";
    case Verdict::Incomparable: return "incomparable";
    }
    return "?";
}

namespace {

void require_valid(const Drawing& d, const char* which) {
    const ValidationReport r = validate_drawing(d);
    if (!r.ok)
        throw PreconditionError(std::string("equivalent: drawing ") + which +
                                " is invalid: " + r.violations.front().message);
}

std::optional<std::string> graph_mismatch(const Graph& a, const Graph& b) {
    if (a.vertex_ids() != b.vertex_ids()) return "vertex sets differ";
    if (a.edges() != b.edges()) {
        for (std::size_t i = 0; i < std::min(a.edges().size(), b.edges().size()); ++i) {
            const Edge& ea = a.edges()[i];
            const Edge& eb = b.edges()[i];
            if (!(ea == eb))
                return "edge \"" + ea.id + "\" differs between the inputs";
        }
        return "edge sets differ";
    }
    return std::nullopt;
}

Evidence difference_evidence(const Drawing& a, const Drawing& b, const EmbeddingSignature& sa,
                             const EmbeddingSignature& sb) {
    // First differing invariant, smallest vertex first: the drawing-induced
    // polarizations of the original graph.
    const PolarizationStructure pa = extract_polarization(a);
    const PolarizationStructure pb = extract_polarization(b);
    for (const auto& [v, pol_a] : pa.at)
        if (!(pol_a == pb.at.at(v))) return PolarizationEvidence{v, pol_a, pb.at.at(v)};

    // Same polarizations: the extensions' rotations coincide, so the
    // signatures can only differ in an outer-face choice or a containment
    // record of some component.
    for (const auto& [key, comp_a] : sa.components) {
        const ComponentSignature& comp_b = sb.components.at(key);
        if (comp_a.outer_walk != comp_b.outer_walk)
            return OuterFaceEvidence{key, comp_a.outer_walk, comp_b.outer_walk};
        if (comp_a.parent != comp_b.parent)
            return ContainmentEvidence{key, comp_a.parent, comp_b.parent};
    }
    throw std::logic_error("internal: signatures differ without a reportable difference");
}

} // namespace

EquivalenceReport equivalent(const Drawing& a, const Drawing& b) {
    require_valid(a, "A");
    require_valid(b, "B");

    EquivalenceReport report;
    if (auto mismatch = graph_mismatch(a.graph(), b.graph())) {
        report.verdict = Verdict::Incomparable;
        report.evidence = GraphMismatchEvidence{*mismatch};
        return report;
    }

    const AutoExtended ea = npp_extend_auto(a);
    const AutoExtended eb = npp_extend_auto(b);
    const EmbeddingSignature sa = signature(ea.extended.drawing);
    const EmbeddingSignature sb = signature(eb.extended.drawing);
    report.digest_a = signature_digest(sa);
    report.digest_b = signature_digest(sb);

    if (sa == sb) {
        report.verdict = Verdict::Equivalent;
        // Consistency of the two characterizations: equal extended
        // signatures must mean equal drawing-induced polarizations.
        if (!(extract_polarization(a) == extract_polarization(b)))
            throw std::logic_error(
                "internal: equal extended signatures but differing polarizations");
        return report;
    }
    report.verdict = Verdict::NotEquivalent;
    report.evidence = difference_evidence(a, b, sa, sb);
    return report;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t step) {
    // splitmix64 over the pair, so (seed, step) pins the whole move.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (step + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// k/64 with k uniform in [-64, 64]; exact rational in [-1, 1].
Rat unit_fraction(std::mt19937_64& rng) {
    const long k = static_cast<long>(rng() % 129) - 64;
    return Rat(k, 64);
}

struct BendSlot {
    std::string edge;
    std::size_t index;
};

Drawing with_point_moved(const Drawing& d, const std::optional<std::string>& vertex,
                         const std::optional<BendSlot>& bend, const Rat& dx, const Rat& dy) {
    std::map<std::string, Point> positions = d.positions();
    std::map<std::string, std::vector<Point>> bends = d.all_bends();
    if (vertex) {
        positions[*vertex].x += dx;
        positions[*vertex].y += dy;
    } else {
        Point& p = bends[bend->edge][bend->index];
        p.x += dx;
        p.y += dy;
    }
    return Drawing::make(d.graph(), std::move(positions), std::move(bends));
}

} // namespace

PerturbResult perturb_step(const Drawing& d, std::uint64_t seed, std::uint64_t step_index) {
    require_valid(d, "perturb_step input");
    std::mt19937_64 rng(mix_seed(seed, step_index));

    const Clearance c = min_clearance(d);
    // Per-coordinate budget of at most room/8 caps the displacement at
    // room/(4*sqrt2), strictly inside the quarter-clearance bound the chain
    // invariant needs. Snapped to a power of two so repeated steps keep
    // coordinate denominators dyadic instead of compounding.
    const Rat room = c.finite ? sqrt_lower_bound(c.sq) : Rat(1);
    const Rat budget = pow2_floor(room / Rat(8));
    const Rat bound_sq = Rat(2) * budget * budget;

    std::vector<std::string> vertex_targets = d.graph().vertex_ids();
    std::vector<BendSlot> bend_targets;
    for (const Edge& e : d.graph().edges())
        for (std::size_t i = 0; i < d.bends(e.id).size(); ++i) bend_targets.push_back({e.id, i});

    auto finish = [&](Drawing out, const char* kind) {
        return PerturbResult{std::move(out), true, kind, bound_sq};
    };

    for (int attempt = 0; attempt < 32; ++attempt) {
        const std::uint64_t kind = rng() % 5;
        if (kind == 0) { // jitter one vertex or bend
            const std::size_t total = vertex_targets.size() + bend_targets.size();
            const std::size_t pick = rng() % total;
            const Rat dx = budget * unit_fraction(rng);
            const Rat dy = budget * unit_fraction(rng);
            Drawing moved =
                pick < vertex_targets.size()
                    ? with_point_moved(d, vertex_targets[pick], std::nullopt, dx, dy)
                    : with_point_moved(d, std::nullopt, bend_targets[pick - vertex_targets.size()],
                                       dx, dy);
            if (validate_drawing(moved).ok) return finish(std::move(moved), "jitter");
        } else if (kind == 1) { // small global translation
            const Rat dx = budget * unit_fraction(rng);
            const Rat dy = budget * unit_fraction(rng);
            return finish(transform(d, Translate{dx, dy}), "translate");
        } else if (kind == 2) { // small positive scaling about the origin
            Rat extent(0);
            for (const auto& [v, p] : d.positions())
                extent = std::max(extent, std::max(p.x.abs(), p.y.abs()));
            for (const auto& [e, pts] : d.all_bends())
                for (const Point& p : pts)
                    extent = std::max(extent, std::max(p.x.abs(), p.y.abs()));
            if (extent.sign() == 0) return finish(d, "scale"); // lone origin point
            const Rat slack = pow2_floor(std::min(budget / extent, Rat(1, 2)));
            const Rat s = Rat(1) + slack * unit_fraction(rng);
            return finish(transform(d, ScalePositive{s, s}), "scale");
        } else if (kind == 3) { // no-op bend insertion at a segment midpoint
            if (d.graph().edges().empty()) continue;
            const Edge& e = d.graph().edges()[rng() % d.graph().edges().size()];
            const auto segs = d.segments(e.id);
            const std::size_t i = rng() % segs.size();
            const Point mid{(segs[i].a.x + segs[i].b.x) / Rat(2),
                            (segs[i].a.y + segs[i].b.y) / Rat(2)};
            std::map<std::string, std::vector<Point>> bends = d.all_bends();
            auto& list = bends[e.id];
            list.insert(list.begin() + static_cast<long>(i), mid);
            Drawing out = Drawing::make(d.graph(), d.positions(), std::move(bends));
            if (validate_drawing(out).ok) return finish(std::move(out), "bend-insert");
        } else { // removal of a collinear bend
            std::vector<BendSlot> removable;
            for (const Edge& e : d.graph().edges()) {
                const auto pts = d.polyline(e.id);
                for (std::size_t i = 1; i + 1 < pts.size(); ++i)
                    if (orientation(pts[i - 1], pts[i], pts[i + 1]) == 0)
                        removable.push_back({e.id, i - 1});
            }
            if (removable.empty()) continue;
            const BendSlot slot = removable[rng() % removable.size()];
            std::map<std::string, std::vector<Point>> bends = d.all_bends();
            auto& list = bends[slot.edge];
            list.erase(list.begin() + static_cast<long>(slot.index));
            Drawing out = Drawing::make(d.graph(), d.positions(), std::move(bends));
            if (validate_drawing(out).ok) return finish(std::move(out), "bend-remove");
        }
    }
    return PerturbResult{d, false, "none", bound_sq};
}

DeformationChain make_chain(const Drawing& d, std::size_t steps, std::uint64_t seed) {
    DeformationChain chain;
    chain.frames.push_back(d);
    for (std::size_t i = 0; i < steps; ++i) {
        PerturbResult r = perturb_step(chain.frames.back(), seed, i);
        chain.steps.push_back({r.kind, r.sq_displacement_bound});
        chain.frames.push_back(std::move(r.drawing));
    }
    return chain;
}

namespace {

ChainCheck fail(std::size_t index, std::string reason) {
    return ChainCheck{false, index, std::move(reason)};
}

bool same_polyline_structure(const Drawing& a, const Drawing& b) {
    for (const Edge& e : a.graph().edges())
        if (a.bends(e.id).size() != b.bends(e.id).size()) return false;
    return true;
}

// Checks that `longer` equals `shorter` with exactly one extra point that
// lies on the segment between its neighbors: a geometric no-op refinement.
bool is_noop_refinement(const std::vector<Point>& shorter, const std::vector<Point>& longer) {
    if (longer.size() != shorter.size() + 1) return false;
    std::size_t j = 0;
    while (j < shorter.size() && shorter[j] == longer[j]) ++j;
    // j is the insertion index; endpoints always match, so 1 <= j < size.
    if (j == 0 || j + 1 >= longer.size()) return false;
    for (std::size_t k = j; k < shorter.size(); ++k)
        if (!(shorter[k] == longer[k + 1])) return false;
    return point_on_segment(longer[j], Segment{longer[j - 1], longer[j + 1]});
}

} // namespace

ChainCheck verify_chain(const DeformationChain& chain) {
    if (chain.frames.empty()) return fail(0, "chain has no frames");
    for (std::size_t i = 0; i < chain.frames.size(); ++i) {
        const ValidationReport r = validate_drawing(chain.frames[i]);
        if (!r.ok) return fail(i, "frame " + std::to_string(i) + " is invalid: " +
                                      r.violations.front().message);
        if (!(chain.frames[i].graph() == chain.frames[0].graph()))
            return fail(i, "frame " + std::to_string(i) + " changes the graph");
    }

    for (std::size_t i = 0; i + 1 < chain.frames.size(); ++i) {
        const Drawing& cur = chain.frames[i];
        const Drawing& nxt = chain.frames[i + 1];

        if (same_polyline_structure(cur, nxt)) {
            Rat max_sq(0);
            for (const auto& [v, p] : cur.positions())
                max_sq = std::max(max_sq, sq_dist(p, nxt.position(v)));
            for (const Edge& e : cur.graph().edges()) {
                const auto& ba = cur.bends(e.id);
                const auto& bb = nxt.bends(e.id);
                for (std::size_t k = 0; k < ba.size(); ++k)
                    max_sq = std::max(max_sq, sq_dist(ba[k], bb[k]));
            }
            const Clearance c = min_clearance(cur);
            if (c.finite && !(max_sq * Rat(16) < c.sq))
                return fail(i + 1, "step " + std::to_string(i) +
                                       " moves a point by at least a quarter of the clearance");
            continue;
        }

        // Structure changed: must be one bend inserted or removed, as a
        // geometric no-op, with everything else untouched.
        if (!(cur.positions() == nxt.positions()))
            return fail(i + 1, "step " + std::to_string(i) +
                                   " changes structure and vertex positions at once");
        std::size_t changed = 0;
        bool ok = true;
        for (const Edge& e : cur.graph().edges()) {
            const auto pa = cur.polyline(e.id);
            const auto pb = nxt.polyline(e.id);
            if (pa == pb) continue;
            ++changed;
            if (!is_noop_refinement(pa, pb) && !is_noop_refinement(pb, pa)) ok = false;
        }
        if (!ok || changed != 1)
            return fail(i + 1, "step " + std::to_string(i) +
                                   " is not a single no-op bend insertion or removal");
    }
    return ChainCheck{};
}

} // namespace upward
