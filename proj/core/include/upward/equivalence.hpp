#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "upward/embedding.hpp"
#include "upward/geometry.hpp"

namespace upward {

enum class Verdict { Equivalent, NotEquivalent, Incomparable };

const char* to_string(Verdict v);

// Evidence attached to an equivalence report. For a negative verdict the
// first differing invariant is reported: the smallest vertex whose
// polarization differs, else the component whose outer face or containment
// record differs in the extended signatures.
struct PolarizationEvidence {
    std::string vertex;
    Polarization a, b;
};

struct OuterFaceEvidence {
    std::string component;
    std::vector<Dart> a, b;
};

struct ContainmentEvidence {
    std::string component;
    std::optional<Containment> a, b;
};

struct GraphMismatchEvidence {
    std::string detail;
};

using Evidence = std::variant<std::monostate, PolarizationEvidence, OuterFaceEvidence,
                              ContainmentEvidence, GraphMismatchEvidence>;

struct EquivalenceReport {
    Verdict verdict = Verdict::Incomparable;
    std::string digest_a, digest_b; // signature digests of the NPP-extensions
    Evidence evidence;
};

// Decides whether two drawings of the same labeled graph are connected by a
// deformation (a planar isotopy all of whose intermediate stages are upward
// planar drawings): both are virtualized and NPP-extended with the shared
// deterministic naming, and the verdict is signature equality of the
// extensions. Differing labeled graphs are Incomparable. On an Equivalent
// verdict the drawing-induced polarizations are cross-checked vertexwise; a
// mismatch there is an internal error, never a user-facing verdict.
EquivalenceReport equivalent(const Drawing& a, const Drawing& b);

struct PerturbResult {
    Drawing drawing;
    bool changed = false;     // false when every retry was rejected
    std::string kind;         // jitter | translate | scale | bend-insert | bend-remove | none
    Rat sq_displacement_bound; // squared bound the move was sampled under
};

// One seeded random deformation move. Coordinate moves keep every point
// within a displacement budget strictly below a quarter of the clearance,
// which together with per-frame validity makes the whole linear
// interpolation between consecutive frames valid (see verify_chain). Moves
// that would break validity are resampled a bounded number of times, after
// which the drawing is returned unchanged with `changed == false`.
PerturbResult perturb_step(const Drawing& d, std::uint64_t seed, std::uint64_t step_index);

struct ChainStep {
    std::string kind;
    Rat sq_displacement_bound;
};

// Witness of a recumbent isotopy: consecutive drawings differ either only
// in coordinates (same polyline structure, every point moving strictly less
// than min_clearance/4) or by one geometric no-op bend insertion/removal.
struct DeformationChain {
    std::vector<Drawing> frames;
    std::vector<ChainStep> steps; // steps[i] describes frames[i] -> frames[i+1]
};

DeformationChain make_chain(const Drawing& d, std::size_t steps, std::uint64_t seed);

struct ChainCheck {
    bool ok = true;
    std::optional<std::size_t> first_failure; // frame index where the check failed
    std::string reason;
};

// Total check of all DeformationChain invariants. A true verdict certifies
// a genuine recumbent isotopy: linear interpolation of strictly descending
// polylines stays strictly descending, and with every point moving less
// than c/4 while non-adjacent features start at least c apart, no two
// features can meet mid-interpolation.
ChainCheck verify_chain(const DeformationChain& chain);

} // namespace upward
