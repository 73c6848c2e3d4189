#include "upward/formats.hpp"

#include <openssl/evp.h>

#include <json.hpp>

#include "upward/errors.hpp"

namespace upward {

using nlohmann::json; // std::map-backed: object keys serialize sorted

namespace {

constexpr int kFormatVersion = 1;

// Canonical text form of any document: two-space indent, sorted keys,
// trailing newline.
std::string canonical(const json& j) { return j.dump(2) + "\n"; }

const json& field(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string(where) + ": missing key \"" + key + "\"");
    return *it;
}

std::string string_field(const json& obj, const char* key, const char* where) {
    const json& v = field(obj, key, where);
    if (!v.is_string())
        throw ParseError(std::string(where) + ": key \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Rat rat_field(const json& obj, const char* key, const char* where) {
    return Rat::parse(string_field(obj, key, where));
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw ParseError(std::string(where) + ": unknown key \"" + it.key() + "\"");
    }
}

void check_version(const json& obj, const char* where) {
    const json& v = field(obj, "format_version", where);
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
        throw ParseError(std::string(where) + ": unsupported format_version");
}

json point_to_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

Point point_from_json(const json& j, const char* where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError(std::string(where) + ": a point must be a pair of coordinate strings");
    return Point{Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>())};
}

json drawing_to_json(const Drawing& d) {
    json vertices = json::array();
    for (const std::string& v : d.graph().vertex_ids()) {
        const Point& p = d.position(v);
        vertices.push_back({{"id", v}, {"x", p.x.str()}, {"y", p.y.str()}});
    }
    json edges = json::array();
    for (const Edge& e : d.graph().edges()) {
        json bends = json::array();
        for (const Point& b : d.bends(e.id)) bends.push_back(point_to_json(b));
        edges.push_back(
            {{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"bends", std::move(bends)}});
    }
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Drawing drawing_from_json(const json& j, const char* where) {
    if (!j.is_object()) throw ParseError(std::string(where) + ": drawing must be an object");
    const json& jv = field(j, "vertices", where);
    const json& je = field(j, "edges", where);
    if (!jv.is_array() || !je.is_array())
        throw ParseError(std::string(where) + ": \"vertices\" and \"edges\" must be arrays");

    std::vector<std::string> vertex_ids;
    std::map<std::string, Point> positions;
    for (const json& v : jv) {
        if (!v.is_object()) throw ParseError(std::string(where) + ": vertex entries are objects");
        reject_unknown_keys(v, {"id", "x", "y"}, where);
        std::string id = string_field(v, "id", where);
        Point p{rat_field(v, "x", where), rat_field(v, "y", where)};
        if (positions.count(id)) throw StructuralError("duplicate vertex id \"" + id + "\"");
        positions.emplace(id, std::move(p));
        vertex_ids.push_back(std::move(id));
    }
    std::vector<Edge> edges;
    std::map<std::string, std::vector<Point>> bends;
    for (const json& e : je) {
        if (!e.is_object()) throw ParseError(std::string(where) + ": edge entries are objects");
        reject_unknown_keys(e, {"id", "tail", "head", "bends"}, where);
        Edge ed{string_field(e, "id", where), string_field(e, "tail", where),
                string_field(e, "head", where)};
        std::vector<Point> route;
        if (auto it = e.find("bends"); it != e.end()) {
            if (!it->is_array())
                throw ParseError(std::string(where) + ": \"bends\" must be an array");
            for (const json& b : *it) route.push_back(point_from_json(b, where));
        }
        if (bends.count(ed.id)) throw StructuralError("duplicate edge id \"" + ed.id + "\"");
        bends.emplace(ed.id, std::move(route));
        edges.push_back(std::move(ed));
    }
    return Drawing::make(Graph::make(std::move(vertex_ids), std::move(edges)),
                         std::move(positions), std::move(bends));
}

json extension_to_json(const ExtensionMapping& m) {
    auto stubs = [](const std::vector<StubEntry>& list) {
        json out = json::array();
        for (const StubEntry& s : list)
            out.push_back({{"vertex", s.vertex}, {"leaf", s.leaf}, {"edge", s.edge}});
        return out;
    };
    return json{{"input_stubs", stubs(m.input_stubs)}, {"output_stubs", stubs(m.output_stubs)}};
}

ExtensionMapping extension_from_json(const json& j, const char* where) {
    if (!j.is_object()) throw ParseError(std::string(where) + ": extension_mapping is an object");
    reject_unknown_keys(j, {"input_stubs", "output_stubs"}, where);
    auto stubs = [&](const char* key) {
        std::vector<StubEntry> out;
        const json& list = field(j, key, where);
        if (!list.is_array()) throw ParseError(std::string(where) + ": stub lists are arrays");
        for (const json& s : list) {
            reject_unknown_keys(s, {"vertex", "leaf", "edge"}, where);
            out.push_back({string_field(s, "vertex", where), string_field(s, "leaf", where),
                           string_field(s, "edge", where)});
        }
        return out;
    };
    return ExtensionMapping{stubs("input_stubs"), stubs("output_stubs")};
}

json virtualization_to_json(const VirtualizationMapping& m) {
    json out = json::array();
    for (const VirtualizedVertex& v : m)
        out.push_back(
            {{"vertex", v.vertex}, {"top", v.top}, {"bottom", v.bottom}, {"edge", v.edge}});
    return out;
}

VirtualizationMapping virtualization_from_json(const json& j, const char* where) {
    if (!j.is_array())
        throw ParseError(std::string(where) + ": virtualization_mapping is an array");
    VirtualizationMapping out;
    for (const json& v : j) {
        reject_unknown_keys(v, {"vertex", "top", "bottom", "edge"}, where);
        out.push_back({string_field(v, "vertex", where), string_field(v, "top", where),
                       string_field(v, "bottom", where), string_field(v, "edge", where)});
    }
    return out;
}

json parse_text(const std::string& text, const char* where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

json dart_to_json(const Dart& d) {
    return json::array({d.edge, d.forward ? "f" : "r"});
}

json walk_to_json(const std::vector<Dart>& walk) {
    json out = json::array();
    for (const Dart& d : walk) out.push_back(dart_to_json(d));
    return out;
}

json signature_to_json(const EmbeddingSignature& sig) {
    json comps = json::array();
    for (const auto& [key, cs] : sig.components) {
        json rotations = json::object();
        for (const auto& [v, edges] : cs.rotations) rotations[v] = edges;
        json parent;
        if (cs.parent)
            parent = json{{"component", cs.parent->component}, {"face", walk_to_json(cs.parent->face)}};
        comps.push_back({{"key", key},
                         {"rotations", std::move(rotations)},
                         {"outer_face", walk_to_json(cs.outer_walk)},
                         {"parent", std::move(parent)}});
    }
    return json{{"format_version", kFormatVersion}, {"components", std::move(comps)}};
}

} // namespace

Drawing parse_drawing(const std::string& text) {
    return parse_drawing_document(text).drawing;
}

DrawingDocument parse_drawing_document(const std::string& text) {
    const json j = parse_text(text, "drawing document");
    if (!j.is_object()) throw ParseError("drawing document: top level must be an object");
    reject_unknown_keys(
        j, {"format_version", "vertices", "edges", "extension_mapping", "virtualization_mapping"},
        "drawing document");
    check_version(j, "drawing document");

    DrawingDocument doc;
    doc.drawing = drawing_from_json(j, "drawing document");
    if (auto it = j.find("extension_mapping"); it != j.end())
        doc.extension = extension_from_json(*it, "drawing document");
    if (auto it = j.find("virtualization_mapping"); it != j.end())
        doc.virtualization = virtualization_from_json(*it, "drawing document");
    return doc;
}

std::string serialize_drawing(const Drawing& d) {
    json j = drawing_to_json(d);
    j["format_version"] = kFormatVersion;
    return canonical(j);
}

std::string serialize_drawing_document(const DrawingDocument& doc) {
    json j = drawing_to_json(doc.drawing);
    j["format_version"] = kFormatVersion;
    if (doc.extension) j["extension_mapping"] = extension_to_json(*doc.extension);
    if (doc.virtualization) j["virtualization_mapping"] = virtualization_to_json(*doc.virtualization);
    return canonical(j);
}

SignatureDocument make_signature_document(const EmbeddingSignature& sig) {
    return SignatureDocument{sig, signature_digest(sig)};
}

std::string serialize_signature_document(const SignatureDocument& doc) {
    json j = signature_to_json(doc.signature);
    j["digest"] = doc.digest;
    return canonical(j);
}

std::string signature_digest(const EmbeddingSignature& sig) {
    return sha256_hex(canonical(signature_to_json(sig)));
}

std::string serialize_chain(const DeformationChain& chain) {
    json frames = json::array();
    for (const Drawing& d : chain.frames) frames.push_back(drawing_to_json(d));
    json steps = json::array();
    for (const ChainStep& s : chain.steps)
        steps.push_back({{"kind", s.kind}, {"sq_displacement_bound", s.sq_displacement_bound.str()}});
    return canonical(json{{"format_version", kFormatVersion},
                          {"frames", std::move(frames)},
                          {"steps", std::move(steps)}});
}

DeformationChain parse_chain(const std::string& text) {
    const json j = parse_text(text, "chain document");
    if (!j.is_object()) throw ParseError("chain document: top level must be an object");
    reject_unknown_keys(j, {"format_version", "frames", "steps"}, "chain document");
    check_version(j, "chain document");

    DeformationChain chain;
    const json& frames = field(j, "frames", "chain document");
    if (!frames.is_array()) throw ParseError("chain document: \"frames\" must be an array");
    for (const json& f : frames) {
        reject_unknown_keys(f, {"vertices", "edges"}, "chain frame");
        chain.frames.push_back(drawing_from_json(f, "chain frame"));
    }
    if (auto it = j.find("steps"); it != j.end()) {
        if (!it->is_array()) throw ParseError("chain document: \"steps\" must be an array");
        for (const json& s : *it) {
            reject_unknown_keys(s, {"kind", "sq_displacement_bound"}, "chain step");
            chain.steps.push_back({string_field(s, "kind", "chain step"),
                                   Rat::parse(string_field(s, "sq_displacement_bound", "chain step"))});
        }
    }
    return chain;
}

std::string serialize_validation_report(const ValidationReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
        json at;
        if (v.where) at = point_to_json(*v.where);
        violations.push_back(
            {{"code", to_string(v.code)}, {"ids", v.ids}, {"at", std::move(at)}, {"message", v.message}});
    }
    return canonical(json{{"format_version", kFormatVersion},
                          {"ok", report.ok},
                          {"violations", std::move(violations)}});
}

namespace {

json polarization_to_json(const Polarization& p) {
    return json{{"in", p.in_order}, {"out", p.out_order}};
}

json containment_to_json(const std::optional<Containment>& c) {
    if (!c) return json();
    return json{{"component", c->component}, {"face", walk_to_json(c->face)}};
}

} // namespace

std::string serialize_equivalence_report(const EquivalenceReport& report) {
    json evidence; // null for a plain Equivalent verdict
    if (const auto* p = std::get_if<PolarizationEvidence>(&report.evidence))
        evidence = json{{"kind", "polarization"},
                        {"vertex", p->vertex},
                        {"a", polarization_to_json(p->a)},
                        {"b", polarization_to_json(p->b)}};
    else if (const auto* o = std::get_if<OuterFaceEvidence>(&report.evidence))
        evidence = json{{"kind", "outer-face"},
                        {"component", o->component},
                        {"a", walk_to_json(o->a)},
                        {"b", walk_to_json(o->b)}};
    else if (const auto* c = std::get_if<ContainmentEvidence>(&report.evidence))
        evidence = json{{"kind", "containment"},
                        {"component", c->component},
                        {"a", containment_to_json(c->a)},
                        {"b", containment_to_json(c->b)}};
    else if (const auto* g = std::get_if<GraphMismatchEvidence>(&report.evidence))
        evidence = json{{"kind", "graph-mismatch"}, {"detail", g->detail}};

    return canonical(json{{"format_version", kFormatVersion},
                          {"verdict", to_string(report.verdict)},
                          {"digest_a", report.digest_a},
                          {"digest_b", report.digest_b},
                          {"evidence", std::move(evidence)}});
}

std::string serialize_chain_check(const ChainCheck& check) {
    json first;
    if (check.first_failure) first = *check.first_failure;
    return canonical(json{{"format_version", kFormatVersion},
                          {"ok", check.ok},
                          {"first_failure", std::move(first)},
                          {"reason", check.reason}});
}

std::string serialize_polarization(const PolarizationStructure& ps) {
    json vertices = json::object();
    for (const auto& [v, p] : ps.at) vertices[v] = polarization_to_json(p);
    return canonical(json{{"format_version", kFormatVersion}, {"vertices", std::move(vertices)}});
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

} // namespace upward
