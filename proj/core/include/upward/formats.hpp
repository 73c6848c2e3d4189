#pragma once

#include <optional>
#include <string>

#include "upward/embedding.hpp"
#include "upward/equivalence.hpp"
#include "upward/geometry.hpp"
#include "upward/graph.hpp"

namespace upward {

// Versioned JSON document formats with one canonical serialization each:
// object keys sorted, ids sorted, two-space indentation, trailing newline.
// Coordinates travel as exact literal strings ("0.1", "-3", "5/7"), never
// as binary floating point. parse(serialize(x)) == x, and serializing a
// parsed document canonicalizes it.

struct DrawingDocument {
    Drawing drawing;
    std::optional<ExtensionMapping> extension;
    std::optional<VirtualizationMapping> virtualization;
};

Drawing parse_drawing(const std::string& text);
DrawingDocument parse_drawing_document(const std::string& text);
std::string serialize_drawing(const Drawing& d);
std::string serialize_drawing_document(const DrawingDocument& doc);

struct SignatureDocument {
    EmbeddingSignature signature;
    std::string digest; // lowercase hex SHA-256 of the canonical bytes
};

SignatureDocument make_signature_document(const EmbeddingSignature& sig);
std::string serialize_signature_document(const SignatureDocument& doc);

// SHA-256 of the digest-free canonical serialization; equal signatures,
// equal canonical bytes and equal digests are all the same statement.
std::string signature_digest(const EmbeddingSignature& sig);

std::string serialize_chain(const DeformationChain& chain);
DeformationChain parse_chain(const std::string& text);

std::string serialize_validation_report(const ValidationReport& report);
std::string serialize_equivalence_report(const EquivalenceReport& report);
std::string serialize_chain_check(const ChainCheck& check);
std::string serialize_polarization(const PolarizationStructure& ps);

std::string sha256_hex(const std::string& bytes);

} // namespace upward
