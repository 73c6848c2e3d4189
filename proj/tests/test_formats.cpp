#include <doctest.h>

#include "fixtures.hpp"
#include "upward/embedding.hpp"
#include "upward/equivalence.hpp"
#include "upward/errors.hpp"
#include "upward/formats.hpp"
#include "upward/npp.hpp"
#include "upward/render.hpp"

using namespace upward;

TEST_SUITE("formats") {

TEST_CASE("serialize then parse is the identity on every fixture") {
    for (const Drawing& d : {fixtures::d_tree(), fixtures::d_diamond(), fixtures::d_cross(),
                             fixtures::fig1(), fixtures::fig2(), fixtures::single_edge(),
                             fixtures::parallel_pair(), fixtures::lone_vertex()}) {
        const std::string text = serialize_drawing(d);
        CHECK(parse_drawing(text) == d);
        CHECK(serialize_drawing(parse_drawing(text)) == text); // canonical fixed point
    }
}

TEST_CASE("parsing canonicalizes id order and spacing") {
    const std::string scrambled = R"({
      "format_version": 1,
      "vertices": [ {"id":"b","x":"0","y":"0"}, {"id":"a","x":"0","y":"1"} ],
      "edges": [ {"id":"e","tail":"a","head":"b"} ]
    })";
    CHECK(serialize_drawing(parse_drawing(scrambled)) ==
          serialize_drawing(fixtures::single_edge()));
}

TEST_CASE("decimal strings are stored exactly and round-trip their literal") {
    const std::string text = R"({"format_version":1,
      "vertices":[{"id":"a","x":"0.1","y":"1"},{"id":"b","x":"0.1","y":"0"}],
      "edges":[{"id":"e","tail":"a","head":"b"}]})";
    const Drawing d = parse_drawing(text);
    CHECK(d.position("a").x == Rat(1, 10));
    CHECK(serialize_drawing(d).find("\"0.1\"") != std::string::npos);
    // Non-canonical digits canonicalize rather than round
    const std::string padded = R"({"format_version":1,
      "vertices":[{"id":"a","x":"0.10","y":"1"},{"id":"b","x":"0.1","y":"0"}],
      "edges":[{"id":"e","tail":"a","head":"b"}]})";
    CHECK(serialize_drawing(parse_drawing(padded)) == serialize_drawing(d));
    // Fraction coordinates survive too
    const std::string frac = R"({"format_version":1,
      "vertices":[{"id":"a","x":"1/3","y":"1"},{"id":"b","x":"1/3","y":"0"}],
      "edges":[{"id":"e","tail":"a","head":"b"}]})";
    CHECK(parse_drawing(frac).position("a").x == Rat(1, 3));
    CHECK(serialize_drawing(parse_drawing(frac)).find("\"1/3\"") != std::string::npos);
}

TEST_CASE("duplicate ids are structural errors, bad text is a parse error") {
    CHECK_THROWS_AS(parse_drawing(R"({"format_version":1,
      "vertices":[{"id":"a","x":"0","y":"1"},{"id":"b","x":"0","y":"0"}],
      "edges":[{"id":"e","tail":"a","head":"b"},{"id":"e","tail":"a","head":"b"}]})"),
                    StructuralError);
    CHECK_THROWS_AS(parse_drawing("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_drawing(R"({"format_version":2,"vertices":[],"edges":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_drawing(R"({"format_version":1,"vertices":[],"edges":[],"x":1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_drawing(R"({"format_version":1,
      "vertices":[{"id":"a","x":"0","y":"zero"}],"edges":[]})"),
                    ParseError);
}

TEST_CASE("parse errors carry the position") {
    try {
        parse_drawing("{\n  \"vertices\": norfolk\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("extension and virtualization blocks round trip") {
    const AutoExtended ext = npp_extend_auto(fixtures::fig2());
    DrawingDocument doc{ext.extended.drawing, ext.extended.mapping, ext.virtualization};
    const std::string text = serialize_drawing_document(doc);
    const DrawingDocument back = parse_drawing_document(text);
    CHECK(back.drawing == doc.drawing);
    REQUIRE(back.extension.has_value());
    CHECK(*back.extension == *doc.extension);
    REQUIRE(back.virtualization.has_value());
    CHECK(back.virtualization->size() == 4);
    CHECK(serialize_drawing_document(back) == text);
}

TEST_CASE("signature documents: digest matches recomputation") {
    const EmbeddingSignature sig = signature(fixtures::d_tree());
    const SignatureDocument doc = make_signature_document(sig);
    CHECK(doc.digest == signature_digest(sig));
    CHECK(doc.digest.size() == 64);
    const std::string text = serialize_signature_document(doc);
    CHECK(text.find(doc.digest) != std::string::npos);
}

TEST_CASE("signature digests separate exactly the unequal signatures") {
    const EmbeddingSignature tree = signature(fixtures::d_tree());
    const EmbeddingSignature moved =
        signature(transform(fixtures::d_tree(), Translate{Rat(5), Rat(0)}));
    const EmbeddingSignature mirrored = signature(transform(fixtures::d_tree(), MirrorX{}));
    CHECK(signature_digest(tree) == signature_digest(moved));
    CHECK(signature_digest(tree) != signature_digest(mirrored));
}

TEST_CASE("chain documents round trip") {
    const DeformationChain chain = make_chain(fixtures::d_diamond(), 6, 17);
    const std::string text = serialize_chain(chain);
    const DeformationChain back = parse_chain(text);
    REQUIRE(back.frames.size() == chain.frames.size());
    for (std::size_t i = 0; i < back.frames.size(); ++i)
        CHECK(back.frames[i] == chain.frames[i]);
    CHECK(serialize_chain(back) == text);
}

TEST_CASE("sha256 known vector") {
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("generator: determinism and validity") {
    GeneratorConfig config;
    config.vertex_count = 8;
    config.target_edge_count = 12;
    config.seed = 42;
    const GenerateResult a = generate(config);
    const GenerateResult b = generate(config);
    CHECK(serialize_drawing(a.drawing) == serialize_drawing(b.drawing));
    CHECK(validate_drawing(a.drawing).ok);
    CHECK(a.achieved_edges <= 12);
    for (const auto& [v, r] : extract_rotation_system(a.drawing).at)
        CHECK(check_bimodal(r, a.drawing.graph()));

    GeneratorConfig lone;
    lone.vertex_count = 1;
    const GenerateResult single = generate(lone);
    CHECK(single.drawing.graph().vertex_ids().size() == 1);
    CHECK(validate_drawing(single.drawing).ok);
}

TEST_CASE("generator: saturation is reported, not an error") {
    // Two vertices admit exactly one straight edge; a second parallel copy
    // would coincide with it and is always rejected.
    GeneratorConfig config;
    config.vertex_count = 2;
    config.target_edge_count = 5;
    config.seed = 1;
    const GenerateResult r = generate(config);
    CHECK(r.achieved_edges == 1);
    CHECK(r.drawing.graph().edges().size() == 1);
    CHECK(validate_drawing(r.drawing).ok);
}

TEST_CASE("generator: unsatisfiable configs are refused") {
    GeneratorConfig config;
    config.vertex_count = 40; // only 33 distinct y values in the default range
    CHECK_THROWS_AS(generate(config), DomainError);
    config.vertex_count = 0;
    CHECK_THROWS_AS(generate(config), DomainError);
}

TEST_CASE("render: tree has four vertex dots and three arrowheads") {
    const std::string svg = render_svg(fixtures::d_tree());
    auto count = [&](const std::string& needle) {
        std::size_t n = 0, at = 0;
        while ((at = svg.find(needle, at)) != std::string::npos) {
            ++n;
            at += needle.size();
        }
        return n;
    };
    CHECK(count("class=\"vertex\"") == 4);
    CHECK(count("class=\"arrow\"") == 3);
    CHECK(count("class=\"edge\"") == 3);
    CHECK(count("class=\"violation\"") == 0);
    CHECK(render_svg(fixtures::d_tree()) == svg); // byte-stable
}

TEST_CASE("render: crossing marked with the violation class") {
    const std::string svg = render_svg(fixtures::d_cross());
    CHECK(svg.find("class=\"violation\"") != std::string::npos);
    CHECK(svg.find("data-code=\"segment-crossing\"") != std::string::npos);

    // Invalid drawings render with labels too; extraction stays total.
    RenderOptions options;
    options.show_ids = true;
    options.show_polarization_labels = true;
    CHECK(render_svg(fixtures::d_cross(), options).find("pol-") != std::string::npos);
}

TEST_CASE("render: polarization labels follow the extracted orders") {
    RenderOptions options;
    options.show_polarization_labels = true;
    const std::string svg = render_svg(fixtures::d_diamond(), options);
    CHECK(svg.find("pol-out") != std::string::npos);
    CHECK(svg.find("pol-in") != std::string::npos);
    CHECK(svg.find(">1<") != std::string::npos);
    CHECK(svg.find(">2<") != std::string::npos);
}

} // TEST_SUITE
