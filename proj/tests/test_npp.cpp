#include <doctest.h>

#include "fixtures.hpp"
#include "upward/embedding.hpp"
#include "upward/errors.hpp"
#include "upward/formats.hpp"
#include "upward/npp.hpp"

using namespace upward;
using fixtures::P;
using fixtures::R;

namespace {

std::string sig_bytes(const Drawing& d) {
    return serialize_signature_document(make_signature_document(signature(d)));
}

} // namespace

TEST_SUITE("npp") {

TEST_CASE("npp_extend: diamond stubs are vertical, above and below") {
    const ExtendedDrawing ext = npp_extend(fixtures::d_diamond());
    CHECK(validate_drawing(ext.drawing).ok);
    REQUIRE(ext.mapping.input_stubs.size() == 1);
    REQUIRE(ext.mapping.output_stubs.size() == 1);

    const Point a = ext.drawing.position("a");
    const Point la = ext.drawing.position("a__in_leaf");
    CHECK(la.x == a.x);
    CHECK(la.y > a.y);
    CHECK(ext.drawing.bends("a__in_stub").empty());

    const Point d = ext.drawing.position("d");
    const Point ld = ext.drawing.position("d__out_leaf");
    CHECK(ld.x == d.x);
    CHECK(ld.y < d.y);
}

TEST_CASE("npp_extend: different stub scales, identical signatures") {
    const Drawing d = fixtures::d_diamond();
    const ExtendedDrawing half = npp_extend(d, Rat(1, 2));
    const ExtendedDrawing third = npp_extend(d, Rat(1, 3));
    CHECK(!(half.drawing.position("a__in_leaf") == third.drawing.position("a__in_leaf")));
    CHECK(sig_bytes(half.drawing) == sig_bytes(third.drawing));
}

TEST_CASE("npp_extend: single edge passes through unchanged") {
    const ExtendedDrawing ext = npp_extend(fixtures::single_edge());
    CHECK(ext.drawing == fixtures::single_edge());
    CHECK(ext.mapping.empty());
}

TEST_CASE("npp_extend: refusals") {
    CHECK_THROWS_AS(npp_extend(fixtures::lone_vertex()), DomainError);
    CHECK_THROWS_AS(npp_extend(fixtures::d_tree(), Rat(0)), DomainError);
    CHECK_THROWS_AS(npp_extend(fixtures::d_tree(), Rat(1)), DomainError);
    CHECK_THROWS_AS(npp_extend(fixtures::d_cross()), PreconditionError);
}

TEST_CASE("npp_extend: large stub scales still place validly") {
    for (const Drawing& d : fixtures::corpus(25)) {
        bool isolated = false;
        for (const std::string& v : d.graph().vertex_ids())
            if (d.graph().degree(v) == 0) isolated = true;
        if (isolated) continue;
        const ExtendedDrawing ext = npp_extend(d, Rat(9, 10));
        CHECK(validate_drawing(ext.drawing).ok);
        CHECK(sig_bytes(ext.drawing) == sig_bytes(npp_extend(d, Rat(1, 2)).drawing));
    }
}

TEST_CASE("virtualize_isolated_drawing: lone vertex becomes a vertical edge") {
    const auto [out, mapping] = virtualize_isolated_drawing(fixtures::lone_vertex());
    REQUIRE(mapping.size() == 1);
    CHECK(validate_drawing(out).ok);
    const Point top = out.position("v__top");
    const Point bot = out.position("v__bot");
    CHECK(top.x == bot.x);
    CHECK(top.y > bot.y);
    CHECK(top.y - bot.y == Rat(1)); // no nearby feature: half-length defaults to 1/2
}

TEST_CASE("virtualize_isolated_drawing: identity without isolated vertices") {
    const auto [out, mapping] = virtualize_isolated_drawing(fixtures::d_tree());
    CHECK(out == fixtures::d_tree());
    CHECK(mapping.empty());
}

TEST_CASE("npp_extend_auto: fig2 keeps every virtual edge in its face") {
    const AutoExtended ext = npp_extend_auto(fixtures::fig2());
    CHECK(validate_drawing(ext.extended.drawing).ok);
    CHECK(ext.virtualization.size() == 4);

    const EmbeddingSignature sig = signature(ext.extended.drawing);
    // p2 sat inside the bounded triangle u3-u8-u10; the others were in the
    // unbounded region.
    CHECK(sig.components.at("p2__bot").parent.has_value());
    CHECK(sig.components.at("p2__bot").parent->component == "u1");
    CHECK(!sig.components.at("p1__bot").parent.has_value());
    CHECK(!sig.components.at("p3__bot").parent.has_value());
    CHECK(!sig.components.at("p4__bot").parent.has_value());
}

TEST_CASE("npp_extend_auto: equals npp_extend when nothing is isolated") {
    const AutoExtended ext = npp_extend_auto(fixtures::d_diamond());
    CHECK(ext.virtualization.empty());
    CHECK(ext.extended.drawing == npp_extend(fixtures::d_diamond()).drawing);
}

TEST_CASE("polarization_via_npp: diamond apex through the extension") {
    const Drawing d = fixtures::d_diamond();
    const ExtendedDrawing ext = npp_extend(d);
    CHECK(extract_rotation(ext.drawing, "a") ==
          make_rotation("a", {"a__in_stub", "e2", "e1"}));

    const PolarizationStructure via = polarization_via_npp(d);
    CHECK(via.at.at("a").out_order == std::vector<std::string>{"e1", "e2"});
    CHECK(via.at.at("a").in_order.empty());
    CHECK(via == extract_polarization(d));
}

TEST_CASE("polarization_via_npp: hub untouched by stubs, single edge trivial") {
    const PolarizationStructure via = polarization_via_npp(fixtures::d_tree());
    CHECK(via.at.at("b").in_order == std::vector<std::string>{"e1"});
    CHECK(via.at.at("b").out_order == std::vector<std::string>{"e2", "e3"});
    CHECK(via == extract_polarization(fixtures::d_tree()));

    CHECK(polarization_via_npp(fixtures::single_edge()) ==
          extract_polarization(fixtures::single_edge()));
}

TEST_CASE("the two polarization routes agree across the corpus") {
    for (const Drawing& d : fixtures::corpus(60))
        CHECK(polarization_via_npp_auto(d) == extract_polarization(d));
}

TEST_CASE("stub safety: every extended corpus drawing validates") {
    for (const Drawing& d : fixtures::corpus(60)) {
        const AutoExtended ext = npp_extend_auto(d);
        CHECK(validate_drawing(ext.extended.drawing).ok);
        // Stubs really are vertical segments.
        for (const StubEntry& s : ext.extended.mapping.input_stubs) {
            CHECK(ext.extended.drawing.position(s.leaf).x ==
                  ext.extended.drawing.position(s.vertex).x);
            CHECK(ext.extended.drawing.bends(s.edge).empty());
        }
    }
}

TEST_CASE("uniqueness: extension signatures are scale-free across the corpus") {
    for (const Drawing& d : fixtures::corpus(30)) {
        const std::string base = sig_bytes(npp_extend_auto(d, Rat(1, 2)).extended.drawing);
        CHECK(sig_bytes(npp_extend_auto(d, Rat(1, 3)).extended.drawing) == base);
        CHECK(sig_bytes(npp_extend_auto(d, Rat(1, 7)).extended.drawing) == base);
    }
}

TEST_CASE("restriction round trip recovers the input exactly") {
    for (const Drawing& d : fixtures::corpus(40)) {
        const AutoExtended ext = npp_extend_auto(d);
        CHECK(restrict_extension(ext.extended.drawing, ext.extended.mapping,
                                 ext.virtualization) == d);
    }
    const AutoExtended fig2_ext = npp_extend_auto(fixtures::fig2());
    CHECK(restrict_extension(fig2_ext.extended.drawing, fig2_ext.extended.mapping,
                             fig2_ext.virtualization) == fixtures::fig2());
}

} // TEST_SUITE
