#include "upward/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "upward/equivalence.hpp"
#include "upward/errors.hpp"
#include "upward/formats.hpp"
#include "upward/generate.hpp"
#include "upward/npp.hpp"
#include "upward/render.hpp"

namespace upward::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write \"" + path + "\"");
    out << text;
}

struct Args {
    std::string file, file_b, output;
    std::string stub_scale = "1/2";
    bool npp = false;
    bool via_npp = false;
    bool no_auto_virtualize = false;
    bool labels = false;
    std::size_t vertices = 1;
    std::size_t edges = 0;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
};

int cmd_validate(const Args& a, std::ostream& out) {
    const ValidationReport report = validate_drawing(parse_drawing(slurp(a.file)));
    out << serialize_validation_report(report);
    return report.ok ? 0 : 1;
}

int cmd_signature(const Args& a, std::ostream& out) {
    const Drawing d = parse_drawing(slurp(a.file));
    const EmbeddingSignature sig =
        a.npp ? signature(npp_extend_auto(d, Rat::parse(a.stub_scale)).extended.drawing)
              : signature(d);
    out << serialize_signature_document(make_signature_document(sig));
    return 0;
}

int cmd_polarization(const Args& a, std::ostream& out) {
    const Drawing d = parse_drawing(slurp(a.file));
    out << serialize_polarization(a.via_npp ? polarization_via_npp_auto(d)
                                            : extract_polarization(d));
    return 0;
}

int cmd_extend(const Args& a, std::ostream&) {
    const Drawing d = parse_drawing(slurp(a.file));
    const Rat scale = Rat::parse(a.stub_scale);
    DrawingDocument doc;
    if (a.no_auto_virtualize) {
        ExtendedDrawing ext = npp_extend(d, scale);
        doc.drawing = std::move(ext.drawing);
        doc.extension = std::move(ext.mapping);
    } else {
        AutoExtended ext = npp_extend_auto(d, scale);
        doc.drawing = std::move(ext.extended.drawing);
        doc.extension = std::move(ext.extended.mapping);
        if (!ext.virtualization.empty()) doc.virtualization = std::move(ext.virtualization);
    }
    spill(a.output, serialize_drawing_document(doc));
    return 0;
}

int cmd_virtualize(const Args& a, std::ostream&) {
    auto [drawing, mapping] = virtualize_isolated_drawing(parse_drawing(slurp(a.file)));
    DrawingDocument doc;
    doc.drawing = std::move(drawing);
    if (!mapping.empty()) doc.virtualization = std::move(mapping);
    spill(a.output, serialize_drawing_document(doc));
    return 0;
}

int cmd_equiv(const Args& a, std::ostream& out) {
    const EquivalenceReport report =
        equivalent(parse_drawing(slurp(a.file)), parse_drawing(slurp(a.file_b)));
    out << serialize_equivalence_report(report);
    switch (report.verdict) {
    case Verdict::Equivalent: return 0;
    case Verdict::NotEquivalent: return 1;
    case Verdict::Incomparable: return 2;
    }
    return 3;
}

int cmd_render(const Args& a, std::ostream&) {
    RenderOptions options;
    options.show_ids = a.labels;
    options.show_polarization_labels = a.labels;
    spill(a.output, render_svg(parse_drawing(slurp(a.file)), options));
    return 0;
}

int cmd_gen(const Args& a, std::ostream& out) {
    GeneratorConfig config;
    config.vertex_count = a.vertices;
    config.target_edge_count = a.edges;
    config.seed = a.seed;
    const GenerateResult r = generate(config);
    spill(a.output, serialize_drawing(r.drawing));
    out << "{\n  \"achieved_edges\": " << r.achieved_edges << ",\n  \"requested_edges\": "
        << a.edges << "\n}\n";
    return 0;
}

int cmd_perturb(const Args& a, std::ostream& out) {
    const Drawing d = parse_drawing(slurp(a.file));
    const DeformationChain chain = make_chain(d, a.steps, a.seed);
    spill(a.output, serialize_chain(chain));
    out << "{\n  \"frames\": " << chain.frames.size() << "\n}\n";
    return 0;
}

int cmd_verify_chain(const Args& a, std::ostream& out) {
    const ChainCheck check = verify_chain(parse_chain(slurp(a.file)));
    out << serialize_chain_check(check);
    return check.ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream&, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Validate upward planar drawings, extract their combinatorial structure,\n"
                 "and decide deformation equivalence.",
                 "upward"};
    app.require_subcommand(1);
    Args a;

    CLI::App* validate = app.add_subcommand("validate", "Check a drawing document");
    validate->add_option("FILE", a.file, "drawing document")->required();

    CLI::App* sig = app.add_subcommand("signature", "Canonical embedding signature");
    sig->add_option("FILE", a.file, "drawing document")->required();
    sig->add_flag("--npp", a.npp, "sign the NPP-extension (auto-virtualizing)");
    sig->add_option("--stub-scale", a.stub_scale, "stub scale in (0,1), with --npp");

    CLI::App* pol = app.add_subcommand("polarization", "Per-vertex in/out orders");
    pol->add_option("FILE", a.file, "drawing document")->required();
    pol->add_flag("--via-npp", a.via_npp, "compute through the NPP-extension instead");

    CLI::App* extend = app.add_subcommand("extend", "Write the NPP-extension");
    extend->add_option("FILE", a.file, "drawing document")->required();
    extend->add_option("-o,--output", a.output, "output document")->required();
    extend->add_option("--stub-scale", a.stub_scale, "stub scale in (0,1)");
    extend->add_flag("--no-auto-virtualize", a.no_auto_virtualize,
                     "fail on isolated vertices instead of virtualizing");

    CLI::App* virt = app.add_subcommand("virtualize", "Replace isolated vertices by virtual edges");
    virt->add_option("FILE", a.file, "drawing document")->required();
    virt->add_option("-o,--output", a.output, "output document")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "Decide deformation equivalence");
    equiv->add_option("A", a.file, "first drawing")->required();
    equiv->add_option("B", a.file_b, "second drawing")->required();

    CLI::App* render = app.add_subcommand("render", "Render a drawing to SVG");
    render->add_option("FILE", a.file, "drawing document")->required();
    render->add_option("-o,--output", a.output, "output SVG file")->required();
    render->add_flag("--labels", a.labels, "show vertex ids and polarization labels");

    CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random drawing");
    gen->add_option("--vertices", a.vertices, "vertex count")->required();
    gen->add_option("--edges", a.edges, "target edge count")->required();
    gen->add_option("--seed", a.seed, "seed")->required();
    gen->add_option("-o,--output", a.output, "output document")->required();

    CLI::App* perturb = app.add_subcommand("perturb", "Generate a deformation chain");
    perturb->add_option("FILE", a.file, "drawing document")->required();
    perturb->add_option("--steps", a.steps, "number of moves")->required();
    perturb->add_option("--seed", a.seed, "seed")->required();
    perturb->add_option("-o,--output", a.output, "output chain document")->required();

    CLI::App* verify = app.add_subcommand("verify-chain", "Check a deformation chain");
    verify->add_option("CHAIN", a.file, "chain document")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 3;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(a, out);
        if (app.got_subcommand(sig)) return cmd_signature(a, out);
        if (app.got_subcommand(pol)) return cmd_polarization(a, out);
        if (app.got_subcommand(extend)) return cmd_extend(a, out);
        if (app.got_subcommand(virt)) return cmd_virtualize(a, out);
        if (app.got_subcommand(equiv)) return cmd_equiv(a, out);
        if (app.got_subcommand(render)) return cmd_render(a, out);
        if (app.got_subcommand(gen)) return cmd_gen(a, out);
        if (app.got_subcommand(perturb)) return cmd_perturb(a, out);
        if (app.got_subcommand(verify)) return cmd_verify_chain(a, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

} // namespace upward::cli
