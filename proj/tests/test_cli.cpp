#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "upward/cli.hpp"
#include "upward/formats.hpp"

using namespace upward;

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "upward-cli-tests";
    fs::create_directories(dir);
    return dir;
}

std::string save(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes mirror the verdict table") {
    const std::string tree = save("tree.json", serialize_drawing(fixtures::d_tree()));
    const std::string moved = save(
        "tree_moved.json",
        serialize_drawing(transform(fixtures::d_tree(), Translate{Rat(3), Rat(-2)})));
    const std::string diamond = save("diamond.json", serialize_drawing(fixtures::d_diamond()));
    const std::string mirrored = save(
        "diamond_mirror.json", serialize_drawing(transform(fixtures::d_diamond(), MirrorX{})));

    CHECK(run({"equiv", tree, moved}).code == 0);

    const CliRun neq = run({"equiv", diamond, mirrored});
    CHECK(neq.code == 1);
    CHECK(neq.out.find("\"vertex\": \"a\"") != std::string::npos);

    CHECK(run({"equiv", tree, diamond}).code == 2);
    CHECK(run({"equiv", tree, "/nonexistent.json"}).code == 3);
}

TEST_CASE("validate: exit 0 with report for valid, 1 for invalid") {
    const std::string tree = save("v_tree.json", serialize_drawing(fixtures::d_tree()));
    const CliRun good = run({"validate", tree});
    CHECK(good.code == 0);
    CHECK(good.out.find("\"ok\": true") != std::string::npos);

    const std::string cross = save("v_cross.json", serialize_drawing(fixtures::d_cross()));
    const CliRun bad = run({"validate", cross});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("segment-crossing") != std::string::npos);
}

TEST_CASE("structurally bad inputs exit 3 before any geometry runs") {
    const std::string cyclic = save("cyclic.json", R"({"format_version":1,
      "vertices":[{"id":"a","x":"0","y":"1"},{"id":"b","x":"0","y":"0"}],
      "edges":[{"id":"e1","tail":"a","head":"b"},{"id":"e2","tail":"b","head":"a"}]})");
    const CliRun r = run({"validate", cyclic});
    CHECK(r.code == 3);
    CHECK(r.err.find("cycle") != std::string::npos);
}

TEST_CASE("usage errors exit 3 with help text") {
    const CliRun unknown = run({"validate", "--frobnicate", "x.json"});
    CHECK(unknown.code == 3);
    CHECK(!unknown.err.empty());
    CHECK(run({"no-such-command"}).code == 3);
    const CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("equiv") != std::string::npos);
}

TEST_CASE("polarization with and without --via-npp is byte-identical") {
    for (const Drawing& d : {fixtures::d_diamond(), fixtures::fig1(), fixtures::fig2()}) {
        const std::string path = save("pol.json", serialize_drawing(d));
        const CliRun direct = run({"polarization", path});
        const CliRun via = run({"polarization", path, "--via-npp"});
        CHECK(direct.code == 0);
        CHECK(via.code == 0);
        CHECK(direct.out == via.out);
    }
}

TEST_CASE("signature digests are stable across extend stub scales") {
    const std::string src = save("sig_src.json", serialize_drawing(fixtures::fig2()));
    std::string first;
    for (const char* scale : {"1/2", "1/3", "1/7"}) {
        const std::string out = (scratch() / ("ext" + std::string(scale).substr(2) + ".json")).string();
        CHECK(run({"extend", src, "-o", out, "--stub-scale", scale}).code == 0);
        const CliRun sig = run({"signature", out});
        CHECK(sig.code == 0);
        const auto at = sig.out.find("\"digest\"");
        REQUIRE(at != std::string::npos);
        const std::string digest = sig.out.substr(at, 80);
        if (first.empty())
            first = digest;
        else
            CHECK(digest == first);
    }
}

TEST_CASE("signature --npp equals signature of the extend output") {
    const std::string src = save("sig2_src.json", serialize_drawing(fixtures::d_diamond()));
    const std::string ext = (scratch() / "sig2_ext.json").string();
    REQUIRE(run({"extend", src, "-o", ext}).code == 0);
    CHECK(run({"signature", src, "--npp"}).out == run({"signature", ext}).out);
}

TEST_CASE("signature without --npp refuses isolated vertices") {
    const std::string lone = save("lone.json", serialize_drawing(fixtures::lone_vertex()));
    const CliRun r = run({"signature", lone});
    CHECK(r.code == 3);
    CHECK(r.err.find("virtualize") != std::string::npos);
    CHECK(run({"signature", lone, "--npp"}).code == 0);
}

TEST_CASE("virtualize writes the mapping block") {
    const std::string fig2 = save("fig2.json", serialize_drawing(fixtures::fig2()));
    const std::string out = (scratch() / "fig2_virt.json").string();
    REQUIRE(run({"virtualize", fig2, "-o", out}).code == 0);
    const DrawingDocument doc = parse_drawing_document(load(out));
    REQUIRE(doc.virtualization.has_value());
    CHECK(doc.virtualization->size() == 4);
    CHECK(validate_drawing(doc.drawing).ok);
}

TEST_CASE("extend --no-auto-virtualize fails on isolated vertices") {
    const std::string fig2 = save("fig2b.json", serialize_drawing(fixtures::fig2()));
    const std::string out = (scratch() / "fig2_ext.json").string();
    CHECK(run({"extend", fig2, "-o", out, "--no-auto-virtualize"}).code == 3);
    CHECK(run({"extend", fig2, "-o", out}).code == 0);
}

TEST_CASE("gen is deterministic and reports the achieved count") {
    const std::string out1 = (scratch() / "gen1.json").string();
    const std::string out2 = (scratch() / "gen2.json").string();
    const CliRun r1 = run({"gen", "--vertices", "8", "--edges", "12", "--seed", "42", "-o", out1});
    const CliRun r2 = run({"gen", "--vertices", "8", "--edges", "12", "--seed", "42", "-o", out2});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("achieved_edges") != std::string::npos);
    CHECK(load(out1) == load(out2));
    CHECK(run({"validate", out1}).code == 0);
}

TEST_CASE("perturb then verify-chain round trips through files") {
    const std::string tree = save("p_tree.json", serialize_drawing(fixtures::d_tree()));
    const std::string chain1 = (scratch() / "chain1.json").string();
    const std::string chain2 = (scratch() / "chain2.json").string();
    CHECK(run({"perturb", tree, "--steps", "12", "--seed", "5", "-o", chain1}).code == 0);
    CHECK(run({"perturb", tree, "--steps", "12", "--seed", "5", "-o", chain2}).code == 0);
    CHECK(load(chain1) == load(chain2));

    const CliRun ok = run({"verify-chain", chain1});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"ok\": true") != std::string::npos);

    // Corrupt the chain: make the last frame a mirrored jump.
    DeformationChain chain = parse_chain(load(chain1));
    chain.frames.back() = transform(chain.frames.front(), MirrorX{});
    const std::string bad = save("chain_bad.json", serialize_chain(chain));
    CHECK(run({"verify-chain", bad}).code == 1);
}

TEST_CASE("render writes SVG") {
    const std::string tree = save("r_tree.json", serialize_drawing(fixtures::d_tree()));
    const std::string out = (scratch() / "tree.svg").string();
    CHECK(run({"render", tree, "-o", out, "--labels"}).code == 0);
    const std::string svg = load(out);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("pol-out") != std::string::npos);
}

} // TEST_SUITE
