#include "flipdist/cli.hpp"

#include "flipdist/formats.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace flipdist;
namespace fs = std::filesystem;

namespace {

const fs::path kData = FLIPDIST_DATA_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

bool contains(const std::string& s, std::string_view fragment) { return s.find(fragment) != std::string::npos; }

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("flipdist_test_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"count", data("sq_d02.tri")}).code == kExitUsage);
    CHECK(run({"triangulate", data("square.inst"), "--priority", "sideways"}).code == kExitUsage);
    CHECK(run({"gen", "--points", "six"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("unreadable or malformed files exit with 2") {
    const Run r = run({"validate", "/nonexistent/x.inst"});
    CHECK(r.code == kExitUsage);
    CHECK(contains(r.err, "/nonexistent/x.inst"));
    const fs::path dir = scratch_dir("malformed");
    write_file(dir / "bad.inst", "{\"format\": ");
    CHECK(run({"validate", (dir / "bad.inst").string()}).code == kExitUsage);
    fs::remove_all(dir);
}

TEST_CASE("validate reports the instance summary") {
    const Run r = run({"validate", data("square.inst"), data("sq_d02.tri")});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "instance ok: n=4 n_b=4 h=0 interior_edges=1\ntriangulation ok: 5 edges\n");
}

TEST_CASE("validate lists every violation with exit 1") {
    const fs::path dir = scratch_dir("validate");
    write_file(dir / "sq.inst", read_file(kData / "square.inst"));
    write_file(dir / "cross.tri", R"({"format": "flipdist-triangulation", "version": 1, "instance": "sq.inst",
      "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]})");
    const Run r = run({"validate", (dir / "sq.inst").string(), (dir / "cross.tri").string()});
    CHECK(r.code == kExitDomain);
    CHECK(contains(r.out, "invalid triangulation: 1 violation(s)"));
    write_file(dir / "outside.inst", R"({"format": "flipdist-instance", "version": 1,
      "points": [[0, 0], [4, 0], [4, 4], [0, 4], [9, 9]], "border": [[0, 1, 2, 3]]})");
    const Run bad = run({"validate", (dir / "outside.inst").string()});
    CHECK(bad.code == kExitDomain);
    CHECK(contains(bad.out, "invalid instance"));
    fs::remove_all(dir);
}

TEST_CASE("count, morph and distance on the square") {
    const Run c = run({"count", data("sq_d02.tri"), data("sq_d13.tri")});
    CHECK(c.code == kExitOk);
    CHECK(contains(c.out, "#(T1,T2)=1\n"));
    CHECK(contains(c.out, "#(0-2,T2)=1\n"));
    CHECK(contains(c.out, "max=1"));

    const fs::path dir = scratch_dir("morph");
    const Run m = run({"morph", data("sq_d02.tri"), data("sq_d13.tri"), "-o", (dir / "s.seq").string()});
    CHECK(m.code == kExitOk);
    CHECK(m.out == "steps=1 crossings=1 bound=1\n");
    CHECK(load_sequence(dir / "s.seq").steps.size() == 1);
    fs::remove_all(dir);

    CHECK(run({"distance", data("sq_d02.tri"), data("sq_d13.tri")}).out == "distance=1\n");
    CHECK(run({"distance", data("sq_d02.tri"), data("sq_d02.tri")}).out == "distance=0\n");
    CHECK(run({"count", data("sq_d02.tri"), data("sq_d02.tri")}).out == "#(T1,T2)=0\n");
}

TEST_CASE("enumerate agrees across methods") {
    CHECK(run({"enumerate", data("hexagon.inst")}).out == "14 triangulations\n");
    CHECK(run({"enumerate", data("hexagon.inst"), "--method", "direct"}).out == "14 triangulations\n");
    const Run listed = run({"enumerate", data("square.inst"), "--list"});
    CHECK(contains(listed.out, "2 triangulations"));
    CHECK(run({"enumerate", data("hexagon.inst"), "--max-nodes", "3"}).code == kExitDomain);
}

TEST_CASE("audit exit status follows the report") {
    const Run r = run({"audit", data("sq_d02.tri"), data("sq_d13.tri")});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "failed=0"));
    const Run j = run({"audit", data("sq_d02.tri"), data("sq_d13.tri"), "--json"});
    CHECK(contains(j.out, "\"format\": \"flipdist-audit\""));
}

TEST_CASE("instance mismatch is a domain error") {
    const fs::path dir = scratch_dir("mismatch");
    const std::string hex = (dir / "hex.tri").string();
    REQUIRE(run({"triangulate", data("hexagon.inst"), "-o", hex}).code == kExitOk);
    const Run r = run({"count", data("sq_d02.tri"), hex});
    CHECK(r.code == kExitDomain);
    CHECK(contains(r.err, "InstanceMismatch"));
    fs::remove_all(dir);
}

TEST_CASE("gen is deterministic and feeds the other commands") {
    const fs::path dir = scratch_dir("gen");
    const std::vector<std::string> args{"gen", "--seed", "4", "--points", "9", "--shape", "with_holes", "--holes", "1",
                                        "--interior", "1", "--pair-seed", "8", "-o", (dir / "i.inst").string(),
                                        "--t1", (dir / "a.tri").string(), "--t2", (dir / "b.tri").string()};
    REQUIRE(run(args).code == kExitOk);
    const std::string first = read_file(dir / "i.inst") + read_file(dir / "a.tri") + read_file(dir / "b.tri");
    REQUIRE(run(args).code == kExitOk);
    CHECK(read_file(dir / "i.inst") + read_file(dir / "a.tri") + read_file(dir / "b.tri") == first);
    CHECK(contains(run({"validate", (dir / "i.inst").string(), (dir / "a.tri").string()}).out, "h=1"));
    CHECK(run({"morph", (dir / "a.tri").string(), (dir / "b.tri").string()}).code == kExitOk);
    CHECK(run({"gen", "--points", "2"}).code == kExitDomain);
    CHECK(run({"gen", "--points", "6", "--shape", "blob"}).code == kExitUsage);
    fs::remove_all(dir);
}

TEST_CASE("render writes SVG") {
    const Run r = run({"render", data("sq_d02.tri"), "--overlay", data("sq_d13.tri")});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "<svg xmlns="));
    CHECK(contains(r.out, "</svg>"));
    CHECK(contains(r.out, "class=\"t2\""));
    CHECK(run({"render", data("sq_d02.tri"), "--overlay", data("sq_d13.tri"), "--sequence", "x"}).code == kExitUsage);
}
