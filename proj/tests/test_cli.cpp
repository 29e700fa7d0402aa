#include <doctest.h>

#include <unistd.h>

#include <fstream>
#include <string>

#include "cli_driver.hpp"
#include "generators.hpp"
#include "mdsurf/graph.hpp"

using namespace mdsurf;
using testutil::has_line;
using testutil::slurp;

namespace {

std::string fixture(const char* name) {
    return std::string(MDSURF_FIXTURE_DIR) + "/" + name;
}

testutil::RunResult run_cli(const std::string& args) {
    return testutil::run_process(MDSURF_CLI_PATH, args);
}

} // namespace

TEST_CASE("compute reproduces the shipped annulus example") {
    auto r = run_cli("compute " + fixture("annulus.json") + " --ring polynomial");
    REQUIRE(r.exit_code == 0);
    CHECK(has_line(r.out, "sector 00: 5+2*a*d+2*b*c+a*b*c*d"));
    CHECK(has_line(r.out, "sector 11: a*b+c*d"));
    CHECK(has_line(r.out, "Z_MD = 5+a*b+2*a*d+2*b*c+c*d+a*b*c*d"));
}

TEST_CASE("compute on the two-vertex disk") {
    auto r = run_cli("compute " + fixture("two_vertex_disk.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(has_line(r.out, "Z_MD = y1*y2"));
}

TEST_CASE("verify passes on the shipped fixtures") {
    for (const char* name :
         {"annulus.json", "two_vertex_disk.json", "single_edge_disk.json",
          "cylinder_7x2.json"}) {
        CAPTURE(name);
        auto r = run_cli("verify " + fixture(name));
        CHECK(r.exit_code == 0);
        CHECK(has_line(r.out, "all checks passed"));
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
}

TEST_CASE("json output is byte-identical across runs and job counts") {
    std::string base = "compute " + fixture("annulus.json") + " --json --jobs ";
    auto a = run_cli(base + "1");
    auto b = run_cli(base + "1");
    auto c = run_cli(base + "4");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out.find("\"terms\"") != std::string::npos);
    CHECK(a.out.find("\"beta\": \"11\"") != std::string::npos);
}

TEST_CASE("dimer, orient, enumerate, and bench reports") {
    auto d = run_cli("dimer " + fixture("annulus.json") + " --ring rational");
    REQUIRE(d.exit_code == 0);
    CHECK(has_line(d.out, "Z_D = 5"));

    auto o = run_cli("orient " + fixture("annulus.json") + " --beta 11");
    REQUIRE(o.exit_code == 0);
    CHECK(has_line(o.out, "sector 11"));
    CHECK(has_line(o.out, "edge 5: 1 -> 3"));

    auto e = run_cli("enumerate " + fixture("annulus.json"));
    REQUIRE(e.exit_code == 0);
    CHECK(has_line(e.out, "sector 00: 10 coverings, weight 5+2*a*d+2*b*c+a*b*c*d"));
    CHECK(has_line(e.out, "sector 11: 2 coverings, weight a*b+c*d"));
    CHECK(has_line(e.out, "coverings: 12"));

    auto b = run_cli("bench " + fixture("annulus.json"));
    REQUIRE(b.exit_code == 0);
    CHECK(has_line(b.out, "agreement: exact"));
}

TEST_CASE("error records and exit codes") {
    auto missing = run_cli("compute /nonexistent_graph.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("\"error\"") != std::string::npos);

    std::string bad_path = "/tmp/mdsurf_bad_" + std::to_string(getpid());
    {
        std::ofstream f(bad_path);
        f << "{\"vertices\": oops";
    }
    auto bad = run_cli("compute " + bad_path);
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("input_error") != std::string::npos);

    auto beta = run_cli("compute " + fixture("annulus.json") + " --beta 101");
    CHECK(beta.exit_code == 1);
    CHECK(beta.err.find("input_error") != std::string::npos);

    auto ring = run_cli("compute " + fixture("annulus.json") + " --ring rational");
    CHECK(ring.exit_code == 1);
    CHECK(ring.err.find("polynomial") != std::string::npos);

    auto cap = run_cli("compute " + fixture("cylinder_6x5.json") +
                       " --ring polynomial");
    CHECK(cap.exit_code == 1);
    CHECK(cap.err.find("input_error") != std::string::npos);
}

TEST_CASE("cylinder fixtures match their generator") {
    CHECK(slurp(fixture("cylinder_6x5.json")) == testgen::cylinder(6, 5).save());
    CHECK(slurp(fixture("cylinder_7x2.json")) == testgen::cylinder(7, 2).save());
}

TEST_CASE("cylinder lattice computes quickly in the rational ring") {
    auto big = run_cli("compute " + fixture("cylinder_6x5.json") +
                       " --ring rational --jobs 2");
    REQUIRE(big.exit_code == 0);
    CHECK(has_line(big.out, "Z_MD = 187678"));

    auto sub = run_cli("bench " + fixture("cylinder_7x2.json") +
                       " --ring rational");
    REQUIRE(sub.exit_code == 0);
    CHECK(has_line(sub.out, "agreement: exact"));
}
