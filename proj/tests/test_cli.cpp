#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bmres/cli.hpp"
#include "bmres/json_io.hpp"
#include "helpers.hpp"

using namespace bmres;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"bmres"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = bmres::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path("/tmp/bmres_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kFourCycle = "vars: x y z w\nx*w\nx*y\ny*z\nz*w\n";

}  // namespace

TEST_CASE("symbols command") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"symbols", f.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("15 symbols") != std::string::npos);

    auto rk = run_cli({"symbols", f.path, "--card", "3"});
    CHECK(rk.out.find("4 symbols") != std::string::npos);

    // empty list for an impossible cardinality
    auto r5 = run_cli({"symbols", f.path, "--card", "5"});
    CHECK(r5.code == 0);
    CHECK(r5.out.find("0 symbols") != std::string::npos);
}

TEST_CASE("sbridge command") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"sbridge", f.path, "--order", "0,1,2,3", "--symbol", "0,1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("z*w") != std::string::npos);
    auto none = run_cli({"sbridge", f.path, "--order", "0,1,2,3", "--symbol", "0,1"});
    CHECK(none.code == 1);
}

TEST_CASE("matching and critical commands") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"matching", f.path, "--order", "0,1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 edges, 4 proposals") != std::string::npos);

    auto re = run_cli({"matching", f.path, "--order", "0,1,2,3", "--eager"});
    CHECK(re.out == r.out);

    auto rc = run_cli({"critical", f.path, "--order", "0,1,2,3"});
    CHECK(rc.code == 0);
    CHECK(rc.out.find("ranks (1,4,4,1)") != std::string::npos);
}

TEST_CASE("matching JSON round-trips through validation") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"--format", "json", "matching", f.path, "--order", "0,1,2,3"});
    CHECK(r.code == 0);
    TempFile j("matching.json", r.out);
    auto rv = run_cli({"matching", f.path, "--order", "0,1,2,3", "--validate-json", j.path});
    CHECK(rv.code == 0);
    CHECK(rv.out.find("\"ok\": true") != std::string::npos);

    // corrupt an edge and the validator objects
    std::string broken = r.out;
    auto pos = broken.find("\"sbridge\"");
    REQUIRE(pos != std::string::npos);
    TempFile jb("broken.json", std::string("{\"edges\": [{\"source\": [0, 1], \"target\": [0], \"sbridge\": 1}]}"));
    auto rb = run_cli({"matching", f.path, "--order", "0,1,2,3", "--validate-json", jb.path});
    CHECK(rb.code == 1);

    // out-of-range generator indices are rejected, not dereferenced
    TempFile jo("oob.json", std::string("{\"edges\": [{\"source\": [0, 40], \"target\": [0], \"sbridge\": 40}]}"));
    auto ro = run_cli({"matching", f.path, "--order", "0,1,2,3", "--validate-json", jo.path});
    CHECK(ro.code == 1);
}

TEST_CASE("friendly and minimal verdict exit codes") {
    TempFile f("c4.txt", kFourCycle);
    CHECK(run_cli({"friendly", f.path, "--order", "0,1,2,3"}).code == 1);
    auto rm = run_cli({"minimal", f.path, "--order", "0,1,2,3"});
    CHECK(rm.code == 0);
    CHECK(rm.out.find("ranks (1,4,4,1)") != std::string::npos);

    TempFile g("dep.txt", "vars: x y z\nx^2*y^2\ny^2*z^2\nx*z^2\nx^2*z\n");
    CHECK(run_cli({"friendly", g.path, "--order", "0,1,2,3"}).code == 0);
    CHECK(run_cli({"minimal", g.path, "--order", "2,3,0,1"}).code == 1);
}

TEST_CASE("search flags") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"friendly", f.path, "--search"});
    CHECK(r.code == 1);  // exhausted, none found
    CHECK(r.out.find("exhausted-none") != std::string::npos);
    auto rm = run_cli({"minimal", f.path, "--search", "--dihedral"});
    CHECK(rm.code == 0);
    CHECK(rm.out.find("found") != std::string::npos);
}

TEST_CASE("compare command") {
    TempFile f("sq.txt", "vars: x y z w\nx*y\ny*z\nz*w\nw*x\n");
    auto r = run_cli({"compare", f.path, "--order", "3,0,1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("taylor         (1,4,6,4,1)") != std::string::npos);
    CHECK(r.out.find("lyubeznik      (1,4,5,2)") != std::string::npos);
    CHECK(r.out.find("scarf          (1,4,4)") != std::string::npos);
    CHECK(r.out.find("barile-macchia (1,4,4,1)") != std::string::npos);
    CHECK(r.out.find("(minimal)") != std::string::npos);
}

TEST_CASE("betti and oracle commands") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"betti", f.path, "--order", "0,1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("totals (1,4,4,1)") != std::string::npos);
    auto ro = run_cli({"betti", f.path, "--oracle"});
    CHECK(ro.out.find("totals (1,4,4,1)") != std::string::npos);
    auto r2 = run_cli({"--char", "0", "oracle", f.path});
    CHECK(r2.out.find("pd 3") != std::string::npos);
}

TEST_CASE("resolution command") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"resolution", f.path, "--order", "0,1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(minimal)") != std::string::npos);
    auto rl = run_cli({"resolution", f.path, "--order", "0,1,2,3", "--matching", "lyubeznik"});
    CHECK(rl.out.find("ranks (1,4,5,2)") != std::string::npos);
    auto rt = run_cli({"resolution", f.path, "--order", "0,1,2,3", "--matching", "taylor"});
    CHECK(rt.out.find("ranks (1,4,6,4,1)") != std::string::npos);
}

TEST_CASE("graph commands") {
    TempFile g("tree.txt",
               "vertex x y z u v w\n"
               "edge x -> y\nedge x -> u\nedge y -> z\nedge v -> y\nedge w -> z\n"
               "weight y 2\nweight z 2\n");
    auto ri = run_cli({"graph", "edge-ideal", g.path});
    CHECK(ri.code == 0);
    CHECK(ri.out.find("x*y^2") != std::string::npos);

    auto rs = run_cli({"graph", "sink", g.path});
    CHECK(rs.code == 0);
    CHECK(rs.out.find("weight y 2") != std::string::npos);
    CHECK(rs.out.find("weight z") == std::string::npos);  // z sank to 1

    TempFile c("cycle.txt",
               "vertex a b c d e\n"
               "edge a -> b\nedge b -> c\nedge c -> d\nedge d -> e\nedge e -> a\n"
               "weight a 2\n");
    auto rb = run_cli({"graph", "blocks", c.path});
    CHECK(rb.code == 0);
    CHECK(rb.out.find("non-classic") != std::string::npos);

    auto rr = run_cli({"graph", "recursion", c.path});
    CHECK(rr.code == 0);
    CHECK(rr.out.find("totals (1,5,6,2)") != std::string::npos);

    // the tree above is not naturally oriented, so the recursion declines
    auto rt = run_cli({"graph", "recursion", g.path});
    CHECK(rt.code == 2);

    TempFile nat("nat_tree.txt",
                 "vertex r a b c\n"
                 "edge r -> a\nedge r -> b\nedge a -> c\n"
                 "weight a 2\n");
    auto rn = run_cli({"graph", "recursion", nat.path});
    CHECK(rn.code == 0);
    CHECK(rn.out.find("totals (") != std::string::npos);
    auto rg = run_cli({"graph", "recursion", nat.path, "--graded"});
    CHECK(rg.code == 2);  // deepest-leaf parent has weight 2: graded recursion refuses

    // blocks on a branching tree (not a path or cycle)
    TempFile bt("btree.txt",
                "vertex x0 x1a x2a x1b x2b x1c\n"
                "edge x0 -> x1a\nedge x0 -> x2a\nedge x1a -> x1b\nedge x1a -> x2b\nedge x1b -> x1c\n"
                "weight x1a 2\nweight x2a 3\n");
    auto rbt = run_cli({"graph", "blocks", bt.path});
    CHECK(rbt.code == 0);
    CHECK(rbt.out.find("blockends:") != std::string::npos);

    TempFile p2("path.txt", "vertex a b c\nedge b -> a\nedge b -> c\nweight a 2\nweight c 3\n");
    auto rir = run_cli({"graph", "iron", p2.path});
    CHECK(rir.code == 0);

    auto rk = run_cli({"graph", "ek-split", "--n", "8"});
    CHECK(rk.code == 0);
    CHECK(rk.out.find("level 1 (I = J + K): valid") != std::string::npos);
    CHECK(rk.out.find("level 2 (J^K = J' + K'): valid") != std::string::npos);

    auto rkf = run_cli({"graph", "kflip-order", c.path, "--k", "1"});
    CHECK(rkf.code == 0);
}

TEST_CASE("types and morse-digraph commands") {
    TempFile f("c4.txt", kFourCycle);
    auto rt = run_cli({"types", f.path, "--order", "0,1,2,3"});
    CHECK(rt.code == 0);
    CHECK(rt.out.find("potential_type2_only:") != std::string::npos);
    auto rd = run_cli({"morse-digraph", f.path, "--order", "0,1,2,3"});
    CHECK(rd.code == 0);
    CHECK(rd.out.find("(reversed)") != std::string::npos);
    auto rb = run_cli({"base-digraph", f.path});
    CHECK(rb.code == 0);
    CHECK(rb.out.find("32 edges") != std::string::npos);
}

TEST_CASE("error exit codes") {
    CHECK(run_cli({"symbols", "/nonexistent/file.txt"}).code == 2);
    TempFile bad("bad.txt", "x*y\n");
    CHECK(run_cli({"symbols", bad.path}).code == 2);
    TempFile f("c4.txt", kFourCycle);
    CHECK(run_cli({"matching", f.path, "--order", "0,1"}).code == 2);
    CHECK(run_cli({"matching", f.path}).code == 2);  // missing required order

    // capacity: oracle on 17 generators
    std::string big = "vars:";
    for (int i = 0; i < 17; ++i) big += " v" + std::to_string(i);
    big += "\n";
    for (int i = 0; i < 17; ++i) big += "v" + std::to_string(i) + "\n";
    TempFile fb("big.txt", big);
    CHECK(run_cli({"betti", fb.path, "--oracle"}).code == 3);
}

TEST_CASE("json format flag") {
    TempFile f("c4.txt", kFourCycle);
    auto r = run_cli({"--format", "json", "compare", f.path, "--order", "0,1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"barile_macchia\"") != std::string::npos);
    auto rb = run_cli({"--format", "json", "betti", f.path, "--oracle"});
    CHECK(rb.out.find("\"multigraded\"") != std::string::npos);
    CHECK(rb.out.find("\"pd\": 3") != std::string::npos);
}
