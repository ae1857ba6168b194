// Drives the agraph binary and checks exit codes and outputs.

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string scratch(const std::string& name) { return std::string(AGRAPH_TEST_TMP) + "/" + name; }

Run run(const std::string& args, const std::string& env = {}) {
    const std::string out_file = scratch("cli_stdout.txt");
    const std::string cmd = env + " " + std::string(AGRAPH_CLI) + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string write(const std::string& name, const std::string& content) {
    const std::string path = scratch(name);
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("vertices") {
    auto r = run("vertices --n 2 --d 3");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["ideals"].size() == 2);
    CHECK(run("vertices --n 0 --d 3").code == 2);
    CHECK(nlohmann::json::parse(run("vertices --n 1 --d 7").out)["ideals"].size() == 1);
    CHECK(run("vertices --n 2").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("tree") {
    auto dot = run("tree --n 3 --d 3 --format dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    CHECK(dot.out.find("v1 -> v0") != std::string::npos);

    auto full = run("tree --n 2 --d 6 --verify-level full");
    CHECK(full.code == 0);
    const auto g = nlohmann::json::parse(full.out);
    CHECK(g["vertices"].size() == 4);
    for (const auto& e : g["edges"]) CHECK(e["report"]["ok"] == true);

    CHECK(run("tree --n 1 --d 4").code == 0);
    CHECK(run("tree --n 2 --d 9").code == 3);
    CHECK(run("tree --n 2 --d 4 --verify-level full --t-samples 1,0").code == 2);
    CHECK(run("tree --n 2 --d 4 --verify-level sloppy").code == 2);
    // Byte-stable output, serial or parallel.
    CHECK(run("tree --n 3 --d 6 --verify-level full").out == run("tree --n 3 --d 6 --verify-level full --serial").out);
}

TEST_CASE("path") {
    const auto worked = write("example_I.json",
                             R"({"n":3,"gens":[[3,0,0],[2,1,0],[2,0,1],[1,2,0],[1,1,1],[1,0,2],[0,3,0],[0,2,1],[0,1,2],[0,0,3]]})");
    auto r = run("path --ideal " + worked);
    REQUIRE(r.code == 0);
    const auto p = nlohmann::json::parse(r.out);
    CHECK(p["steps"][0]["move"]["summary"] == "x1*x3^2 -> x1^4");

    const auto terminal = write("terminal.json", R"({"n":2,"gens":[[4,0],[0,1]]})");
    auto t = run("path --ideal " + terminal);
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["steps"].empty());

    const auto nonborel = write("nonborel.json", R"({"n":2,"gens":[[2,0],[0,2]]})");
    CHECK(run("path --ideal " + nonborel).code == 2);
    CHECK(run("path --ideal " + scratch("does_not_exist.json")).code == 2);
    const auto broken = write("broken.json", R"({"n":2,"gens":[[2,0,1]]})");
    CHECK(run("path --ideal " + broken).code == 2);
}

TEST_CASE("verify") {
    auto r = run("verify --n 2 --d 5");
    CHECK(r.code == 0);
    const auto rep = nlohmann::json::parse(r.out);
    CHECK(rep["vertices"] == 3);
    CHECK(rep["edges_valid"] == true);
    CHECK(rep["weights_monotone"] == true);
    CHECK(run("verify --n 3 --d 3").code == 0);
    CHECK(run("verify --n 2 --d 5 --vertex-cap 1").code == 4);
    CHECK(run("verify --n 2 --d 5", "AGRAPH_VERTEX_CAP=1").code == 4);
    CHECK(run("tree --n 3 --d 5 --verify-level full", "AGRAPH_GROEBNER_STEP_CAP=1").code == 4);
}

TEST_CASE("simplex and pick-subgroup") {
    auto s = run("simplex --n 4");
    CHECK(s.code == 0);
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = s.out.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(edges == 10);

    const auto w = write("weights.json", R"({"n":2,"rows":[[1,0],[0,1],[1,-1]]})");
    auto p = run("pick-subgroup --weights " + w);
    CHECK(p.code == 0);
    const auto out = nlohmann::json::parse(p.out);
    CHECK(out["a"] == nlohmann::json::array({2, 1}));
    CHECK(out["pairings"] == nlohmann::json::array({2, 1, 1}));
    CHECK(out["verified"]["ok"] == true);
    CHECK(run("pick-subgroup --mode compatible --weights " + w).code == 0);
    CHECK(run("pick-subgroup --mode two --weights " + w).code == 0);

    const auto zero = write("zero.json", R"({"n":2,"rows":[[1,0],[0,0]]})");
    CHECK(run("pick-subgroup --weights " + zero).code == 2);
    const auto incompatible = write("incompatible.json", R"({"n":3,"rows":[[1,-2,1]]})");
    CHECK(run("pick-subgroup --mode compatible --weights " + incompatible).code == 2);
}
