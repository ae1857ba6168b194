#include "doctest.h"

#include "agraph/errors.hpp"
#include "agraph/graph.hpp"
#include "agraph/json_io.hpp"
#include "agraph/subgroup.hpp"
#include "support.hpp"

using namespace agraph;
using namespace agraph::testing;

TEST_CASE("small trees") {
    const auto g23 = build_spanning_tree(2, 3);
    CHECK(g23.vertices.size() == 2);
    REQUIRE(g23.edges.size() == 1);
    CHECK(g23.edges[0].src == 1);
    CHECK(g23.edges[0].dst == 0);
    CHECK(*g23.edges[0].move_valid);

    for (std::size_t d = 1; d <= 5; ++d) {
        const auto g = build_spanning_tree(1, d);
        CHECK(g.vertices.size() == 1);
        CHECK(g.edges.empty());
        CHECK(certify_tree(g).ok());
    }

    const auto g33 = build_spanning_tree(3, 3);
    CHECK(g33.vertices.size() == 2);
    REQUIRE(g33.edges.size() == 1);
    CHECK(*g33.vertices[g33.edges[0].src].ideal == ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}}));
    CHECK(*g33.vertices[g33.edges[0].dst].ideal == terminal_ideal(3, 3));

    CHECK_THROWS_AS(build_spanning_tree(0, 3), InvalidArgument);
    BuildOptions capped;
    capped.vertex_cap = 1;
    CHECK_THROWS_AS(build_spanning_tree(2, 5, capped), ResourceCap);
}

TEST_CASE("uncovered vertices are aggregated") {
    try {
        (void)build_spanning_tree(2, 9);
        FAIL("expected UncoveredCase");
    } catch (const UncoveredCase& e) {
        const auto offending = json::parse(e.ideal_json());
        REQUIRE(offending.is_array());
        CHECK(offending.size() == 1);
        CHECK(offending[0].get<MonomialIdeal>() == ideal(2, {{4, 0}, {3, 1}, {2, 2}, {0, 3}}));
    }
}

TEST_CASE("connectivity") {
    AGraph two;
    two.vertices = {{"a", std::nullopt}, {"b", std::nullopt}};
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(simplex_tgraph(3)));
}

TEST_CASE("tree certificate catches broken trees") {
    auto g = build_spanning_tree(2, 6);
    REQUIRE(certify_tree(g).ok());

    auto extra = g;
    Edge e;
    e.src = 1;
    e.dst = 2;
    extra.edges.push_back(e);
    CHECK_FALSE(certify_tree(extra).ok());

    auto missing = g;
    missing.edges.pop_back();
    const auto c = certify_tree(missing);
    CHECK_FALSE(c.edge_count_ok);
    CHECK_FALSE(c.unique_sink);

    auto reversed = g;
    std::swap(reversed.edges[0].src, reversed.edges[0].dst);
    CHECK_FALSE(certify_tree(reversed).ok());
}

TEST_CASE("full verification on (2,6)") {
    BuildOptions opt;
    opt.verify_level = VerifyLevel::Full;
    const auto g = build_spanning_tree(2, 6, opt);
    CHECK(g.vertices.size() == 4);
    CHECK(g.counters.failed_edges == 0);
    CHECK(edges_verified(g));
    for (const auto& e : g.edges) {
        REQUIRE(e.report);
        CHECK(e.report->all_ok());
    }
}

TEST_CASE("property: sweep passes the tree certificate") {
    auto sweep = [](std::size_t n, std::size_t d) { return (n <= 3 && d <= 8) || (n == 4 && d <= 5); };
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t d = 1; d <= 8; ++d) {
            if (!sweep(n, d)) continue;
            const auto g = build_spanning_tree(n, d);
            const auto c = certify_tree(g);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(c.ok());
            CHECK(g.counters.uncovered == 0);
            CHECK(g.counters.failed_edges == 0);
        }
    }
}

TEST_CASE("DOT export") {
    CHECK(export_dot(build_spanning_tree(1, 1)) == "digraph \"agraph_n1_d1\" {\n  v0 [label=\"<x1>\"];\n}\n");
    CHECK(export_dot(simplex_tgraph(2)) ==
          "graph \"simplex_n2\" {\n"
          "  v0 [label=\"p0\"];\n  v1 [label=\"p1\"];\n  v2 [label=\"p2\"];\n"
          "  v0 -- v1;\n  v0 -- v2;\n  v1 -- v2;\n}\n");
    CHECK(export_dot(build_spanning_tree(2, 3)).find("v1 -> v0 [label=\"x1*x2 -> x1^3\"]") != std::string::npos);
}

TEST_CASE("JSON round trips") {
    BuildOptions opt;
    opt.verify_level = VerifyLevel::Full;
    for (auto [n, d] : {std::pair{2u, 6u}, {3u, 5u}, {2u, 10u}, {1u, 3u}}) {
        const auto g = build_spanning_tree(n, d, opt);
        const auto text = export_json(g);
        const auto back = import_json(text);
        CHECK(back == g);
        CHECK(export_json(back) == text);
    }
    const auto s = simplex_tgraph(4);
    CHECK(import_json(export_json(s)) == s);

    const auto vs = enumerate_borel_fixed(3, 5);
    CHECK(parse_as<VertexSet>(json(vs).dump()) == vs);

    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_polynomial(rng, 3, 3, 4);
        CHECK(parse_as<Polynomial>(json(p).dump()) == p);
    }
    const WeightMatrix w{2, {{1, 0}, {0, -3}}};
    CHECK(parse_as<WeightMatrix>(json(w).dump()) == w);
}

TEST_CASE("JSON readers validate input") {
    CHECK(parse_as<MonomialIdeal>(R"({"n":2,"gens":[[0,1],[3,0],[1,1]]})") == ideal(2, {{3, 0}, {0, 1}}));
    CHECK_THROWS_AS(parse_as<MonomialIdeal>(R"({"n":0,"gens":[]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_as<MonomialIdeal>(R"({"n":2,"gens":[[1,0,0]]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_as<MonomialIdeal>(R"({"n":2,"gens":[[1,-1]]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_as<MonomialIdeal>(R"({"gens":[]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_as<MonomialIdeal>("not json"), InvalidArgument);
    CHECK_THROWS_AS(parse_as<WeightMatrix>(R"({"n":2,"rows":[[1]]})"), InvalidArgument);
    CHECK_THROWS_AS(import_json(R"({"name":"x"})"), InvalidArgument);
}

TEST_CASE("serial and parallel builds export identical bytes") {
    for (auto [n, d] : {std::pair{2u, 8u}, {3u, 7u}, {4u, 5u}}) {
        BuildOptions serial, parallel;
        serial.policy = ExecPolicy::Serial;
        serial.verify_level = parallel.verify_level = VerifyLevel::Full;
        parallel.policy = ExecPolicy::Parallel;
        const auto a = build_spanning_tree(n, d, serial);
        const auto b = build_spanning_tree(n, d, parallel);
        CHECK(export_json(a) == export_json(b));
        CHECK(export_dot(a) == export_dot(b));
    }
}
