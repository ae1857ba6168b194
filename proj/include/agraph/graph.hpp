#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "agraph/borel.hpp"
#include "agraph/edge_family.hpp"
#include "agraph/exec.hpp"
#include "agraph/move.hpp"

namespace agraph {

enum class VerifyLevel { None, Fast, Full };

const char* to_string(VerifyLevel level);
/// "none" | "fast" | "full"; throws InvalidArgument otherwise.
VerifyLevel parse_verify_level(const std::string& text);

struct Vertex {
    std::string label;
    std::optional<MonomialIdeal> ideal;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::optional<Move> move;
    std::optional<bool> move_valid;       // set at verify level fast and full
    std::optional<EdgeFamily> family;     // set at verify level full
    std::optional<FamilyReport> report;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphCounters {
    std::size_t single_case = 0;
    std::size_t multiple_case = 0;
    std::size_t uncovered = 0;
    std::size_t failed_edges = 0;
    /// Edges along which the socle weight does not strictly increase.
    std::size_t socle_weight_nonincreasing = 0;
    friend bool operator==(const GraphCounters&, const GraphCounters&) = default;
};

/// Vertex ids are positions in `vertices`. Spanning trees use the canonical
/// ideal order, so the terminal ideal is vertex 0.
struct AGraph {
    std::string name;
    std::size_t n = 1;
    std::size_t d = 0;
    bool directed = true;
    VerifyLevel verify_level = VerifyLevel::None;
    std::vector<Rational> t_samples;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    GraphCounters counters;
    friend bool operator==(const AGraph&, const AGraph&) = default;
};

struct BuildOptions {
    VerifyLevel verify_level = VerifyLevel::Fast;
    ExecPolicy policy = ExecPolicy::Parallel;
    std::vector<Rational> t_samples = default_t_samples();
    std::size_t vertex_cap = kDefaultVertexCap;
    std::size_t groebner_step_cap = kDefaultGroebnerStepCap;
};

/// One edge from every non-terminal Borel-fixed vertex to its canonical
/// successor. Fast verification reruns is_valid_move per edge; full also
/// builds and checks the edge family. Failed checks are counted, not thrown.
/// Vertices the selection rules do not cover are collected and reported in a
/// single UncoveredCase (its ideal_json is an array of the offending ideals).
AGraph build_spanning_tree(std::size_t n, std::size_t d, const BuildOptions& options = {});

/// Reachability over edges taken as undirected.
bool is_connected(const AGraph& g);

struct TreeCertificate {
    bool endpoints_ok = false;       // ids in range, no self-loops or repeated edges
    bool edge_count_ok = false;      // |E| = |V| - 1
    bool connected = false;
    bool out_degree_ok = false;      // one out-edge per non-terminal vertex, none at the terminal
    bool unique_sink = false;        // exactly one vertex without out-edges, and it is the terminal ideal
    bool potential_increasing = false;  // standard weight grows along every edge

    bool ok() const {
        return endpoints_ok && edge_count_ok && connected && out_degree_ok && unique_sink && potential_increasing;
    }
};

/// Independent recheck of the spanning tree shape of a build_spanning_tree
/// output. Vertices must carry ideals.
TreeCertificate certify_tree(const AGraph& g);

/// Verification failures recorded on edges (invalid move or failed family).
bool edges_verified(const AGraph& g);

std::string export_dot(const AGraph& g);
std::string export_json(const AGraph& g);
/// Inverse of export_json; throws InvalidArgument on malformed input.
AGraph import_json(const std::string& text);

}  // namespace agraph
