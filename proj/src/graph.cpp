#include "agraph/graph.hpp"

#include <exception>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "agraph/errors.hpp"
#include "agraph/json_io.hpp"

namespace agraph {

const char* to_string(VerifyLevel level) {
    switch (level) {
        case VerifyLevel::None: return "none";
        case VerifyLevel::Fast: return "fast";
        case VerifyLevel::Full: return "full";
    }
    return "?";
}

VerifyLevel parse_verify_level(const std::string& text) {
    if (text == "none") return VerifyLevel::None;
    if (text == "fast") return VerifyLevel::Fast;
    if (text == "full") return VerifyLevel::Full;
    throw InvalidArgument("verify level must be none, fast or full, got \"" + text + "\"");
}

namespace {

// Runs body(i) for i in [0, count). Exceptions are captured per index and the
// one with the smallest index is rethrown, so failures do not depend on the
// schedule.
template <class Body>
void for_each_index(std::size_t count, ExecPolicy policy, Body body) {
    std::vector<std::exception_ptr> errors(count);
    const long total = static_cast<long>(count);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < total; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (long i = 0; i < total; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

AGraph build_spanning_tree(std::size_t n, std::size_t d, const BuildOptions& options) {
    if (n < 1 || d < 1) throw InvalidArgument("build_spanning_tree needs n >= 1 and d >= 1");
    if (options.verify_level == VerifyLevel::Full) {
        for (std::size_t a = 0; a < options.t_samples.size(); ++a) {
            if (options.t_samples[a] == 0) throw InvalidArgument("t samples must be nonzero");
            for (std::size_t b = 0; b < a; ++b) {
                if (options.t_samples[a] == options.t_samples[b]) throw InvalidArgument("t samples must be distinct");
            }
        }
    }
    VertexSet vs = enumerate_borel_fixed(n, d, options.policy, options.vertex_cap);
    const MonomialIdeal terminal = terminal_ideal(n, d);
    if (vs.ideals.empty() || vs.ideals.front() != terminal) throw Error("enumeration does not start at the terminal ideal");

    AGraph g;
    g.name = "agraph_n" + std::to_string(n) + "_d" + std::to_string(d);
    g.n = n;
    g.d = d;
    g.directed = true;
    g.verify_level = options.verify_level;
    if (options.verify_level == VerifyLevel::Full) g.t_samples = options.t_samples;

    std::map<MonomialIdeal, std::size_t> index;
    for (std::size_t i = 0; i < vs.ideals.size(); ++i) {
        index.emplace(vs.ideals[i], i);
        g.vertices.push_back({vs.ideals[i].to_string(), vs.ideals[i]});
    }

    const std::size_t count = vs.ideals.size();
    std::vector<std::optional<Successor>> successors(count);
    std::vector<std::string> uncovered(count);
    for_each_index(count, options.policy, [&](std::size_t i) {
        if (i == 0) return;
        try {
            successors[i] = canonical_successor(vs.ideals[i]);
        } catch (const UncoveredCase& e) {
            uncovered[i] = e.reason();
        }
    });

    json offending = json::array();
    std::string reasons;
    for (std::size_t i = 1; i < count; ++i) {
        if (uncovered[i].empty()) continue;
        ++g.counters.uncovered;
        offending.push_back(vs.ideals[i]);
        if (reasons.empty()) reasons = uncovered[i];
    }
    if (g.counters.uncovered > 0) {
        throw UncoveredCase(std::to_string(g.counters.uncovered) + " vertices uncovered, first: " + reasons,
                            offending.dump());
    }

    for (std::size_t i = 1; i < count; ++i) {
        auto& s = *successors[i];
        auto it = index.find(s.ideal);
        if (it == index.end()) throw Error("successor " + s.ideal.to_string() + " is not an enumerated vertex");
        if (s.move.derivation && s.move.derivation->kind == MoveCase::Multiple) {
            ++g.counters.multiple_case;
        } else {
            ++g.counters.single_case;
        }
        if (ideal_weight(s.ideal) <= ideal_weight(vs.ideals[i])) ++g.counters.socle_weight_nonincreasing;
        Edge edge;
        edge.src = i;
        edge.dst = it->second;
        edge.move = std::move(s.move);
        g.edges.push_back(std::move(edge));
    }

    if (options.verify_level != VerifyLevel::None) {
        for_each_index(g.edges.size(), options.policy, [&](std::size_t e) {
            Edge& edge = g.edges[e];
            const MonomialIdeal& base = vs.ideals[edge.src];
            const MoveReport report = is_valid_move(base, *edge.move);
            edge.move_valid = report.valid && *report.result == vs.ideals[edge.dst];
            if (options.verify_level == VerifyLevel::Full && *edge.move_valid) {
                edge.family = build_edge_family(base, *edge.move);
                edge.report = verify_family(*edge.family, options.t_samples, options.groebner_step_cap);
            }
        });
        for (const auto& edge : g.edges) {
            const bool ok = *edge.move_valid && (options.verify_level != VerifyLevel::Full || edge.report->all_ok());
            if (!ok) ++g.counters.failed_edges;
        }
    }
    return g;
}

bool is_connected(const AGraph& g) {
    const std::size_t count = g.vertices.size();
    if (count == 0) return true;
    std::vector<std::vector<std::size_t>> adj(count);
    for (const auto& e : g.edges) {
        if (e.src >= count || e.dst >= count) return false;
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::vector<bool> seen(count, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == count;
}

TreeCertificate certify_tree(const AGraph& g) {
    TreeCertificate cert;
    const std::size_t count = g.vertices.size();
    if (count == 0) return cert;
    for (const auto& v : g.vertices) {
        if (!v.ideal) return cert;
    }

    cert.endpoints_ok = true;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : g.edges) {
        if (e.src >= count || e.dst >= count || e.src == e.dst ||
            !seen.emplace(std::min(e.src, e.dst), std::max(e.src, e.dst)).second) {
            cert.endpoints_ok = false;
        }
    }
    if (!cert.endpoints_ok) return cert;
    cert.edge_count_ok = g.edges.size() + 1 == count;
    cert.connected = is_connected(g);

    const MonomialIdeal terminal = terminal_ideal(g.n, g.d);
    std::vector<std::size_t> out_degree(count, 0);
    for (const auto& e : g.edges) ++out_degree[e.src];
    cert.out_degree_ok = true;
    std::size_t sinks = 0;
    bool sink_is_terminal = false;
    for (std::size_t i = 0; i < count; ++i) {
        const bool is_terminal = *g.vertices[i].ideal == terminal;
        if (out_degree[i] != (is_terminal ? 0u : 1u)) cert.out_degree_ok = false;
        if (out_degree[i] == 0) {
            ++sinks;
            sink_is_terminal = is_terminal;
        }
    }
    cert.unique_sink = sinks == 1 && sink_is_terminal;

    cert.potential_increasing = true;
    for (const auto& e : g.edges) {
        if (standard_weight(*g.vertices[e.dst].ideal) <= standard_weight(*g.vertices[e.src].ideal)) {
            cert.potential_increasing = false;
        }
    }
    return cert;
}

bool edges_verified(const AGraph& g) {
    for (const auto& e : g.edges) {
        if (e.move_valid && !*e.move_valid) return false;
        if (e.report && !e.report->all_ok()) return false;
    }
    return true;
}

std::string export_dot(const AGraph& g) {
    std::ostringstream out;
    out << (g.directed ? "digraph" : "graph") << " \"" << escape(g.name) << "\" {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out << "  v" << i << " [label=\"" << escape(g.vertices[i].label) << "\"];\n";
    }
    const char* arrow = g.directed ? " -> " : " -- ";
    for (const auto& e : g.edges) {
        out << "  v" << e.src << arrow << "v" << e.dst;
        if (e.move) out << " [label=\"" << escape(e.move->summary()) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const AGraph& g) { return json(g).dump(2) + "\n"; }

AGraph import_json(const std::string& text) { return parse_as<AGraph>(text); }

}  // namespace agraph
