// agraph: enumerate Borel-fixed points of Hilb^d(P^n), build and verify the
// canonical spanning tree, trace move paths, pick torus subgroups.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input,
// 3 uncovered selection case, 4 resource cap.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "agraph/borel.hpp"
#include "agraph/errors.hpp"
#include "agraph/graph.hpp"
#include "agraph/json_io.hpp"
#include "agraph/move.hpp"
#include "agraph/subgroup.hpp"

namespace {

using namespace agraph;

constexpr std::size_t kMaxParam = 10'000;

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kUncovered = 3, kCap = 4 };

struct RunConfig {
    std::size_t n = 0;
    std::size_t d = 0;
    std::string format = "json";
    std::string output;
    std::string verify_level = "fast";
    std::string t_samples = "1,2,3,5,7";
    std::size_t vertex_cap = kDefaultVertexCap;
    std::size_t groebner_cap = kDefaultGroebnerStepCap;
    bool serial = false;
    std::string ideal_file;
    std::string weights_file;
    std::string mode = "one";
};

std::vector<Rational> parse_samples(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Rational t = parse_rational(item);
        if (t == 0) throw InvalidArgument("t samples must be nonzero");
        for (const auto& s : out) {
            if (s == t) throw InvalidArgument("t samples must be distinct");
        }
        out.push_back(t);
    }
    if (out.empty()) throw InvalidArgument("at least one t sample is required");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw InvalidArgument("cannot write " + cfg.output);
    out << text;
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

BuildOptions build_options(const RunConfig& cfg, VerifyLevel level) {
    BuildOptions opt;
    opt.verify_level = level;
    opt.policy = cfg.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    opt.t_samples = parse_samples(cfg.t_samples);
    opt.vertex_cap = cfg.vertex_cap;
    opt.groebner_step_cap = cfg.groebner_cap;
    return opt;
}

int cmd_vertices(const RunConfig& cfg) {
    const auto vs = enumerate_borel_fixed(cfg.n, cfg.d, cfg.serial ? ExecPolicy::Serial : ExecPolicy::Parallel,
                                          cfg.vertex_cap);
    emit_json(cfg, vs);
    return kOk;
}

int cmd_tree(const RunConfig& cfg) {
    const AGraph g = build_spanning_tree(cfg.n, cfg.d, build_options(cfg, parse_verify_level(cfg.verify_level)));
    emit(cfg, cfg.format == "dot" ? export_dot(g) : export_json(g));
    const TreeCertificate cert = certify_tree(g);
    if (!cert.ok() || !edges_verified(g)) {
        std::cerr << "tree verification failed\n";
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_path(const RunConfig& cfg) {
    const auto ideal = parse_as<MonomialIdeal>(read_file(cfg.ideal_file));
    const Path path = path_to_terminal(ideal);
    emit_json(cfg, path);
    return kOk;
}

int cmd_simplex(const RunConfig& cfg) {
    const AGraph g = simplex_tgraph(cfg.n);
    emit(cfg, cfg.format == "json" ? export_json(g) : export_dot(g));
    return kOk;
}

std::size_t distinct_partitions(std::size_t d) {
    // q(d): partitions into distinct parts, by the 0/1 knapsack recurrence.
    std::vector<std::size_t> q(d + 1, 0);
    q[0] = 1;
    for (std::size_t part = 1; part <= d; ++part) {
        for (std::size_t s = d; s >= part; --s) q[s] += q[s - part];
    }
    return q[d];
}

int cmd_verify(const RunConfig& cfg) {
    const auto policy = cfg.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    json report;
    json failures = json::array();
    bool ok = true;
    auto record = [&](const char* name, bool pass) {
        report[name] = pass;
        ok = ok && pass;
    };

    const VertexSet vs = enumerate_borel_fixed(cfg.n, cfg.d, policy, cfg.vertex_cap);
    report["n"] = cfg.n;
    report["d"] = cfg.d;
    report["vertices"] = vs.ideals.size();
    if (cfg.n <= 3 && cfg.d <= 6) {
        record("oracle_match", brute_force_enumerate(cfg.n, cfg.d) == vs);
    }
    if (cfg.n == 2) record("distinct_partition_count", vs.ideals.size() == distinct_partitions(cfg.d));
    if (cfg.serial == false) {
        record("serial_parallel_agree", enumerate_borel_fixed(cfg.n, cfg.d, ExecPolicy::Serial, cfg.vertex_cap) == vs);
    }

    const std::string level = cfg.verify_level == "fast" ? "full" : cfg.verify_level;
    const AGraph g = build_spanning_tree(cfg.n, cfg.d, build_options(cfg, parse_verify_level(level)));
    report["verify_level"] = level;
    const TreeCertificate cert = certify_tree(g);
    record("tree_certificate", cert.ok());
    record("connected", cert.connected);
    record("unique_sink", cert.unique_sink);
    record("weights_monotone", cert.potential_increasing);

    bool edges_ok = true;
    bool families_ok = true;
    for (const auto& e : g.edges) {
        const bool move_ok = e.move_valid.value_or(true);
        const bool family_ok = !e.report || e.report->all_ok();
        edges_ok = edges_ok && move_ok;
        families_ok = families_ok && family_ok;
        if (!move_ok || !family_ok) {
            json item{{"src", *g.vertices[e.src].ideal}, {"dst", *g.vertices[e.dst].ideal}, {"move", *e.move}};
            if (e.family) item["family"] = *e.family;
            if (e.report) item["report"] = *e.report;
            failures.push_back(std::move(item));
        }
    }
    record("edges_valid", edges_ok);
    if (level == "full") record("families_verified", families_ok);

    // Each vertex must reach the terminal ideal by repeated successors.
    bool reach = true;
    for (const auto& ideal : vs.ideals) {
        const Path p = path_to_terminal(ideal);
        const MonomialIdeal& end = p.steps.empty() ? p.start : p.steps.back().ideal;
        if (end != vs.ideals.front()) {
            reach = false;
            failures.push_back({{"unreached", ideal}});
        }
    }
    record("paths_reach_terminal", reach);
    report["edges"] = g.edges.size();
    report["single_case"] = g.counters.single_case;
    report["multiple_case"] = g.counters.multiple_case;
    report["socle_weight_nonincreasing"] = g.counters.socle_weight_nonincreasing;
    report["failures"] = std::move(failures);
    report["ok"] = ok;
    emit_json(cfg, report);
    return ok ? kOk : kVerifyFailed;
}

int cmd_pick_subgroup(const RunConfig& cfg) {
    const auto w = parse_as<WeightMatrix>(read_file(cfg.weights_file));
    json out{{"mode", cfg.mode}, {"weights", w}};
    std::vector<long> a;
    std::optional<std::vector<long>> b;
    if (cfg.mode == "one") {
        auto r = pick_one_ps(w);
        a = r.a;
        out["pairings"] = r.pairings;
    } else if (cfg.mode == "two") {
        auto r = pick_two_ps(w);
        a = r.a;
        b = r.b;
        out["pairings"] = r.pairings;
        out["duplicate_rows"] = r.duplicate_rows;
    } else {
        auto r = pick_compatible_pair(w);
        a = r.a;
        b = r.b;
        out["first"] = {{"c", r.first.c}, {"p", r.first.p}};
        out["second"] = {{"c", r.second.c}, {"p", r.second.p}};
        out["pairings"] = r.pairings;
        out["duplicate_rows"] = r.duplicate_rows;
    }
    out["a"] = a;
    if (b) out["b"] = *b;
    const SeparationReport check = verify_separation(w, a, b);
    out["verified"] = check;
    emit_json(cfg, out);
    return check.ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A-graph spanning trees of Hilbert schemes of points"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_nd = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "number of variables")->required()->check(CLI::Range(std::size_t{1}, kMaxParam));
        sub->add_option("--d", cfg.d, "colength")->required()->check(CLI::Range(std::size_t{1}, kMaxParam));
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--vertex-cap", cfg.vertex_cap, "maximum number of vertices")
            ->envname("AGRAPH_VERTEX_CAP")
            ->check(CLI::PositiveNumber);
        sub->add_option("--groebner-cap", cfg.groebner_cap, "maximum S-polynomial reductions per basis")
            ->envname("AGRAPH_GROEBNER_STEP_CAP")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--serial", cfg.serial, "use the serial reference kernels");
    };
    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout"); };
    auto add_format = [&](CLI::App* sub, const char* def) {
        cfg.format = def;
        sub->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    };
    auto add_verify = [&](CLI::App* sub) {
        sub->add_option("--verify-level", cfg.verify_level, "none, fast or full")
            ->check(CLI::IsMember({"none", "fast", "full"}));
        sub->add_option("--t-samples", cfg.t_samples, "comma separated nonzero rationals");
    };

    auto* vertices = app.add_subcommand("vertices", "Borel-fixed ideals of colength d");
    add_nd(vertices);
    add_caps(vertices);
    add_output(vertices);

    auto* tree = app.add_subcommand("tree", "canonical spanning tree");
    add_nd(tree);
    add_caps(tree);
    add_output(tree);
    add_verify(tree);
    tree->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* path = app.add_subcommand("path", "move path from an ideal to the terminal ideal");
    path->add_option("--ideal", cfg.ideal_file, "ideal JSON file")->required();
    add_output(path);

    auto* verify = app.add_subcommand("verify", "property sweep for one (n, d)");
    add_nd(verify);
    add_caps(verify);
    add_output(verify);
    add_verify(verify);

    auto* simplex = app.add_subcommand("simplex", "1-skeleton of the standard n-simplex");
    simplex->add_option("--n", cfg.n, "dimension")->required()->check(CLI::Range(std::size_t{1}, kMaxParam));
    add_output(simplex);
    simplex->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* pick = app.add_subcommand("pick-subgroup", "torus subgroups separating given weights");
    pick->add_option("--weights", cfg.weights_file, "weight matrix JSON file")->required();
    pick->add_option("--mode", cfg.mode, "one, two or compatible")->check(CLI::IsMember({"one", "two", "compatible"}));
    add_output(pick);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }
    if (simplex->parsed() && simplex->count("--format") == 0) cfg.format = "dot";

    try {
        if (vertices->parsed()) return cmd_vertices(cfg);
        if (tree->parsed()) return cmd_tree(cfg);
        if (path->parsed()) return cmd_path(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (simplex->parsed()) return cmd_simplex(cfg);
        if (pick->parsed()) return cmd_pick_subgroup(cfg);
    } catch (const InfeasibleWeights& e) {
        json err{{"error", e.kind() == InfeasibleWeights::Kind::ZeroRow ? "ZeroRow" : "Incompatible"},
                 {"vector", e.vector()},
                 {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return kBadInput;
    } catch (const UncoveredCase& e) {
        std::cerr << json{{"error", "UncoveredCase"}, {"reason", e.reason()}, {"ideal", json::parse(e.ideal_json())}}.dump()
                  << "\n";
        return kUncovered;
    } catch (const ResourceCap& e) {
        std::cerr << json{{"error", "ResourceCap"}, {"message", e.what()}, {"reached", e.reached()}}.dump() << "\n";
        return kCap;
    } catch (const InvalidArgument& e) {
        std::cerr << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
        return kBadInput;
    } catch (const NotArtinian& e) {
        std::cerr << json{{"error", "NotArtinian"}, {"message", e.what()}}.dump() << "\n";
        return kBadInput;
    } catch (const MoveError& e) {
        std::cerr << json{{"error", "MoveError"}, {"message", e.what()}}.dump() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << json{{"error", "Error"}, {"message", e.what()}}.dump() << "\n";
        return kVerifyFailed;
    }
    return kBadInput;
}
