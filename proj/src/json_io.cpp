#include "agraph/json_io.hpp"

#include "agraph/errors.hpp"

namespace agraph {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw InvalidArgument(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw InvalidArgument(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned()) throw InvalidArgument(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw InvalidArgument(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

bool bool_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_boolean()) throw InvalidArgument(std::string("field \"") + key + "\" must be a boolean");
    return v.get<bool>();
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw InvalidArgument(std::string("field \"") + key + "\" must be an array");
    return v;
}

std::size_t positive_n(const json& j) {
    const std::size_t n = count_field(j, "n");
    if (n < 1) throw InvalidArgument("n must be >= 1");
    return n;
}

Monomial monomial_of(const json& j, std::size_t n) {
    Monomial m = j.get<Monomial>();
    if (m.nvars() != n) throw InvalidArgument("monomial " + j.dump() + " does not have " + std::to_string(n) + " exponents");
    return m;
}

std::vector<Monomial> monomials_of(const json& arr, std::size_t n) {
    if (!arr.is_array()) throw InvalidArgument("expected an array of monomials");
    std::vector<Monomial> out;
    for (const auto& m : arr) out.push_back(monomial_of(m, n));
    return out;
}

}  // namespace

void to_json(json& j, const Monomial& m) { j = m.exponents(); }

void from_json(const json& j, Monomial& m) {
    if (!j.is_array() || j.empty()) throw InvalidArgument("monomial must be a non-empty exponent array");
    std::vector<int> e;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) {
            throw InvalidArgument("exponents must be non-negative integers: " + j.dump());
        }
        e.push_back(x.get<int>());
    }
    m = Monomial(std::move(e));
}

void to_json(json& j, const MonomialIdeal& ideal) {
    j = json{{"n", ideal.nvars()}, {"gens", ideal.generators()}};
}

void from_json(const json& j, MonomialIdeal& ideal) {
    const std::size_t n = positive_n(j);
    ideal = minimalize(n, monomials_of(array_field(j, "gens"), n));
}

void to_json(json& j, const VertexSet& v) {
    j = json{{"n", v.n}, {"d", v.d}, {"count", v.ideals.size()}, {"ideals", v.ideals}};
}

void from_json(const json& j, VertexSet& v) {
    v.n = positive_n(j);
    v.d = count_field(j, "d");
    v.ideals.clear();
    for (const auto& item : array_field(j, "ideals")) {
        auto ideal = item.get<MonomialIdeal>();
        if (ideal.nvars() != v.n) throw InvalidArgument("vertex ideal has the wrong number of variables");
        v.ideals.push_back(std::move(ideal));
    }
}

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InvalidArgument("rational must be a string \"p/q\" or an integer");
    return parse_rational(j.get<std::string>());
}

void to_json(json& j, const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"m", m}, {"c", rational_to_json(c)}});
    j = json{{"n", p.nvars()}, {"terms", std::move(terms)}};
}

void from_json(const json& j, Polynomial& p) {
    const std::size_t n = positive_n(j);
    p = Polynomial(n);
    for (const auto& t : array_field(j, "terms")) p.add_term(monomial_of(field(t, "m"), n), rational_from_json(field(t, "c")));
}

void to_json(json& j, const MovePair& p) { j = json{{"src", p.source}, {"dst", p.target}}; }

void from_json(const json& j, MovePair& p) {
    p.source = field(j, "src").get<Monomial>();
    p.target = field(j, "dst").get<Monomial>();
}

void to_json(json& j, const MoveDerivation& d) {
    j = json{{"case", d.kind == MoveCase::Single ? "single" : "multiple"},
             {"top_degree", d.top_degree},
             {"j", d.j},
             {"l", d.l},
             {"s", d.s},
             {"h", d.h},
             {"k", d.k},
             {"d_prime", d.d_prime}};
}

void from_json(const json& j, MoveDerivation& d) {
    const json& kind = field(j, "case");
    if (kind == "single") {
        d.kind = MoveCase::Single;
    } else if (kind == "multiple") {
        d.kind = MoveCase::Multiple;
    } else {
        throw InvalidArgument("derivation case must be \"single\" or \"multiple\"");
    }
    d.top_degree = int_field(j, "top_degree");
    d.j = int_field(j, "j");
    d.l = int_field(j, "l");
    d.s = int_field(j, "s");
    d.h = int_field(j, "h");
    d.k = int_field(j, "k");
    d.d_prime = int_field(j, "d_prime");
}

void to_json(json& j, const Move& mv) {
    j = json{{"pairs", mv.pairs}, {"summary", mv.summary()}};
    if (mv.derivation) j["derivation"] = *mv.derivation;
}

void from_json(const json& j, Move& mv) {
    mv.pairs.clear();
    for (const auto& p : array_field(j, "pairs")) mv.pairs.push_back(p.get<MovePair>());
    if (mv.pairs.empty()) throw InvalidArgument("a move needs at least one pair");
    mv.derivation.reset();
    if (j.contains("derivation")) mv.derivation = j["derivation"].get<MoveDerivation>();
}

void to_json(json& j, const Path& path) {
    json steps = json::array();
    for (const auto& s : path.steps) {
        steps.push_back({{"move", s.move},
                         {"ideal", s.ideal},
                         {"socle_weight", s.socle_weight},
                         {"standard_weight", s.standard_weight}});
    }
    j = json{{"start", path.start},
             {"start_socle_weight", path.start_socle_weight},
             {"start_standard_weight", path.start_standard_weight},
             {"length", path.steps.size()},
             {"steps", std::move(steps)},
             {"socle_weight_nonincreasing", path.socle_weight_nonincreasing}};
}

void to_json(json& j, const EdgeFamily& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(rational_to_json(c));
    json moving = json::array();
    for (const auto& [lead, tail] : f.moving_gens) moving.push_back({{"lead", lead}, {"tail", tail}});
    j = json{{"base", f.base},      {"move", f.move},     {"l", f.l},
             {"a", f.a_vals},       {"coeffs", coeffs},   {"moving", std::move(moving)},
             {"fixed", f.fixed_gens}};
}

void from_json(const json& j, EdgeFamily& f) {
    f.base = field(j, "base").get<MonomialIdeal>();
    const std::size_t n = f.base.nvars();
    f.move = field(j, "move").get<Move>();
    f.l = int_field(j, "l");
    f.a_vals.clear();
    for (const auto& a : array_field(j, "a")) {
        if (!a.is_number_integer()) throw InvalidArgument("family exponents must be integers");
        f.a_vals.push_back(a.get<int>());
    }
    f.coeffs.clear();
    for (const auto& c : array_field(j, "coeffs")) f.coeffs.push_back(rational_from_json(c));
    f.moving_gens.clear();
    for (const auto& g : array_field(j, "moving")) {
        f.moving_gens.emplace_back(monomial_of(field(g, "lead"), n), monomial_of(field(g, "tail"), n));
    }
    f.fixed_gens = monomials_of(array_field(j, "fixed"), n);
    if (f.a_vals.size() != f.move.pairs.size() || f.coeffs.size() != f.move.pairs.size() ||
        f.moving_gens.size() != f.move.pairs.size()) {
        throw InvalidArgument("edge family arrays disagree in length");
    }
}

void to_json(json& j, const FamilyReport& r) {
    json samples = json::array();
    for (const auto& t : r.samples) samples.push_back(rational_to_json(t));
    j = json{{"samples", std::move(samples)},
             {"base_ok", r.base_ok},
             {"fixed_at", r.fixed_at},
             {"colength_at", r.colength_at},
             {"fixed_ok", r.fixed_ok},
             {"colength_ok", r.colength_ok},
             {"limit_ok", r.limit_ok},
             {"ok", r.all_ok()}};
}

void from_json(const json& j, FamilyReport& r) {
    r.samples.clear();
    for (const auto& t : array_field(j, "samples")) r.samples.push_back(rational_from_json(t));
    r.base_ok = bool_field(j, "base_ok");
    r.fixed_at = array_field(j, "fixed_at").get<std::vector<bool>>();
    r.colength_at = array_field(j, "colength_at").get<std::vector<std::size_t>>();
    r.fixed_ok = bool_field(j, "fixed_ok");
    r.colength_ok = bool_field(j, "colength_ok");
    r.limit_ok = bool_field(j, "limit_ok");
    if (r.fixed_at.size() != r.samples.size() || r.colength_at.size() != r.samples.size()) {
        throw InvalidArgument("family report arrays disagree in length");
    }
}

void to_json(json& j, const WeightMatrix& w) { j = json{{"n", w.n}, {"rows", w.rows}}; }

void from_json(const json& j, WeightMatrix& w) {
    w.n = positive_n(j);
    w.rows.clear();
    for (const auto& row : array_field(j, "rows")) {
        if (!row.is_array() || row.size() != w.n) throw InvalidArgument("weight row " + row.dump() + " must have n entries");
        std::vector<long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw InvalidArgument("weights must be integers");
            r.push_back(x.get<long>());
        }
        w.rows.push_back(std::move(r));
    }
}

void to_json(json& j, const SeparationReport& r) {
    json violated = json::array();
    for (const auto& v : r.violated) violated.push_back({{"constraint", v.what}, {"vector", v.vector}});
    j = json{{"ok", r.ok}, {"violated", std::move(violated)}};
}

void to_json(json& j, const AGraph& g) {
    json vertices = json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        json v{{"id", i}, {"label", g.vertices[i].label}};
        if (g.vertices[i].ideal) v["ideal"] = *g.vertices[i].ideal;
        vertices.push_back(std::move(v));
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        json item{{"src", e.src}, {"dst", e.dst}};
        if (e.move) item["move"] = *e.move;
        if (e.move_valid) item["move_valid"] = *e.move_valid;
        if (e.family) item["family"] = *e.family;
        if (e.report) item["report"] = *e.report;
        edges.push_back(std::move(item));
    }
    json samples = json::array();
    for (const auto& t : g.t_samples) samples.push_back(rational_to_json(t));
    const auto& c = g.counters;
    j = json{{"name", g.name},
             {"n", g.n},
             {"d", g.d},
             {"directed", g.directed},
             {"verify_level", to_string(g.verify_level)},
             {"t_samples", std::move(samples)},
             {"counters",
              {{"single_case", c.single_case},
               {"multiple_case", c.multiple_case},
               {"uncovered", c.uncovered},
               {"failed_edges", c.failed_edges},
               {"socle_weight_nonincreasing", c.socle_weight_nonincreasing}}},
             {"vertices", std::move(vertices)},
             {"edges", std::move(edges)}};
}

void from_json(const json& j, AGraph& g) {
    const json& name = field(j, "name");
    if (!name.is_string()) throw InvalidArgument("graph name must be a string");
    g.name = name.get<std::string>();
    g.n = positive_n(j);
    g.d = count_field(j, "d");
    g.directed = bool_field(j, "directed");
    const json& level = field(j, "verify_level");
    if (!level.is_string()) throw InvalidArgument("verify_level must be a string");
    g.verify_level = parse_verify_level(level.get<std::string>());
    g.t_samples.clear();
    for (const auto& t : array_field(j, "t_samples")) g.t_samples.push_back(rational_from_json(t));
    const json& c = field(j, "counters");
    g.counters = {count_field(c, "single_case"), count_field(c, "multiple_case"), count_field(c, "uncovered"),
                  count_field(c, "failed_edges"), count_field(c, "socle_weight_nonincreasing")};

    g.vertices.clear();
    for (const auto& v : array_field(j, "vertices")) {
        if (count_field(v, "id") != g.vertices.size()) throw InvalidArgument("vertex ids must be 0, 1, 2, ...");
        const json& label = field(v, "label");
        if (!label.is_string()) throw InvalidArgument("vertex label must be a string");
        Vertex vertex{label.get<std::string>(), std::nullopt};
        if (v.contains("ideal")) {
            vertex.ideal = v["ideal"].get<MonomialIdeal>();
            if (vertex.ideal->nvars() != g.n) throw InvalidArgument("vertex ideal has the wrong number of variables");
        }
        g.vertices.push_back(std::move(vertex));
    }
    g.edges.clear();
    for (const auto& e : array_field(j, "edges")) {
        Edge edge;
        edge.src = count_field(e, "src");
        edge.dst = count_field(e, "dst");
        if (edge.src >= g.vertices.size() || edge.dst >= g.vertices.size()) {
            throw InvalidArgument("edge endpoint out of range");
        }
        if (e.contains("move")) edge.move = e["move"].get<Move>();
        if (e.contains("move_valid")) edge.move_valid = bool_field(e, "move_valid");
        if (e.contains("family")) edge.family = e["family"].get<EdgeFamily>();
        if (e.contains("report")) edge.report = e["report"].get<FamilyReport>();
        g.edges.push_back(std::move(edge));
    }
}

}  // namespace agraph
