#pragma once

#include <string>

#include "json.hpp"

#include "agraph/borel.hpp"
#include "agraph/edge_family.hpp"
#include "agraph/graph.hpp"
#include "agraph/move.hpp"
#include "agraph/polynomial.hpp"
#include "agraph/subgroup.hpp"

namespace agraph {

using json = nlohmann::json;

// Writers are canonical (generators in canonical order, rationals as "p/q"
// strings). Readers validate shapes and throw InvalidArgument; ideals are
// minimalized on read, so generator order and redundancy do not matter.

void to_json(json& j, const Monomial& m);
void from_json(const json& j, Monomial& m);

/// {"n": 3, "gens": [[3,0,0], [0,1,0], [0,0,1]]}
void to_json(json& j, const MonomialIdeal& ideal);
void from_json(const json& j, MonomialIdeal& ideal);

void to_json(json& j, const VertexSet& v);
void from_json(const json& j, VertexSet& v);

/// {"n": 2, "terms": [{"m": [1,0], "c": "1/2"}]}
void to_json(json& j, const Polynomial& p);
void from_json(const json& j, Polynomial& p);

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

void to_json(json& j, const MovePair& p);
void from_json(const json& j, MovePair& p);
void to_json(json& j, const MoveDerivation& d);
void from_json(const json& j, MoveDerivation& d);
void to_json(json& j, const Move& mv);
void from_json(const json& j, Move& mv);

void to_json(json& j, const Path& path);

void to_json(json& j, const EdgeFamily& f);
void from_json(const json& j, EdgeFamily& f);
void to_json(json& j, const FamilyReport& r);
void from_json(const json& j, FamilyReport& r);

/// {"n": 2, "rows": [[1,0], [0,1]]}
void to_json(json& j, const WeightMatrix& w);
void from_json(const json& j, WeightMatrix& w);
void to_json(json& j, const SeparationReport& r);

void to_json(json& j, const AGraph& g);
void from_json(const json& j, AGraph& g);

/// Parses `text` and converts, mapping every JSON error to InvalidArgument.
template <class T>
T parse_as(const std::string& text) {
    try {
        return json::parse(text).get<T>();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("bad JSON: ") + e.what());
    }
}

}  // namespace agraph
