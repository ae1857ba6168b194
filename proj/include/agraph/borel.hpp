#pragma once

#include <cstddef>
#include <vector>

#include "agraph/exec.hpp"
#include "agraph/ideal.hpp"

namespace agraph {

/// Borel-fixed monomial ideals of colength d in n variables, in canonical
/// (descending) order. The terminal ideal is always first.
struct VertexSet {
    std::size_t n = 1;
    std::size_t d = 1;
    std::vector<MonomialIdeal> ideals;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// For every minimal generator m and every i < n with x_i | m, the monomial
/// (x_{i+1}/x_i) m lies in the ideal. Checking generators suffices: the
/// exchange commutes with multiplication by any cofactor.
bool is_borel_fixed(const MonomialIdeal& ideal);

/// <x_1^d, x_2, ..., x_n>.
MonomialIdeal terminal_ideal(std::size_t n, std::size_t d);

/// Exhaustive enumeration through standard-monomial sets closed under
/// division and under x_{i+1} -> x_i. Throws ResourceCap when more than
/// `vertex_cap` ideals exist.
VertexSet enumerate_borel_fixed(std::size_t n, std::size_t d,
                                ExecPolicy policy = ExecPolicy::Parallel,
                                std::size_t vertex_cap = kDefaultVertexCap);

/// Independent oracle: every Artinian monomial ideal of colength d (built as
/// nested chains of (n-1)-variable staircases), filtered by is_borel_fixed.
/// Only meant for n <= 3 and small d; throws ResourceCap above
/// `max_candidates` candidate ideals.
VertexSet brute_force_enumerate(std::size_t n, std::size_t d, std::size_t max_candidates = 200'000);

/// All Artinian monomial ideals of colength exactly d (same chain
/// construction as the oracle, without the Borel filter).
std::vector<MonomialIdeal> all_monomial_ideals(std::size_t n, std::size_t d,
                                               std::size_t max_candidates = 200'000);

}  // namespace agraph
