#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "agraph/monomial.hpp"

namespace agraph {

/// Monomial ideal in n variables, stored as its minimal generators
/// (a divisibility antichain) sorted descending in lex. Two ideals are equal
/// iff their canonical generator sequences are equal.
class MonomialIdeal {
public:
    /// The zero ideal in n variables.
    explicit MonomialIdeal(std::size_t n = 1);

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }
    int max_generator_degree() const noexcept;

    /// "<x1^3, x2>"; the zero ideal prints as "<0>".
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    /// Canonical vertex order: compare generator sequences element-wise in lex.
    friend std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    friend MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> gens);
    std::size_t n_;
    std::vector<Monomial> gens_;
};

/// Strips every generator divisible by another one. Empty input gives the
/// zero ideal. Throws InvalidArgument when some monomial has length != n.
MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// Some pure power of every variable lies in the ideal.
bool is_artinian(const MonomialIdeal& ideal);

// The operations below need finite colength and throw NotArtinian otherwise.

/// Monomials outside the ideal, sorted descending in lex.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal);
std::size_t colength(const MonomialIdeal& ideal);
/// Standard monomials m with x_i * m in the ideal for every i.
std::vector<Monomial> socle(const MonomialIdeal& ideal);
/// Sum of monomial_weight over the socle.
long ideal_weight(const MonomialIdeal& ideal);
/// Sum of monomial_weight over all standard monomials. Strictly increases
/// along every move, so it is the termination potential for move paths.
long standard_weight(const MonomialIdeal& ideal);

/// The ideal whose standard monomials are exactly `standard` (which must be
/// closed under division and contain the unit).
MonomialIdeal ideal_from_standard_set(std::size_t n, std::span<const Monomial> standard);

}  // namespace agraph
