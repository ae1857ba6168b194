#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "agraph/ideal.hpp"
#include "agraph/polynomial.hpp"

namespace agraph {

/// Both orders use x_1 > x_2 > ... > x_n.
enum class TermOrder { DegRevLex, Lex };

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order);

/// Leading monomial and coefficient; p must be nonzero.
const Monomial& leading_monomial(const Polynomial& p, TermOrder order);
const Rational& leading_coefficient(const Polynomial& p, TermOrder order);

inline constexpr std::size_t kDefaultGroebnerStepCap = 200'000;

/// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
/// (descending in the term order). Equal ideals give identical bases.
struct GroebnerBasis {
    std::size_t n = 1;
    TermOrder order = TermOrder::DegRevLex;
    std::vector<Polynomial> basis;

    /// The monomial ideal generated by the leading monomials.
    MonomialIdeal initial_ideal() const;
    friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties by pair index) and the coprime-leading-term criterion. Every
/// S-polynomial reduction counts as one step; exceeding `step_cap` throws
/// ResourceCap. Zero generators are ignored.
GroebnerBasis buchberger(std::span<const Polynomial> gens, TermOrder order = TermOrder::DegRevLex,
                         std::size_t step_cap = kDefaultGroebnerStepCap);

/// Full reduction of p modulo G.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

bool ideal_member(const Polynomial& p, const GroebnerBasis& g);

/// Colength of the initial ideal, i.e. dim_Q of the quotient ring.
/// Throws NotArtinian if the initial ideal has infinite colength.
std::size_t poly_colength(const GroebnerBasis& g);

/// Exact G_a-fixedness: every coefficient of a^k in theta(a)(g) lies in the
/// ideal, for every generator g.
bool is_ga_fixed_poly_ideal(std::span<const Polynomial> gens,
                            std::size_t step_cap = kDefaultGroebnerStepCap);

}  // namespace agraph
