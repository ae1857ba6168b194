#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "agraph/groebner.hpp"
#include "agraph/move.hpp"

namespace agraph {

/// The one-parameter family
///   I_t = < m_i'/x_1 + c_i t m_i/x_1 (moving pairs), remaining generators of I >
/// joining I (t = 0) to the move successor J (t -> infinity), with
/// c_i = (a_i + l)! / (a_i - 1)! where x_1^{a_i} exactly divides m_i and l is
/// the x_j exponent exchanged by the move.
struct EdgeFamily {
    MonomialIdeal base;
    Move move;
    int l = 0;
    std::vector<int> a_vals;
    std::vector<Rational> coeffs;
    std::vector<std::pair<Monomial, Monomial>> moving_gens;  // (m'/x_1, m/x_1)
    std::vector<Monomial> fixed_gens;

    friend bool operator==(const EdgeFamily&, const EdgeFamily&) = default;
};

/// (a + l)! / (a - 1)!, the rising product a (a+1) ... (a+l). Needs a >= 1, l >= 0.
Rational family_coefficient(int a, int l);

/// Throws InvalidArgument when the move is not valid for `base`.
EdgeFamily build_edge_family(const MonomialIdeal& base, const Move& mv);

/// Moving generators first (in move order), then the fixed generators.
std::vector<Polynomial> generators_at(const EdgeFamily& family, const Rational& t);

struct FamilyReport {
    std::vector<Rational> samples;
    bool base_ok = false;
    std::vector<bool> fixed_at;           // per sample
    std::vector<std::size_t> colength_at; // per sample
    bool fixed_ok = false;
    bool colength_ok = false;
    bool limit_ok = false;

    bool all_ok() const { return base_ok && fixed_ok && colength_ok && limit_ok; }
    friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

/// Runs the four checks: I_0 = I; I_t is G_a-fixed (exact in a) at every
/// sample; the quotient by I_t has colength(I) at every sample; m_i' and
/// m_i/x_1 lie in J = apply_move(I, move). Samples must be nonzero and
/// pairwise distinct.
FamilyReport verify_family(const EdgeFamily& family, const std::vector<Rational>& t_samples,
                           std::size_t step_cap = kDefaultGroebnerStepCap);

std::vector<Rational> default_t_samples();

}  // namespace agraph
