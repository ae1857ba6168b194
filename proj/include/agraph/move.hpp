#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "agraph/ideal.hpp"

namespace agraph {

/// One exchange of a move: the source generator m is replaced by m/x_1 and the
/// generator m'/x_1 by its multiples m' x_k / x_1.
struct MovePair {
    Monomial source;
    Monomial target;
    friend bool operator==(const MovePair&, const MovePair&) = default;
};

enum class MoveCase { Multiple, Single };

/// How canonical_successor arrived at a move. Variable index j is 1-based
/// (it names x_j). For the single case, the target is (x_1^k / x_j^h) x_1 m_1;
/// for the multiple case, (x_1 / x_j)^l x_1 m_i for the first s elements.
struct MoveDerivation {
    MoveCase kind = MoveCase::Single;
    int top_degree = 0;
    int j = 0;
    int l = 0;
    int s = 0;
    int h = 0;
    int k = 0;
    int d_prime = 0;
    friend bool operator==(const MoveDerivation&, const MoveDerivation&) = default;
};

struct Move {
    std::vector<MovePair> pairs;
    std::optional<MoveDerivation> derivation;

    /// "x1*x3^2 -> x1^4; ..."
    std::string summary() const;
    friend bool operator==(const Move&, const Move&) = default;
};

/// Applies the move: drop m_i and m_i'/x_1, add m_i/x_1 and m_i' x_k/x_1
/// for every k, then minimalize. Throws MoveError when a source is not a
/// minimal generator, m_i'/x_1 is not one, or m_i is not lex-smaller than
/// m_i'.
MonomialIdeal apply_move(const MonomialIdeal& ideal, const Move& mv);

struct MoveCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct MoveReport {
    bool valid = false;
    std::vector<MoveCheck> checks;
    std::optional<MonomialIdeal> result;
};

/// Verdict-carrying validation: move invariants, then Artinian, Borel-fixed
/// and equal colength for the result.
MoveReport is_valid_move(const MonomialIdeal& ideal, const Move& mv);

struct SelectionData {
    int top_degree = 0;             // d*
    int j = 0;                      // 1-based
    int l = 0;
    std::vector<Monomial> s_hat;    // lex-increasing
};

/// Selection data for a non-terminal Borel-fixed Artinian ideal.
///
/// d* is the largest generator degree whose stratum holds something other
/// than x_1^{d*}; j is the largest variable index occurring in that stratum;
/// l is the largest exponent >= 1 such that x_j^l divides two stratum
/// elements, or the largest x_j exponent present when no exponent >= 1 is
/// shared. S_hat collects the stratum elements divisible by x_j^l and x_1.
///
/// Throws TerminalVertex on the terminal ideal and UncoveredCase when S_hat
/// is empty.
SelectionData selection_data(const MonomialIdeal& ideal);

struct Successor {
    Move move;
    MonomialIdeal ideal;
};

/// The canonical move out of a non-terminal vertex. With |S_hat| >= 2 the
/// prefix of S_hat is grown until the result is Borel-fixed; with a single
/// element the exponents (h, k) follow the l >= 2 / l = 1 branches. The
/// result always passes is_valid_move; anything else raises UncoveredCase.
Successor canonical_successor(const MonomialIdeal& ideal);

struct PathStep {
    Move move;
    MonomialIdeal ideal;
    long socle_weight = 0;
    long standard_weight = 0;
};

struct Path {
    MonomialIdeal start;
    long start_socle_weight = 0;
    long start_standard_weight = 0;
    std::vector<PathStep> steps;
    /// Steps where the socle weight did not strictly increase.
    std::size_t socle_weight_nonincreasing = 0;
};

/// Repeated canonical_successor until the terminal ideal. The standard
/// weight must strictly increase at every step (throws Error otherwise).
/// Steps are capped at `step_cap`, or at d * n * max(1, (d-1)(n-1)) when
/// `step_cap` is 0; the cap raises ResourceCap.
Path path_to_terminal(const MonomialIdeal& ideal, std::size_t step_cap = 0);

}  // namespace agraph
