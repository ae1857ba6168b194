#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "agraph/errors.hpp"

namespace agraph {

struct AGraph;

/// Torus weights e_i = (e_{i1}, ..., e_{in}), one row per weight.
struct WeightMatrix {
    std::size_t n = 1;
    std::vector<std::vector<long>> rows;
    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

/// No subgroup of the requested form can satisfy the constraints. `vector`
/// is the offending constraint (a zero row, or a row/difference on which
/// both compatible functionals vanish).
class InfeasibleWeights : public InvalidArgument {
public:
    enum class Kind { ZeroRow, Incompatible };
    InfeasibleWeights(Kind kind, std::vector<long> vector, const std::string& what)
        : InvalidArgument(what), kind_(kind), vector_(std::move(vector)) {}
    Kind kind() const noexcept { return kind_; }
    const std::vector<long>& vector() const noexcept { return vector_; }

private:
    Kind kind_;
    std::vector<long> vector_;
};

/// 1-PS of the compatible form diag(t^c, t^{c-p}, ..., t^{c-(n-1)p}).
struct CompatiblePair {
    long c = 0;
    long p = 1;
    std::vector<long> exponents(std::size_t n) const;
    friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
};

long pairing(const std::vector<long>& a, const std::vector<long>& e);

struct OnePsResult {
    std::vector<long> a;
    std::vector<long> pairings;  // <a, e_i> per row
};

struct TwoPsResult {
    std::vector<long> a;
    std::vector<long> b;
    std::vector<std::pair<long, long>> pairings;  // per row
    std::vector<std::size_t> duplicate_rows;      // rows equal to an earlier row
};

struct CompatibleResult {
    CompatiblePair first;
    CompatiblePair second;
    std::vector<long> a;  // first.exponents(n)
    std::vector<long> b;  // second.exponents(n)
    std::vector<std::pair<long, long>> pairings;
    std::vector<std::size_t> duplicate_rows;
};

/// a = (M^{n-1}, ..., M, 1) with M = 1 + max |entry|: a nonzero integer
/// vector with entries below M in absolute value cannot pair to zero with it.
/// Throws InfeasibleWeights(ZeroRow).
OnePsResult pick_one_ps(const WeightMatrix& w);

/// a is the base-M witness over the rows and all differences of distinct
/// rows, b = (1, ..., 1). Duplicate rows are skipped in the separation
/// conditions and reported.
TwoPsResult pick_two_ps(const WeightMatrix& w);

/// Two compatible factors. The first is nonzero on every row; the second is
/// chosen so that every row and every difference of distinct rows has a
/// nonzero pairing with at least one factor. Both use p = 1 and scan
/// c = 0, 1, 2, ... Throws InfeasibleWeights(Incompatible) naming a vector
/// v with sum_j v_j = sum_j (j-1) v_j = 0.
CompatibleResult pick_compatible_pair(const WeightMatrix& w);

struct Violation {
    std::string what;  // "row 3" or "rows 1,4"
    std::vector<long> vector;
};

struct SeparationReport {
    bool ok = true;
    std::vector<Violation> violated;
};

/// Independent recheck. Without b: <a, e_i> != 0 for every row. With b:
/// (<a,v>, <b,v>) != (0,0) for every row and every difference of two
/// distinct rows.
SeparationReport verify_separation(const WeightMatrix& w, const std::vector<long>& a,
                                   const std::optional<std::vector<long>>& b = std::nullopt);

/// Complete graph on the n+1 coordinate points p_0 .. p_n of P^n.
AGraph simplex_tgraph(std::size_t n);

}  // namespace agraph
