// Brute-force oracle for the Borel enumeration. Deliberately shares no code
// with the closed-set search in borel.cpp: staircases are assembled as
// nested chains of lower-dimensional staircases, and the Borel property is
// decided on generators.

#include <algorithm>
#include <map>

#include "agraph/borel.hpp"
#include "agraph/errors.hpp"

namespace agraph {

namespace {

using Staircase = std::vector<Monomial>;  // sorted, closed under division

bool subset(const Staircase& small, const Staircase& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

class StaircaseTable {
public:
    explicit StaircaseTable(std::size_t max_candidates) : cap_(max_candidates) {}

    /// Every staircase in n variables with exactly `size` cells.
    const std::vector<Staircase>& get(std::size_t n, std::size_t size) {
        auto key = std::make_pair(n, size);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<Staircase> out;
        if (n == 1) {
            Staircase s;
            for (std::size_t e = 0; e < size; ++e) s.push_back(Monomial{static_cast<int>(e)});
            out.push_back(std::move(s));
        } else {
            Staircase acc;
            extend(n, size, nullptr, 0, acc, out);
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    static Monomial lift(const Monomial& m, int last) {
        std::vector<int> e(m.exponents().begin(), m.exponents().end());
        e.push_back(last);
        return Monomial(std::move(e));
    }

    // Slice `level` (the cells with x_n-exponent == level) must be a staircase
    // in n-1 variables contained in the previous slice.
    void extend(std::size_t n, std::size_t remaining, const Staircase* previous, int level,
                Staircase& acc, std::vector<Staircase>& out) {
        if (remaining == 0) {
            Staircase s = acc;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            if (out.size() > cap_) throw ResourceCap("oracle candidate cap exceeded", out.size());
            return;
        }
        std::size_t limit = previous ? std::min(previous->size(), remaining) : remaining;
        for (std::size_t size = 1; size <= limit; ++size) {
            for (const auto& slice : get(n - 1, size)) {
                if (previous && !subset(slice, *previous)) continue;
                const std::size_t before = acc.size();
                for (const auto& m : slice) acc.push_back(lift(m, level));
                extend(n, remaining - size, &slice, level + 1, acc, out);
                acc.resize(before);
            }
        }
    }

    std::size_t cap_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Staircase>> memo_;
};

}  // namespace

std::vector<MonomialIdeal> all_monomial_ideals(std::size_t n, std::size_t d, std::size_t max_candidates) {
    if (n < 1 || d < 1) throw InvalidArgument("all_monomial_ideals needs n >= 1 and d >= 1");
    StaircaseTable table(max_candidates);
    std::vector<MonomialIdeal> out;
    for (const auto& stairs : table.get(n, d)) out.push_back(ideal_from_standard_set(n, stairs));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

VertexSet brute_force_enumerate(std::size_t n, std::size_t d, std::size_t max_candidates) {
    VertexSet result{n, d, {}};
    for (auto& ideal : all_monomial_ideals(n, d, max_candidates)) {
        if (is_borel_fixed(ideal)) result.ideals.push_back(std::move(ideal));
    }
    return result;
}

}  // namespace agraph
