#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's own algorithms (no BFS over standard
// monomials, no generator-only shortcuts) so they can catch shared mistakes.

#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "agraph/ideal.hpp"
#include "agraph/polynomial.hpp"

namespace agraph::testing {

inline MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<int>> gens) {
    std::vector<Monomial> ms;
    for (auto g : gens) ms.emplace_back(std::vector<int>(g));
    return minimalize(n, ms);
}

inline Monomial mono(std::initializer_list<int> e) { return Monomial(std::vector<int>(e)); }

/// All degree-3 monomials in 3 variables.
inline MonomialIdeal example_I() {
    return ideal(3, {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                     {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}});
}

/// Result of the move x1*x3^2 -> x1^4 on example_I(), as printed.
inline MonomialIdeal example_J() {
    return ideal(3, {{4, 0, 0}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 1, 1}, {0, 3, 0}, {0, 2, 1}, {0, 0, 2}});
}

/// Every exponent vector with total degree <= max_degree, in no particular order.
inline std::vector<Monomial> monomials_up_to(std::size_t n, int max_degree) {
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            out.emplace_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, max_degree);
    return out;
}

/// Membership straight from the definition: some generator divides m.
inline bool member_naive(const MonomialIdeal& ideal, const Monomial& m) {
    for (const auto& g : ideal.generators()) {
        bool divides = true;
        for (std::size_t i = 0; i < m.nvars(); ++i) divides = divides && g[i] <= m[i];
        if (divides) return true;
    }
    return false;
}

/// Standard monomials by scanning a degree box. Valid for Artinian ideals
/// whose standard monomials have degree below n * max generator degree.
inline std::vector<Monomial> standard_naive(const MonomialIdeal& ideal) {
    const int bound = static_cast<int>(ideal.nvars()) * ideal.max_generator_degree();
    std::vector<Monomial> out;
    for (const auto& m : monomials_up_to(ideal.nvars(), bound)) {
        if (!member_naive(ideal, m)) out.push_back(m);
    }
    return out;
}

/// Borel check over every member up to degree maxdeg + 2, not just generators.
inline bool borel_naive(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.nvars();
    for (const auto& m : monomials_up_to(n, ideal.max_generator_degree() + 2)) {
        if (!member_naive(ideal, m)) continue;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (m[i] == 0) continue;
            std::vector<int> e(m.exponents().begin(), m.exponents().end());
            --e[i];
            ++e[i + 1];
            if (!member_naive(ideal, Monomial(e))) return false;
        }
    }
    return true;
}

/// Partitions of d into distinct parts, by explicit recursion over the
/// largest part.
inline std::size_t distinct_partitions(int d, int max_part) {
    if (d == 0) return 1;
    std::size_t total = 0;
    for (int part = std::min(d, max_part); part >= 1; --part) total += distinct_partitions(d - part, part - 1);
    return total;
}

inline Rational random_rational(std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Rational random_nonzero_rational(std::mt19937& rng, int span = 5) {
    Rational q = 0;
    while (q == 0) q = random_rational(rng, span);
    return q;
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t n, int max_degree, int terms) {
    Polynomial p(n);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(n, 0);
        const int k = deg(rng);
        for (int i = 0; i < k; ++i) ++e[var(rng)];
        p.add_term(Monomial(e), random_nonzero_rational(rng));
    }
    return p;
}

}  // namespace agraph::testing
