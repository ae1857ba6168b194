#include "agraph/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "agraph/errors.hpp"

namespace agraph {

MonomialIdeal::MonomialIdeal(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgument("ideal needs at least one variable");
}

int MonomialIdeal::max_generator_degree() const noexcept {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "<0>";
    std::string out = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ">";
}

std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.gens_.begin(), a.gens_.end(), b.gens_.begin(),
                                                  b.gens_.end());
}

MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> gens) {
    MonomialIdeal out(n);
    std::vector<Monomial> sorted(gens.begin(), gens.end());
    for (const auto& g : sorted) {
        if (g.nvars() != n) throw InvalidArgument("generator " + g.to_string() + " has wrong length");
    }
    // By ascending degree: a divisor always precedes its proper multiples.
    std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a > b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& g : sorted) {
        bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                     [&](const Monomial& h) { return divides(h, g); });
        if (!redundant) out.gens_.push_back(g);
    }
    std::sort(out.gens_.begin(), out.gens_.end(), std::greater<>());
    return out;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    const auto& gens = ideal.generators();
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool is_artinian(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.nvars();
    std::vector<bool> has_power(n, false);
    for (const auto& g : ideal.generators()) {
        std::size_t support = 0, idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] > 0) {
                ++support;
                idx = i;
            }
        }
        if (support == 0) return true;  // unit ideal
        if (support == 1) has_power[idx] = true;
    }
    return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

static void require_artinian(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw NotArtinian("zero ideal has infinite colength");
    if (!is_artinian(ideal)) throw NotArtinian("ideal " + ideal.to_string() + " is not Artinian");
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal) {
    require_artinian(ideal);
    const std::size_t n = ideal.nvars();
    std::vector<Monomial> out;
    const Monomial unit = Monomial::one(n);
    if (contains(ideal, unit)) return out;
    std::unordered_set<Monomial, MonomialHash> seen{unit};
    std::deque<Monomial> queue{unit};
    while (!queue.empty()) {
        Monomial m = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            Monomial next = *m.shifted(i, 1);
            if (seen.contains(next) || contains(ideal, next)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::size_t colength(const MonomialIdeal& ideal) { return standard_monomials(ideal).size(); }

std::vector<Monomial> socle(const MonomialIdeal& ideal) {
    std::vector<Monomial> out;
    for (const auto& m : standard_monomials(ideal)) {
        bool top = true;
        for (std::size_t i = 0; i < ideal.nvars() && top; ++i) top = contains(ideal, *m.shifted(i, 1));
        if (top) out.push_back(m);
    }
    return out;
}

long ideal_weight(const MonomialIdeal& ideal) {
    long w = 0;
    for (const auto& m : socle(ideal)) w += monomial_weight(m);
    return w;
}

long standard_weight(const MonomialIdeal& ideal) {
    long w = 0;
    for (const auto& m : standard_monomials(ideal)) w += monomial_weight(m);
    return w;
}

MonomialIdeal ideal_from_standard_set(std::size_t n, std::span<const Monomial> standard) {
    std::unordered_set<Monomial, MonomialHash> inside(standard.begin(), standard.end());
    if (standard.empty()) {
        const Monomial unit = Monomial::one(n);
        return minimalize(n, std::span<const Monomial>(&unit, 1));
    }
    std::vector<Monomial> gens;
    for (const auto& s : standard) {
        for (std::size_t i = 0; i < n; ++i) {
            Monomial m = *s.shifted(i, 1);
            if (inside.contains(m)) continue;
            // m is a minimal generator iff all of its divisors m/x_k are standard.
            bool minimal = true;
            for (std::size_t k = 0; k < n && minimal; ++k) {
                if (auto q = m.shifted(k, -1)) minimal = inside.contains(*q);
            }
            if (minimal) gens.push_back(std::move(m));
        }
    }
    return minimalize(n, gens);
}

}  // namespace agraph
