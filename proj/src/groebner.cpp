#include "agraph/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "agraph/errors.hpp"

namespace agraph {

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order) {
    if (order == TermOrder::Lex) return lex_compare(a, b);
    if (a.nvars() != b.nvars()) throw InvalidArgument("monomial length mismatch");
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Same degree: the last differing variable decides, smaller exponent wins.
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

namespace {

Polynomial::Terms::const_iterator leading_term(const Polynomial& p, TermOrder order) {
    if (p.is_zero()) throw InvalidArgument("leading term of the zero polynomial");
    auto best = p.terms().begin();
    if (order == TermOrder::Lex) return best;  // terms are stored lex-descending
    for (auto it = std::next(best); it != p.terms().end(); ++it) {
        if (compare(it->first, best->first, order) > 0) best = it;
    }
    return best;
}

Polynomial monic(Polynomial p, TermOrder order) {
    if (p.is_zero()) return p;
    Rational inv = 1 / leading_term(p, order)->second;
    return p *= inv;
}

// Reduces p against `divisors` until no term is divisible by a leading
// monomial.
Polynomial reduce(Polynomial f, std::span<const Polynomial> divisors, TermOrder order) {
    std::vector<Monomial> lead;
    std::vector<Rational> lead_c;
    for (const auto& g : divisors) {
        auto t = leading_term(g, order);
        lead.push_back(t->first);
        lead_c.push_back(t->second);
    }
    Polynomial rem(f.nvars());
    while (!f.is_zero()) {
        auto t = leading_term(f, order);
        const Monomial m = t->first;
        const Rational c = t->second;
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (auto q = m.divide(lead[i])) {
                f -= divisors[i].mul_term(*q, c / lead_c[i]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(m, c);
            f.add_term(m, -c);
        }
    }
    return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder order) {
    auto tf = leading_term(f, order);
    auto tg = leading_term(g, order);
    const Monomial l = tf->first.lcm(tg->first);
    return f.mul_term(*l.divide(tf->first), 1 / tf->second) -
           g.mul_term(*l.divide(tg->first), 1 / tg->second);
}

}  // namespace

const Monomial& leading_monomial(const Polynomial& p, TermOrder order) { return leading_term(p, order)->first; }

const Rational& leading_coefficient(const Polynomial& p, TermOrder order) {
    return leading_term(p, order)->second;
}

MonomialIdeal GroebnerBasis::initial_ideal() const {
    std::vector<Monomial> lead;
    for (const auto& g : basis) lead.push_back(leading_monomial(g, order));
    return minimalize(n, lead);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, TermOrder order, std::size_t step_cap) {
    GroebnerBasis out;
    out.order = order;
    if (!gens.empty()) out.n = gens.front().nvars();
    std::vector<Polynomial> g;
    for (const auto& p : gens) {
        if (p.nvars() != out.n) throw InvalidArgument("generators have different variable counts");
        if (!p.is_zero()) g.push_back(monic(p, order));
    }
    if (g.empty()) return out;

    auto lm = [&](std::size_t i) -> const Monomial& { return leading_monomial(g[i], order); };
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 1; j < g.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
    }

    std::size_t steps = 0;
    while (!pending.empty()) {
        // Normal selection: the pair with the smallest lcm; ties go to the
        // smallest index pair (set iteration order).
        auto pick = pending.begin();
        Monomial best = lm(pick->first).lcm(lm(pick->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lm(it->first).lcm(lm(it->second));
            if (compare(l, best, order) < 0) {
                best = std::move(l);
                pick = it;
            }
        }
        const auto [i, j] = *pick;
        pending.erase(pick);

        if (lm(i).coprime(lm(j))) continue;
        // Chain criterion: some k with LM(k) | lcm whose pairs with i and j
        // are already settled makes (i, j) redundant.
        bool redundant = false;
        for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i || k == j || !divides(lm(k), best)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            redundant = !pending.contains(key(i, k)) && !pending.contains(key(j, k));
        }
        if (redundant) continue;

        if (++steps > step_cap) {
            throw ResourceCap("Groebner step cap " + std::to_string(step_cap) + " exceeded", steps - 1);
        }
        Polynomial h = reduce(s_polynomial(g[i], g[j], order), g, order);
        if (h.is_zero()) continue;
        g.push_back(monic(std::move(h), order));
        const std::size_t k = g.size() - 1;
        for (std::size_t a = 0; a < k; ++a) pending.emplace(a, k);
    }

    // Minimalize leading terms, then inter-reduce.
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < g.size() && !drop; ++b) {
            if (a == b || !divides(lm(b), lm(a))) continue;
            drop = lm(b) != lm(a) || b < a;
        }
        if (!drop) minimal.push_back(g[a]);
    }
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial> others;
        for (std::size_t b = 0; b < minimal.size(); ++b) {
            if (b != a) others.push_back(minimal[b]);
        }
        auto lead = leading_term(minimal[a], order);
        Polynomial head(lead->first, lead->second);
        Polynomial tail = minimal[a] - head;
        minimal[a] = monic(head + reduce(std::move(tail), others, order), order);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& x, const Polynomial& y) {
        return compare(leading_monomial(x, order), leading_monomial(y, order), order) > 0;
    });
    out.basis = std::move(minimal);
    return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
    if (!g.basis.empty() && p.nvars() != g.n) throw InvalidArgument("variable count mismatch in normal_form");
    return reduce(p, g.basis, g.order);
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& g) { return normal_form(p, g).is_zero(); }

std::size_t poly_colength(const GroebnerBasis& g) { return colength(g.initial_ideal()); }

bool is_ga_fixed_poly_ideal(std::span<const Polynomial> gens, std::size_t step_cap) {
    const GroebnerBasis gb = buchberger(gens, TermOrder::DegRevLex, step_cap);
    for (const auto& p : gens) {
        const auto coeffs = ga_coefficients(p);
        for (std::size_t k = 1; k < coeffs.size(); ++k) {
            if (!ideal_member(coeffs[k], gb)) return false;
        }
    }
    return true;
}

}  // namespace agraph
