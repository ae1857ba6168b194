#include "agraph/edge_family.hpp"

#include <algorithm>
#include <set>

#include "agraph/errors.hpp"

namespace agraph {

Rational family_coefficient(int a, int l) {
    if (a < 1 || l < 0) throw InvalidArgument("family coefficient needs a >= 1 and l >= 0");
    mpz_class c = 1;
    for (int f = a; f <= a + l; ++f) c *= f;
    return Rational(c);
}

EdgeFamily build_edge_family(const MonomialIdeal& base, const Move& mv) {
    const MoveReport report = is_valid_move(base, mv);
    if (!report.valid) {
        std::string failed;
        for (const auto& c : report.checks) {
            if (!c.passed) failed += " " + c.name;
        }
        throw InvalidArgument("move " + mv.summary() + " is not valid for " + base.to_string() + ":" + failed);
    }
    EdgeFamily fam;
    fam.base = base;
    fam.move = mv;
    // x_j exponent given up by the first pair (identical for every pair of a
    // canonical move).
    const auto& first = mv.pairs.front();
    for (std::size_t i = 1; i < base.nvars(); ++i) fam.l += std::max(0, first.source[i] - first.target[i]);

    std::set<Monomial> parents;
    for (const auto& [src, dst] : mv.pairs) {
        const int a = src[0];
        fam.a_vals.push_back(a);
        fam.coeffs.push_back(family_coefficient(a, fam.l));
        Monomial parent = *dst.shifted(0, -1);
        fam.moving_gens.emplace_back(parent, *src.shifted(0, -1));
        parents.insert(parent);
    }
    for (const auto& g : base.generators()) {
        if (!parents.contains(g)) fam.fixed_gens.push_back(g);
    }
    return fam;
}

std::vector<Polynomial> generators_at(const EdgeFamily& family, const Rational& t) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < family.moving_gens.size(); ++i) {
        const auto& [lead, tail] = family.moving_gens[i];
        Polynomial g(lead);
        g.add_term(tail, family.coeffs[i] * t);
        out.push_back(std::move(g));
    }
    for (const auto& m : family.fixed_gens) out.emplace_back(m);
    return out;
}

std::vector<Rational> default_t_samples() { return {1, 2, 3, 5, 7}; }

FamilyReport verify_family(const EdgeFamily& family, const std::vector<Rational>& t_samples,
                           std::size_t step_cap) {
    for (std::size_t a = 0; a < t_samples.size(); ++a) {
        if (t_samples[a] == 0) throw InvalidArgument("t samples must be nonzero");
        for (std::size_t b = 0; b < a; ++b) {
            if (t_samples[a] == t_samples[b]) throw InvalidArgument("t samples must be distinct");
        }
    }
    const std::size_t n = family.base.nvars();
    FamilyReport report;
    report.samples = t_samples;

    std::vector<Monomial> at_zero;
    bool monomial = true;
    for (const auto& p : generators_at(family, 0)) {
        if (p.size() != 1 || p.terms().begin()->second != 1) {
            monomial = false;
            break;
        }
        at_zero.push_back(p.terms().begin()->first);
    }
    report.base_ok = monomial && minimalize(n, at_zero) == family.base;

    const std::size_t expected = colength(family.base);
    report.fixed_ok = report.colength_ok = true;
    for (const auto& t : t_samples) {
        const auto gens = generators_at(family, t);
        const bool fixed = is_ga_fixed_poly_ideal(gens, step_cap);
        std::size_t len = 0;
        try {
            len = poly_colength(buchberger(gens, TermOrder::DegRevLex, step_cap));
        } catch (const NotArtinian&) {
            len = 0;  // infinite colength never matches
        }
        report.fixed_at.push_back(fixed);
        report.colength_at.push_back(len);
        report.fixed_ok = report.fixed_ok && fixed;
        report.colength_ok = report.colength_ok && len == expected;
    }

    const MonomialIdeal target = apply_move(family.base, family.move);
    report.limit_ok = true;
    for (const auto& [src, dst] : family.move.pairs) {
        report.limit_ok = report.limit_ok && contains(target, dst) && contains(target, *src.shifted(0, -1));
    }
    return report;
}

}  // namespace agraph
