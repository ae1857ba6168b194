#include "agraph/move.hpp"

#include <algorithm>
#include <set>

#include "agraph/borel.hpp"
#include "agraph/errors.hpp"
#include "agraph/json_io.hpp"

namespace agraph {

std::string Move::summary() const {
    std::string out;
    for (const auto& p : pairs) {
        if (!out.empty()) out += "; ";
        out += p.source.to_string() + " -> " + p.target.to_string();
    }
    return out;
}

namespace {

bool is_generator(const MonomialIdeal& ideal, const Monomial& m) {
    const auto& gens = ideal.generators();
    return std::binary_search(gens.begin(), gens.end(), m, std::greater<>());
}

[[noreturn]] void uncovered(const MonomialIdeal& ideal, const std::string& reason) {
    throw UncoveredCase(reason + " at " + ideal.to_string(), json(ideal).dump());
}

// m * x_1^{k+1} / x_j^h, if that is a monomial.
std::optional<Monomial> lift_toward_x1(const Monomial& m, std::size_t j, int k, int h) {
    auto lowered = m.shifted(j, -h);
    if (!lowered) return std::nullopt;
    return lowered->shifted(0, k + 1);
}

}  // namespace

MonomialIdeal apply_move(const MonomialIdeal& ideal, const Move& mv) {
    const std::size_t n = ideal.nvars();
    std::set<Monomial> removed;
    std::vector<Monomial> added;
    for (const auto& [src, dst] : mv.pairs) {
        if (src.nvars() != n || dst.nvars() != n) {
            throw MoveError(MoveErrorCode::VariableMismatch, "pair " + src.to_string() + " -> " + dst.to_string());
        }
        if (lex_compare(src, dst) >= 0) {
            throw MoveError(MoveErrorCode::LexOrderViolation, src.to_string() + " is not lex-smaller than " + dst.to_string());
        }
        if (!is_generator(ideal, src)) {
            throw MoveError(MoveErrorCode::SourceNotGenerator, src.to_string() + " is not a minimal generator");
        }
        auto src_down = src.shifted(0, -1);
        if (!src_down) {
            throw MoveError(MoveErrorCode::SourceNotGenerator, src.to_string() + " is not divisible by x1");
        }
        auto parent = dst.shifted(0, -1);
        if (!parent || !is_generator(ideal, *parent)) {
            throw MoveError(MoveErrorCode::TargetParentNotGenerator,
                            dst.to_string() + "/x1 is not a minimal generator");
        }
        removed.insert(src);
        removed.insert(*parent);
        added.push_back(*src_down);
        for (std::size_t k = 0; k < n; ++k) added.push_back(*parent->shifted(k, 1));
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        if (!removed.contains(g)) gens.push_back(g);
    }
    gens.insert(gens.end(), added.begin(), added.end());
    return minimalize(n, gens);
}

MoveReport is_valid_move(const MonomialIdeal& ideal, const Move& mv) {
    MoveReport report;
    auto check = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };
    MonomialIdeal result(ideal.nvars());
    try {
        result = apply_move(ideal, mv);
        check("move_invariants", true);
    } catch (const MoveError& e) {
        check("move_invariants", false, e.what());
        return report;
    }
    report.result = result;
    const bool base_artinian = is_artinian(ideal);
    if (!check("artinian", base_artinian && is_artinian(result), result.to_string())) return report;
    const bool borel = check("borel_fixed", is_borel_fixed(result));
    const std::size_t before = colength(ideal);
    const std::size_t after = colength(result);
    const bool same = check("colength_preserved", before == after,
                            std::to_string(before) + " -> " + std::to_string(after));
    report.valid = borel && same;
    return report;
}

SelectionData selection_data(const MonomialIdeal& ideal) {
    if (!is_artinian(ideal) || ideal.is_zero()) throw NotArtinian("selection_data needs an Artinian ideal");
    const std::size_t n = ideal.nvars();
    if (ideal == terminal_ideal(n, colength(ideal))) {
        throw TerminalVertex("terminal ideal " + ideal.to_string() + " has no successor");
    }
    SelectionData sel;
    std::vector<Monomial> stratum;
    for (int deg = ideal.max_generator_degree(); deg >= 1 && stratum.empty(); --deg) {
        std::vector<Monomial> candidate;
        bool non_pure = false;
        for (const auto& g : ideal.generators()) {
            if (g.degree() != deg) continue;
            candidate.push_back(g);
            if (g[0] != deg) non_pure = true;
        }
        if (non_pure) {
            stratum = std::move(candidate);
            sel.top_degree = deg;
        }
    }
    if (stratum.empty()) uncovered(ideal, "no generator stratum besides pure x1 powers");

    std::size_t j = 0;
    int max_power = 0;
    for (const auto& m : stratum) {
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] > 0) j = std::max(j, i);
        }
    }
    for (const auto& m : stratum) max_power = std::max(max_power, m[j]);
    sel.j = static_cast<int>(j) + 1;
    sel.l = max_power;  // the value used when no exponent >= 1 is shared
    for (int power = max_power; power >= 1; --power) {
        auto shared = std::count_if(stratum.begin(), stratum.end(), [&](const Monomial& m) { return m[j] >= power; });
        if (shared >= 2) {
            sel.l = power;
            break;
        }
    }
    for (const auto& m : stratum) {
        if (m[j] >= sel.l && m[0] >= 1) sel.s_hat.push_back(m);
    }
    std::sort(sel.s_hat.begin(), sel.s_hat.end());
    if (sel.s_hat.empty()) uncovered(ideal, "S_hat is empty");
    return sel;
}

Successor canonical_successor(const MonomialIdeal& ideal) {
    const SelectionData sel = selection_data(ideal);
    const std::size_t j = static_cast<std::size_t>(sel.j - 1);
    const int l = sel.l;
    const std::size_t r = sel.s_hat.size();

    MoveDerivation der;
    der.top_degree = sel.top_degree;
    der.j = sel.j;
    der.l = l;

    if (r >= 2) {
        der.kind = MoveCase::Multiple;
        std::size_t s = 1;
        Monomial pivot = sel.s_hat.front();
        for (std::size_t round = 0; round <= r; ++round) {
            Move mv;
            for (std::size_t i = 0; i < s; ++i) {
                auto target = lift_toward_x1(sel.s_hat[i], j, l, l);
                if (!target) uncovered(ideal, "multiple case target is not a monomial");
                mv.pairs.push_back({sel.s_hat[i], *target});
            }
            der.s = static_cast<int>(s);
            der.h = der.k = l;
            mv.derivation = der;
            MoveReport report = is_valid_move(ideal, mv);
            if (report.valid) return {std::move(mv), std::move(*report.result)};
            if (!report.result || !is_artinian(*report.result) || colength(*report.result) != colength(ideal)) {
                uncovered(ideal, "multiple case prefix s=" + std::to_string(s) + " gives an invalid move");
            }
            // Not Borel-fixed: extend the prefix to (x_1/x_i) * pivot for the
            // largest 1 < i < j with (x_1/x_i)(x_1/x_j)^l * pivot in the ideal.
            std::optional<Monomial> next;
            for (std::size_t i = j; i-- > 1;) {
                if (pivot[i] == 0) continue;
                Monomial cand = *pivot.shifted(i, -1)->shifted(0, 1);
                auto probe = cand.shifted(j, -l);
                if (probe && contains(ideal, *probe->shifted(0, l))) {
                    next = cand;
                    break;
                }
            }
            if (!next) uncovered(ideal, "multiple case: no offending index below j for pivot " + pivot.to_string());
            auto it = std::find(sel.s_hat.begin(), sel.s_hat.end(), *next);
            if (it == sel.s_hat.end()) uncovered(ideal, "multiple case: " + next->to_string() + " not in S_hat");
            const std::size_t idx = static_cast<std::size_t>(it - sel.s_hat.begin());
            if (idx + 1 <= s) uncovered(ideal, "multiple case: prefix does not grow");
            s = idx + 1;
            pivot = *next;
        }
        uncovered(ideal, "multiple case prefix growth exhausted S_hat");
    }

    der.kind = MoveCase::Single;
    der.s = 1;
    const Monomial& m1 = sel.s_hat.front();
    if (l >= 2) {
        auto probe = m1.shifted(j, -l);
        const bool full = probe && contains(ideal, *probe->shifted(0, l));
        der.h = der.k = full ? l : l - 1;
    } else if (l == 1) {
        int d_prime = 0;
        for (const auto& g : ideal.generators()) {
            if (g.degree() == g[0]) d_prime = g[0];
        }
        der.d_prime = d_prime;
        der.k = d_prime - sel.top_degree + 1;
        der.h = 1;
    } else {
        uncovered(ideal, "single case with l = 0");
    }
    auto target = lift_toward_x1(m1, j, der.k, der.h);
    if (!target) uncovered(ideal, "single case target is not a monomial");
    Move mv{{{m1, *target}}, der};
    MoveReport report = is_valid_move(ideal, mv);
    if (!report.valid) {
        std::string failed;
        for (const auto& c : report.checks) {
            if (!c.passed) failed += " " + c.name + (c.detail.empty() ? "" : "(" + c.detail + ")");
        }
        uncovered(ideal, "single case move " + mv.summary() + " fails:" + failed);
    }
    return {std::move(mv), std::move(*report.result)};
}

Path path_to_terminal(const MonomialIdeal& ideal, std::size_t step_cap) {
    if (!is_artinian(ideal) || ideal.is_zero()) throw InvalidArgument("is_artinian=false");
    if (!is_borel_fixed(ideal)) throw InvalidArgument("is_borel_fixed=false");
    const std::size_t n = ideal.nvars();
    const std::size_t d = colength(ideal);
    if (step_cap == 0) step_cap = d * n * std::max<std::size_t>(1, (d - 1) * (n - 1));
    const MonomialIdeal terminal = terminal_ideal(n, d);

    Path path{ideal, ideal_weight(ideal), standard_weight(ideal), {}, 0};
    MonomialIdeal current = ideal;
    long socle_w = path.start_socle_weight;
    long std_w = path.start_standard_weight;
    while (current != terminal) {
        if (path.steps.size() >= step_cap) {
            throw ResourceCap("path from " + ideal.to_string() + " exceeded " + std::to_string(step_cap) + " steps",
                              path.steps.size());
        }
        Successor next = canonical_successor(current);
        PathStep step{std::move(next.move), std::move(next.ideal), 0, 0};
        step.socle_weight = ideal_weight(step.ideal);
        step.standard_weight = standard_weight(step.ideal);
        if (step.standard_weight <= std_w) {
            throw Error("standard weight did not increase from " + current.to_string() + " to " +
                        step.ideal.to_string());
        }
        if (step.socle_weight <= socle_w) ++path.socle_weight_nonincreasing;
        socle_w = step.socle_weight;
        std_w = step.standard_weight;
        current = step.ideal;
        path.steps.push_back(std::move(step));
    }
    return path;
}

}  // namespace agraph
