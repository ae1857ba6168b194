#include "agraph/borel.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>

#include <omp.h>

#include "agraph/errors.hpp"

namespace agraph {

bool is_borel_fixed(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.nvars();
    for (const auto& m : ideal.generators()) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (m[i] == 0) continue;
            Monomial exchanged = *m.shifted(i, -1)->shifted(i + 1, 1);
            if (!contains(ideal, exchanged)) return false;
        }
    }
    return true;
}

MonomialIdeal terminal_ideal(std::size_t n, std::size_t d) {
    if (n < 1 || d < 1) throw InvalidArgument("terminal_ideal needs n >= 1 and d >= 1");
    std::vector<Monomial> gens{Monomial::var(n, 0, static_cast<int>(d))};
    for (std::size_t i = 1; i < n; ++i) gens.push_back(Monomial::var(n, i));
    return minimalize(n, gens);
}

namespace {

// Candidate standard monomials (degree <= d-1) in the linear order
// (degree ascending, lex descending). Every monomial's predecessors, its
// divisors m/x_i and its exchanges x_i m / x_{i+1}, come strictly earlier,
// so each closed set is produced exactly once by adding its members in
// increasing candidate order.
struct CandidatePoset {
    std::vector<Monomial> monos;
    std::vector<std::vector<std::size_t>> preds;

    CandidatePoset(std::size_t n, std::size_t d) {
        // Grow degree by degree from the unit.
        std::vector<Monomial> layer{Monomial::one(n)};
        for (std::size_t deg = 0; deg < d; ++deg) {
            std::sort(layer.begin(), layer.end(), std::greater<>());
            layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
            monos.insert(monos.end(), layer.begin(), layer.end());
            std::vector<Monomial> next;
            for (const auto& m : layer) {
                for (std::size_t i = 0; i < n; ++i) next.push_back(*m.shifted(i, 1));
            }
            layer = std::move(next);
        }
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
        for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
        preds.resize(monos.size());
        for (std::size_t k = 0; k < monos.size(); ++k) {
            const Monomial& m = monos[k];
            for (std::size_t i = 0; i < n; ++i) {
                if (auto q = m.shifted(i, -1)) preds[k].push_back(index.at(*q));
                if (i + 1 < n && m[i + 1] > 0) {
                    preds[k].push_back(index.at(*m.shifted(i + 1, -1)->shifted(i, 1)));
                }
            }
        }
    }
};

struct SearchState {
    std::vector<char> member;
    std::vector<std::size_t> chosen;  // increasing candidate indices
};

class Enumerator {
public:
    Enumerator(const CandidatePoset& poset, std::size_t n, std::size_t d, std::size_t cap,
               std::atomic<std::size_t>& found, std::atomic<bool>& overflow)
        : poset_(poset), n_(n), d_(d), cap_(cap), found_(found), overflow_(overflow) {}

    void run(SearchState& st, std::vector<MonomialIdeal>& out) {
        if (overflow_.load(std::memory_order_relaxed)) return;
        if (st.chosen.size() == d_) {
            emit(st, out);
            return;
        }
        const int max_deg = poset_.monos[st.chosen.back()].degree();
        for (std::size_t k = st.chosen.back() + 1; k < poset_.monos.size(); ++k) {
            if (poset_.monos[k].degree() > max_deg + 1) break;
            if (!addable(st, k)) continue;
            st.member[k] = 1;
            st.chosen.push_back(k);
            run(st, out);
            st.chosen.pop_back();
            st.member[k] = 0;
        }
    }

    /// All partial states of size `depth` (or complete ones if d < depth).
    void prefixes(SearchState& st, std::size_t depth, std::vector<SearchState>& out) {
        if (st.chosen.size() == depth || st.chosen.size() == d_) {
            out.push_back(st);
            return;
        }
        const int max_deg = poset_.monos[st.chosen.back()].degree();
        for (std::size_t k = st.chosen.back() + 1; k < poset_.monos.size(); ++k) {
            if (poset_.monos[k].degree() > max_deg + 1) break;
            if (!addable(st, k)) continue;
            st.member[k] = 1;
            st.chosen.push_back(k);
            prefixes(st, depth, out);
            st.chosen.pop_back();
            st.member[k] = 0;
        }
    }

private:
    bool addable(const SearchState& st, std::size_t k) const {
        for (std::size_t p : poset_.preds[k]) {
            if (!st.member[p]) return false;
        }
        return true;
    }

    void emit(const SearchState& st, std::vector<MonomialIdeal>& out) {
        if (found_.fetch_add(1, std::memory_order_relaxed) >= cap_) {
            overflow_.store(true, std::memory_order_relaxed);
            return;
        }
        std::vector<Monomial> standard;
        standard.reserve(st.chosen.size());
        for (std::size_t k : st.chosen) standard.push_back(poset_.monos[k]);
        out.push_back(ideal_from_standard_set(n_, standard));
    }

    const CandidatePoset& poset_;
    std::size_t n_, d_, cap_;
    std::atomic<std::size_t>& found_;
    std::atomic<bool>& overflow_;
};

}  // namespace

VertexSet enumerate_borel_fixed(std::size_t n, std::size_t d, ExecPolicy policy, std::size_t vertex_cap) {
    if (n < 1 || d < 1) throw InvalidArgument("enumerate_borel_fixed needs n >= 1 and d >= 1");
    const CandidatePoset poset(n, d);
    std::atomic<std::size_t> found{0};
    std::atomic<bool> overflow{false};
    Enumerator enumerator(poset, n, d, vertex_cap, found, overflow);

    SearchState root;
    root.member.assign(poset.monos.size(), 0);
    root.member[0] = 1;
    root.chosen.push_back(0);

    VertexSet result{n, d, {}};
    if (policy == ExecPolicy::Serial) {
        enumerator.run(root, result.ideals);
    } else {
        std::vector<SearchState> work;
        enumerator.prefixes(root, std::min<std::size_t>(d, 4), work);
        std::vector<std::vector<MonomialIdeal>> per_task(work.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t t = 0; t < work.size(); ++t) {
            Enumerator local(poset, n, d, vertex_cap, found, overflow);
            local.run(work[t], per_task[t]);
        }
        for (auto& part : per_task) {
            std::move(part.begin(), part.end(), std::back_inserter(result.ideals));
        }
    }
    if (overflow.load()) {
        throw ResourceCap("vertex cap " + std::to_string(vertex_cap) + " exceeded for n=" +
                              std::to_string(n) + ", d=" + std::to_string(d),
                          std::min(found.load(), vertex_cap));
    }
    std::sort(result.ideals.begin(), result.ideals.end(), std::greater<>());
    return result;
}

}  // namespace agraph
