#include "agraph/subgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "agraph/graph.hpp"

namespace agraph {

namespace {

void check_shape(const WeightMatrix& w) {
    if (w.n < 1) throw InvalidArgument("weight matrix needs n >= 1");
    for (const auto& row : w.rows) {
        if (row.size() != w.n) throw InvalidArgument("weight row has wrong length");
    }
}

std::string format(const std::vector<long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

bool is_zero(const std::vector<long>& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

void reject_zero_rows(const WeightMatrix& w) {
    for (const auto& row : w.rows) {
        if (is_zero(row)) {
            throw InfeasibleWeights(InfeasibleWeights::Kind::ZeroRow, row, "ZeroRow: weight " + format(row) + " is trivial");
        }
    }
}

std::vector<long> difference(const std::vector<long>& x, const std::vector<long>& y) {
    std::vector<long> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
    return d;
}

std::vector<std::size_t> duplicates(const WeightMatrix& w) {
    std::vector<std::size_t> dup;
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            if (w.rows[i] == w.rows[k]) {
                dup.push_back(i);
                break;
            }
        }
    }
    return dup;
}

// Differences of all pairs of distinct rows.
std::vector<std::vector<long>> row_differences(const WeightMatrix& w) {
    std::vector<std::vector<long>> out;
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        for (std::size_t k = i + 1; k < w.rows.size(); ++k) {
            if (w.rows[i] != w.rows[k]) out.push_back(difference(w.rows[i], w.rows[k]));
        }
    }
    return out;
}

std::vector<long> base_witness(std::size_t n, const std::vector<std::vector<long>>& constraints) {
    long max_abs = 0;
    for (const auto& v : constraints) {
        for (long x : v) max_abs = std::max(max_abs, std::labs(x));
    }
    const long base = max_abs + 1;
    std::vector<long> a(n, 1);
    for (std::size_t i = n - 1; i-- > 0;) {
        if (a[i + 1] > std::numeric_limits<long>::max() / base) {
            throw InvalidArgument("base witness overflows for this weight matrix");
        }
        a[i] = a[i + 1] * base;
    }
    return a;
}

long sigma(const std::vector<long>& v) {
    long s = 0;
    for (long x : v) s += x;
    return s;
}

long tau(const std::vector<long>& v) {
    long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<long>(j) * v[j];
    return s;
}

}  // namespace

std::vector<long> CompatiblePair::exponents(std::size_t n) const {
    std::vector<long> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = c - static_cast<long>(i) * p;
    return e;
}

long pairing(const std::vector<long>& a, const std::vector<long>& e) {
    if (a.size() != e.size()) throw InvalidArgument("pairing length mismatch");
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * e[i];
    return s;
}

OnePsResult pick_one_ps(const WeightMatrix& w) {
    check_shape(w);
    reject_zero_rows(w);
    OnePsResult out;
    out.a = base_witness(w.n, w.rows);
    for (const auto& row : w.rows) out.pairings.push_back(pairing(out.a, row));
    return out;
}

TwoPsResult pick_two_ps(const WeightMatrix& w) {
    check_shape(w);
    reject_zero_rows(w);
    auto constraints = w.rows;
    for (auto& v : row_differences(w)) constraints.push_back(std::move(v));
    TwoPsResult out;
    out.a = base_witness(w.n, constraints);
    out.b.assign(w.n, 1);
    for (const auto& row : w.rows) out.pairings.emplace_back(pairing(out.a, row), pairing(out.b, row));
    out.duplicate_rows = duplicates(w);
    return out;
}

CompatibleResult pick_compatible_pair(const WeightMatrix& w) {
    check_shape(w);
    auto constraints = w.rows;
    for (auto& v : row_differences(w)) constraints.push_back(std::move(v));
    for (const auto& v : constraints) {
        if (sigma(v) == 0 && tau(v) == 0) {
            throw InfeasibleWeights(InfeasibleWeights::Kind::Incompatible, v,
                                    "Incompatible: both compatible functionals vanish on " + format(v));
        }
    }
    // With p = 1 a constraint v vanishes for at most one c (c = tau/sigma), so
    // scanning |constraints| + 2 values always succeeds.
    const long limit = static_cast<long>(constraints.size()) + 2;
    auto value = [](long c, const std::vector<long>& v) { return c * sigma(v) - tau(v); };

    CompatibleResult out;
    bool found = false;
    for (long c = 0; c <= limit && !found; ++c) {
        found = std::all_of(w.rows.begin(), w.rows.end(), [&](const auto& row) { return value(c, row) != 0; });
        if (found) out.first = {c, 1};
    }
    if (!found) throw InvalidArgument("compatible search exhausted");  // unreachable after the check above
    found = false;
    for (long c = 0; c <= limit + 1 && !found; ++c) {
        if (c == out.first.c) continue;
        found = std::all_of(constraints.begin(), constraints.end(), [&](const auto& v) {
            return value(out.first.c, v) != 0 || value(c, v) != 0;
        });
        if (found) out.second = {c, 1};
    }
    if (!found) throw InvalidArgument("compatible search exhausted");
    out.a = out.first.exponents(w.n);
    out.b = out.second.exponents(w.n);
    for (const auto& row : w.rows) out.pairings.emplace_back(pairing(out.a, row), pairing(out.b, row));
    out.duplicate_rows = duplicates(w);
    return out;
}

SeparationReport verify_separation(const WeightMatrix& w, const std::vector<long>& a,
                                   const std::optional<std::vector<long>>& b) {
    check_shape(w);
    SeparationReport report;
    auto nonzero = [&](const std::vector<long>& v) {
        return pairing(a, v) != 0 || (b && pairing(*b, v) != 0);
    };
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        if (!nonzero(w.rows[i])) report.violated.push_back({"row " + std::to_string(i), w.rows[i]});
    }
    if (b) {
        for (std::size_t i = 0; i < w.rows.size(); ++i) {
            for (std::size_t k = i + 1; k < w.rows.size(); ++k) {
                if (w.rows[i] == w.rows[k]) continue;
                auto v = difference(w.rows[i], w.rows[k]);
                if (!nonzero(v)) {
                    report.violated.push_back({"rows " + std::to_string(i) + "," + std::to_string(k), v});
                }
            }
        }
    }
    report.ok = report.violated.empty();
    return report;
}

AGraph simplex_tgraph(std::size_t n) {
    if (n < 1) throw InvalidArgument("simplex_tgraph needs n >= 1");
    AGraph g;
    g.name = "simplex_n" + std::to_string(n);
    g.n = n;
    g.d = 0;
    g.directed = false;
    for (std::size_t i = 0; i <= n; ++i) g.vertices.push_back({"p" + std::to_string(i), std::nullopt});
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = i + 1; k <= n; ++k) {
            Edge e;
            e.src = i;
            e.dst = k;
            g.edges.push_back(e);
        }
    }
    return g;
}

}  // namespace agraph
