#include "agraph/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "agraph/errors.hpp"

namespace agraph {

const char* to_string(MoveErrorCode code) {
    switch (code) {
        case MoveErrorCode::SourceNotGenerator: return "SourceNotGenerator";
        case MoveErrorCode::TargetParentNotGenerator: return "TargetParentNotGenerator";
        case MoveErrorCode::LexOrderViolation: return "LexOrderViolation";
        case MoveErrorCode::VariableMismatch: return "VariableMismatch";
    }
    return "unknown";
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
        if (e < 0) throw InvalidArgument("negative exponent in monomial");
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::vector<int>(exponents)) {}

Monomial Monomial::one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::var(std::size_t n, std::size_t index, int power) {
    if (index >= n) throw InvalidArgument("variable index out of range");
    std::vector<int> e(n, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

static void require_same_length(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) {
        throw InvalidArgument("monomial length mismatch: " + std::to_string(a.nvars()) +
                              " vs " + std::to_string(b.nvars()));
    }
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_length(*this, other);
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    r.degree_ += other.degree_;
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
    require_same_length(*this, divisor);
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] -= divisor.exps_[i];
        if (r.exps_[i] < 0) return std::nullopt;
    }
    r.degree_ -= divisor.degree_;
    return r;
}

std::optional<Monomial> Monomial::shifted(std::size_t index, int delta) const {
    if (index >= exps_.size()) throw InvalidArgument("variable index out of range");
    if (exps_[index] + delta < 0) return std::nullopt;
    Monomial r = *this;
    r.exps_[index] += delta;
    r.degree_ += delta;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    require_same_length(*this, other);
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
    require_same_length(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    }
    return true;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    return a <=> b;
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

long monomial_weight(const Monomial& m) {
    const long n = static_cast<long>(m.nvars());
    long w = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) w += static_cast<long>(m[i]) * (n - 1 - static_cast<long>(i));
    return w;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace agraph
