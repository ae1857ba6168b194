#include "agraph/polynomial.hpp"

#include <algorithm>

#include "agraph/errors.hpp"

namespace agraph {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidArgument("empty rational");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool slash = false, digits = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            digits = true;
        } else if (ch == '/' && !slash && digits && i + 1 < text.size()) {
            slash = true;
        } else {
            throw InvalidArgument("malformed rational '" + text + "'");
        }
    }
    if (!digits) throw InvalidArgument("malformed rational '" + text + "'");
    Rational q;
    if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
        throw InvalidArgument("malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Polynomial::Polynomial(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgument("polynomial needs at least one variable");
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) : n_(m.nvars()) {
    if (n_ == 0) throw InvalidArgument("polynomial needs at least one variable");
    add_term(m, c);
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) { return Polynomial(Monomial::one(n), c); }

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != n_) throw InvalidArgument("term " + m.to_string() + " has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.n_ != n_) throw InvalidArgument("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.n_ != n_) throw InvalidArgument("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw InvalidArgument("polynomial variable count mismatch");
    Polynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(n_);
    if (c == 0) return r;
    for (const auto& [t, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, coeff * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(n_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + '*';
            out += m.to_string();
        }
    }
    return out;
}

namespace {

// A polynomial in the group parameter a with polynomial coefficients.
using APoly = std::vector<Polynomial>;

APoly amul(const APoly& x, const APoly& y, std::size_t n) {
    APoly r(x.size() + y.size() - 1, Polynomial(n));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    }
    return r;
}

}  // namespace

std::vector<Polynomial> ga_coefficients(const Polynomial& p) {
    const std::size_t n = p.nvars();
    // images[i] = theta(a)(x_{i+1}) = sum_k (a^k / k!) x_{i+1+k}
    std::vector<APoly> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational factorial = 1;
        for (std::size_t k = 0; i + k < n; ++k) {
            if (k > 0) factorial *= static_cast<unsigned long>(k);
            images[i].push_back(Polynomial(Monomial::var(n, i + k), Rational(1) / factorial));
        }
    }
    APoly total(1, Polynomial(n));
    for (const auto& [m, c] : p.terms()) {
        APoly term(1, Polynomial::constant(n, c));
        for (std::size_t i = 0; i < n; ++i) {
            for (int e = 0; e < m[i]; ++e) term = amul(term, images[i], n);
        }
        if (term.size() > total.size()) total.resize(term.size(), Polynomial(n));
        for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
    }
    while (total.size() > 1 && total.back().is_zero()) total.pop_back();
    return total;
}

Polynomial ga_apply(const Polynomial& p, const Rational& a) {
    Polynomial out(p.nvars());
    Rational power = 1;
    for (const auto& coeff : ga_coefficients(p)) {
        out += coeff * power;
        power *= a;
    }
    return out;
}

Polynomial torus_apply(const Polynomial& p, std::span<const Rational> scale) {
    if (scale.size() != p.nvars()) throw InvalidArgument("torus scale length mismatch");
    for (const auto& s : scale) {
        if (s == 0) throw InvalidArgument("torus scale entry is zero");
    }
    Polynomial out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Rational factor = c;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            for (int e = 0; e < m[i]; ++e) factor *= scale[i];
        }
        out.add_term(m, factor);
    }
    return out;
}

Polynomial linear_substitute(const Polynomial& p, const std::vector<std::vector<Rational>>& matrix) {
    const std::size_t n = p.nvars();
    if (matrix.size() != n) throw InvalidArgument("substitution matrix has wrong row count");
    std::vector<Polynomial> images;
    for (const auto& row : matrix) {
        if (row.size() != n) throw InvalidArgument("substitution matrix has wrong column count");
        Polynomial img(n);
        for (std::size_t j = 0; j < n; ++j) img.add_term(Monomial::var(n, j), row[j]);
        images.push_back(std::move(img));
    }
    Polynomial out(n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) term = term * images[i].pow(static_cast<unsigned>(m[i]));
        out += term;
    }
    return out;
}

}  // namespace agraph
