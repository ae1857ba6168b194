#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "agraph/monomial.hpp"

namespace agraph {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidArgument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Sparse polynomial with exact rational coefficients in n variables.
/// Zero coefficients are never stored; terms are keyed by exponent vector.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, std::greater<>>;  // lex-descending

    explicit Polynomial(std::size_t n = 1);
    Polynomial(const Monomial& m, const Rational& c = 1);
    static Polynomial constant(std::size_t n, const Rational& c);

    std::size_t nvars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    int total_degree() const;
    Rational coefficient(const Monomial& m) const;

    /// Adds c*m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// "x1^2 + 2*x2", "0" for zero; lex-descending term order.
    std::string to_string() const;

private:
    std::size_t n_;
    Terms terms_;
};

/// Coefficients of a^k (k = 0, 1, ...) in theta(a)(p), where theta(a)
/// substitutes x_i -> sum_{k=0}^{n-i} (a^k / k!) x_{i+k}. Entry 0 is p
/// itself; trailing zero entries are trimmed.
std::vector<Polynomial> ga_coefficients(const Polynomial& p);

/// theta(a)(p) = sum_k a^k * ga_coefficients(p)[k].
Polynomial ga_apply(const Polynomial& p, const Rational& a);

/// Diagonal substitution x_i -> s_i x_i. Throws InvalidArgument on a zero
/// entry or a length mismatch.
Polynomial torus_apply(const Polynomial& p, std::span<const Rational> scale);

/// General linear substitution x_i -> sum_j matrix[i][j] x_j.
Polynomial linear_substitute(const Polynomial& p, const std::vector<std::vector<Rational>>& matrix);

}  // namespace agraph
