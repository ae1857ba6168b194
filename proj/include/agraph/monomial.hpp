#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace agraph {

/// Exponent vector x_1^{e_1} ... x_n^{e_n}. Immutable value type.
///
/// The built-in ordering (`<=>`) is lexicographic with x_1 > x_2 > ... > x_n,
/// i.e. the larger exponent of x_1 wins. Monomials of different lengths are
/// only comparable through lex_compare, which rejects the mismatch.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    Monomial(std::initializer_list<int> exponents);

    /// The unit monomial in n variables.
    static Monomial one(std::size_t n);
    /// x_{index+1}^{power} in n variables (index is 0-based).
    static Monomial var(std::size_t n, std::size_t index, int power = 1);

    std::size_t nvars() const noexcept { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    std::span<const int> exponents() const noexcept { return exps_; }
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    /// Quotient if `divisor` divides *this, otherwise nullopt.
    std::optional<Monomial> divide(const Monomial& divisor) const;
    /// Adds `delta` to exponent `index`; nullopt if the result would be negative.
    std::optional<Monomial> shifted(std::size_t index, int delta) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    /// "x1^2*x3", or "1" for the unit.
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Lexicographic comparison with x_1 > ... > x_n. Throws InvalidArgument on
/// length mismatch.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// True iff every exponent of a is <= the matching exponent of b.
bool divides(const Monomial& a, const Monomial& b);

/// w(m) = sum_j a_j (n - j) with 1-based j.
long monomial_weight(const Monomial& m);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace agraph
