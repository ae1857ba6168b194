#include "doctest.h"

#include <random>

#include "agraph/errors.hpp"
#include "agraph/groebner.hpp"
#include "agraph/polynomial.hpp"
#include "support.hpp"

using namespace agraph;
using namespace agraph::testing;

namespace {

Polynomial var(std::size_t n, std::size_t i, int power = 1) { return Polynomial(Monomial::var(n, i, power)); }

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// The compatible torus diag(t^c, t^{c-p}, ..., t^{c-(n-1)p}).
std::vector<Rational> torus(std::size_t n, const Rational& t, long c, long p) {
    std::vector<Rational> s;
    for (std::size_t i = 0; i < n; ++i) {
        const long e = c - static_cast<long>(i) * p;
        Rational v = 1;
        for (long k = 0; k < std::abs(e); ++k) v *= t;
        s.push_back(e >= 0 ? v : Rational(1 / v));
    }
    return s;
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-4/6") == q(-2, 3));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("polynomial arithmetic basics") {
    const std::size_t n = 2;
    const auto x1 = var(n, 0), x2 = var(n, 1);
    const auto p = x1 * x1 + Rational(2) * x2;
    CHECK(p.to_string() == "x1^2 + 2*x2");
    CHECK((p - p).is_zero());
    CHECK((x1 + x2).pow(2) == x1 * x1 + Rational(2) * x1 * x2 + x2 * x2);
    CHECK(p.total_degree() == 2);
    CHECK(Polynomial(n).to_string() == "0");
}

TEST_CASE("G_a coefficient lists") {
    CHECK(ga_coefficients(var(3, 2)) == std::vector<Polynomial>{var(3, 2)});
    CHECK(ga_coefficients(var(3, 0)) == std::vector<Polynomial>{var(3, 0), var(3, 1), q(1, 2) * var(3, 2)});
    CHECK(ga_coefficients(var(2, 0, 2)) ==
          std::vector<Polynomial>{var(2, 0, 2), Rational(2) * var(2, 0) * var(2, 1), var(2, 1, 2)});
}

TEST_CASE("G_a action examples") {
    std::mt19937 rng(1);
    const auto p = random_polynomial(rng, 3, 3, 5);
    CHECK(ga_apply(p, 0) == p);
    CHECK(ga_apply(var(2, 0), 1) == var(2, 0) + var(2, 1));
}

TEST_CASE("torus action examples") {
    const std::vector<Rational> s{2, 3};
    CHECK(torus_apply(var(2, 0) + var(2, 1), s) == Rational(2) * var(2, 0) + Rational(3) * var(2, 1));
    CHECK(torus_apply(var(2, 0, 2) * var(2, 1), s) == Rational(12) * var(2, 0, 2) * var(2, 1));
    const std::vector<Rational> zero{0, 1};
    CHECK_THROWS_AS(torus_apply(var(2, 0), zero), InvalidArgument);
}

TEST_CASE("property: ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto a = random_polynomial(rng, n, 3, 4);
        const auto b = random_polynomial(rng, n, 3, 4);
        const auto c = random_polynomial(rng, n, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Polynomial::constant(n, 1) == a);
        CHECK((a - a).is_zero());
        CHECK(a.pow(2) == a * a);
    }
}

TEST_CASE("property: ga_apply is a ring map and equals its coefficient expansion") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto a = random_polynomial(rng, n, 3, 4);
        const auto b = random_polynomial(rng, n, 3, 4);
        const Rational u = random_rational(rng);
        CHECK(ga_apply(a * b, u) == ga_apply(a, u) * ga_apply(b, u));
        CHECK(ga_apply(a + b, u) == ga_apply(a, u) + ga_apply(b, u));
        // Explicit substitution matrix x_i -> sum_k u^k/k! x_{i+k}.
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            Rational term = 1;
            for (std::size_t k = 0; i + k < n; ++k) {
                if (k > 0) term = term * u / static_cast<long>(k);
                m[i][i + k] = term;
            }
        }
        CHECK(ga_apply(a, u) == linear_substitute(a, m));
    }
}

TEST_CASE("property: group law and torus compatibility") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto p = random_polynomial(rng, n, 4, 5);
        const Rational a = random_rational(rng), b = random_rational(rng);
        CHECK(ga_apply(ga_apply(p, a), b) == ga_apply(p, a + b));

        const Rational t = random_nonzero_rational(rng);
        const long c = trial % 5 - 2, pw = 1 + trial % 3;
        const auto lam = torus(n, t, c, pw);
        const auto lam_inv = torus(n, 1 / t, c, pw);
        Rational tp = 1;
        for (long k = 0; k < pw; ++k) tp *= t;
        CHECK(torus_apply(ga_apply(torus_apply(p, lam), a), lam_inv) == ga_apply(p, tp * a));
    }
}

TEST_CASE("Buchberger examples") {
    const std::size_t n = 2;
    const auto x1 = var(n, 0), x2 = var(n, 1);
    const std::vector<Polynomial> g1{x1 * x1 + Rational(2) * x2, x1 * x2, x2 * x2};
    const auto gb1 = buchberger(g1);
    CHECK(gb1.basis.size() == 3);
    CHECK(gb1.initial_ideal() == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(normal_form(x1 * x1, gb1) == Rational(-2) * x2);
    CHECK(ideal_member(x1 * x1 * x1, gb1));
    CHECK_FALSE(ideal_member(Polynomial::constant(n, 1), gb1));
    for (const auto& g : g1) CHECK(ideal_member(g, gb1));
    CHECK(poly_colength(gb1) == 3);

    const std::vector<Polynomial> g2{x1 - x2, x2 * x2};
    const auto gb2 = buchberger(g2, TermOrder::Lex);
    CHECK(gb2.basis == std::vector<Polynomial>{x1 - x2, x2 * x2});
    CHECK(normal_form(x1 * x1, gb2).is_zero());
    CHECK(poly_colength(gb2) == 2);

    // Monomial input is already reduced.
    const std::vector<Polynomial> mons{var(3, 0, 2), var(3, 1), var(3, 0) * var(3, 2), var(3, 2, 2)};
    const auto gb3 = buchberger(mons);
    CHECK(gb3.initial_ideal() == ideal(3, {{2, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 0, 2}}));
    CHECK(poly_colength(gb3) == colength(gb3.initial_ideal()));
}

TEST_CASE("Buchberger step cap raises ResourceCap") {
    std::mt19937 rng(3);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_polynomial(rng, 3, 3, 4));
    CHECK_THROWS_AS(buchberger(gens, TermOrder::DegRevLex, 1), ResourceCap);
}

TEST_CASE("G_a-fixed polynomial ideals") {
    const std::size_t n = 2;
    const auto x1 = var(n, 0), x2 = var(n, 1);
    const std::vector<Polynomial> fam{x1 * x1 + Rational(2) * x2, x1 * x2, x2 * x2};
    CHECK(is_ga_fixed_poly_ideal(fam));
    const std::vector<Polynomial> lone{x1 * x1};
    CHECK_FALSE(is_ga_fixed_poly_ideal(lone));
}

namespace {

// Buchberger's criterion checked from scratch: every S-polynomial of the
// basis reduces to zero by naive division.
bool s_pairs_reduce(const GroebnerBasis& g) {
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < g.basis.size(); ++j) {
            const auto& f = g.basis[i];
            const auto& h = g.basis[j];
            const Monomial l = leading_monomial(f, g.order).lcm(leading_monomial(h, g.order));
            const auto s = f.mul_term(*l.divide(leading_monomial(f, g.order)), 1 / leading_coefficient(f, g.order)) -
                           h.mul_term(*l.divide(leading_monomial(h, g.order)), 1 / leading_coefficient(h, g.order));
            if (!normal_form(s, g).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("property: Groebner bases on random systems") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<Polynomial> gens;
        // Pure powers keep the systems zero-dimensional and small.
        for (std::size_t i = 0; i < n; ++i) gens.push_back(var(n, i, 2 + trial % 2) + random_polynomial(rng, n, 1, 2));
        gens.push_back(random_polynomial(rng, n, 2, 3));
        const auto dr = buchberger(gens, TermOrder::DegRevLex);
        const auto lx = buchberger(gens, TermOrder::Lex);
        CHECK(s_pairs_reduce(dr));
        CHECK(s_pairs_reduce(lx));
        CHECK(buchberger(gens, TermOrder::DegRevLex) == dr);  // deterministic

        for (int k = 0; k < 5; ++k) {
            const auto p = random_polynomial(rng, n, 4, 4);
            const auto nf = normal_form(p, dr);
            CHECK(normal_form(nf, dr) == nf);
            CHECK(ideal_member(p, dr) == ideal_member(p, lx));
            // p - nf(p) lies in the ideal.
            CHECK(ideal_member(p - nf, lx));
        }
        for (const auto& g : gens) {
            CHECK(ideal_member(g, dr));
            CHECK(ideal_member(g, lx));
        }
        if (!dr.basis.empty() && !(dr.basis.size() == 1 && dr.basis[0].total_degree() == 0)) {
            CHECK(poly_colength(dr) == poly_colength(lx));
        }
    }
}
