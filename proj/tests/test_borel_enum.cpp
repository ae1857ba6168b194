#include "doctest.h"

#include <set>

#include "agraph/borel.hpp"
#include "agraph/errors.hpp"
#include "support.hpp"

using namespace agraph;
using namespace agraph::testing;

TEST_CASE("borel criterion examples") {
    CHECK(is_borel_fixed(terminal_ideal(3, 4)));
    CHECK(is_borel_fixed(example_I()));
    CHECK(is_borel_fixed(example_J()));
    CHECK_FALSE(is_borel_fixed(ideal(2, {{2, 0}, {0, 2}})));
}

TEST_CASE("terminal ideal") {
    CHECK(terminal_ideal(2, 3) == ideal(2, {{3, 0}, {0, 1}}));
    CHECK(terminal_ideal(1, 5) == ideal(1, {{5}}));
    CHECK(terminal_ideal(3, 10) == ideal(3, {{10, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(colength(terminal_ideal(3, 10)) == 10);
    CHECK_THROWS_AS(terminal_ideal(0, 3), InvalidArgument);
}

TEST_CASE("enumeration examples") {
    for (std::size_t d = 1; d <= 7; ++d) {
        const auto vs = enumerate_borel_fixed(1, d);
        REQUIRE(vs.ideals.size() == 1);
        CHECK(vs.ideals[0] == ideal(1, {{static_cast<int>(d)}}));
    }
    const auto v23 = enumerate_borel_fixed(2, 3);
    CHECK(v23.ideals == std::vector<MonomialIdeal>{ideal(2, {{3, 0}, {0, 1}}), ideal(2, {{2, 0}, {1, 1}, {0, 2}})});
    const auto v33 = enumerate_borel_fixed(3, 3);
    CHECK(v33.ideals == std::vector<MonomialIdeal>{ideal(3, {{3, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                                   ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}})});
    CHECK_THROWS_AS(enumerate_borel_fixed(0, 3), InvalidArgument);
    CHECK_THROWS_AS(enumerate_borel_fixed(2, 0), InvalidArgument);
}

TEST_CASE("vertex cap raises instead of truncating") {
    CHECK_THROWS_AS(enumerate_borel_fixed(2, 10, ExecPolicy::Serial, 5), ResourceCap);
    CHECK_THROWS_AS(enumerate_borel_fixed(2, 10, ExecPolicy::Parallel, 5), ResourceCap);
    CHECK(enumerate_borel_fixed(2, 10, ExecPolicy::Parallel, 10).ideals.size() == 10);
}

TEST_CASE("property: enumeration output is sorted, distinct, Borel, Artinian, colength d") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t d = 1; d <= (n <= 3 ? 8u : 6u); ++d) {
            const auto vs = enumerate_borel_fixed(n, d);
            REQUIRE_FALSE(vs.ideals.empty());
            CHECK(vs.ideals.front() == terminal_ideal(n, d));
            for (std::size_t i = 0; i < vs.ideals.size(); ++i) {
                const auto& id = vs.ideals[i];
                CHECK(is_artinian(id));
                CHECK(is_borel_fixed(id));
                CHECK(standard_naive(id).size() == d);
                if (i > 0) CHECK(vs.ideals[i - 1] > id);
            }
        }
    }
}

TEST_CASE("property: generator-only check agrees with checking all members") {
    // Every monomial ideal at small scale, Borel or not.
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t d = 1; d <= 6; ++d) {
            for (const auto& id : all_monomial_ideals(n, d)) {
                REQUIRE(is_borel_fixed(id) == borel_naive(id));
            }
        }
    }
}

TEST_CASE("property: Borel ideals are the standard sets closed under x_{i+1} -> x_i") {
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t d = 1; d <= 6; ++d) {
            for (const auto& id : all_monomial_ideals(n, d)) {
                const auto std_set = standard_naive(id);
                const std::set<Monomial> s(std_set.begin(), std_set.end());
                bool closed = true;
                for (const auto& m : s) {
                    for (std::size_t i = 0; i + 1 < n; ++i) {
                        if (m[i + 1] > 0) closed = closed && s.contains(*m.shifted(i + 1, -1)->shifted(i, 1));
                    }
                }
                CHECK(closed == is_borel_fixed(id));
            }
        }
    }
}

TEST_CASE("oracle equivalence for n <= 3, d <= 6") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t d = 1; d <= 6; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(enumerate_borel_fixed(n, d) == brute_force_enumerate(n, d));
        }
    }
}

TEST_CASE("n = 2 counts are partitions into distinct parts") {
    // Borel ideals in two variables are staircases with strictly decreasing
    // column heights.
    for (int d = 1; d <= 12; ++d) {
        CHECK(enumerate_borel_fixed(2, static_cast<std::size_t>(d)).ideals.size() == distinct_partitions(d, d));
    }
}

TEST_CASE("all_monomial_ideals matches the partition count in two variables") {
    // Plain partitions of d: independent recursion.
    std::function<std::size_t(int, int)> p = [&](int d, int max_part) -> std::size_t {
        if (d == 0) return 1;
        std::size_t total = 0;
        for (int part = std::min(d, max_part); part >= 1; --part) total += p(d - part, part);
        return total;
    };
    for (int d = 1; d <= 8; ++d) CHECK(all_monomial_ideals(2, static_cast<std::size_t>(d)).size() == p(d, d));
}

TEST_CASE("serial and parallel enumeration agree exactly") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t d = 1; d <= 7; ++d) {
            CHECK(enumerate_borel_fixed(n, d, ExecPolicy::Serial) == enumerate_borel_fixed(n, d, ExecPolicy::Parallel));
        }
    }
}
