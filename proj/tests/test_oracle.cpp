#include "doctest.h"

#include <algorithm>

#include "frobkern/oracle.hpp"

using namespace frobkern;

TEST_CASE("enumerate_solutions: hand-checked sets")
{
    const auto sols = enumerate_solutions({3, 2, 0, 2});
    REQUIRE(sols.size() == 3);
    const std::vector<SolutionTuple> expected{
        {{0, 1}, {0, 0}, std::nullopt},
        {{2, 0}, {0, 1}, std::nullopt},
        {{3, 0}, {0, 0}, std::nullopt},
    };
    CHECK(sols == expected);

    CHECK(enumerate_solutions({3, 1, 2, 2}).empty());

    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t r = 1; r <= 3; ++r) {
            const auto zero = enumerate_solutions({p, r, 0, 0});
            REQUIRE(zero.size() == 1);
            CHECK(std::all_of(zero[0].a.begin(), zero[0].a.end(), [](auto v) { return v == 0; }));
            CHECK(std::all_of(zero[0].b.begin(), zero[0].b.end(), [](auto v) { return v == 0; }));
            CHECK(zero[0].b.size() == (p == 2 ? 0U : static_cast<std::size_t>(r)));
        }
    }
}

TEST_CASE("enumeration is strictly increasing and every tuple re-verifies")
{
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t r = 1; r <= 3; ++r) {
            for (std::int64_t m = 0; m <= 6; ++m) {
                for (std::int64_t n = 0; n <= 6; ++n) {
                    const CountParams params{p, r, m, n};
                    const auto sols = enumerate_solutions(params);
                    CHECK(std::adjacent_find(sols.begin(), sols.end(),
                                             [](const auto& x, const auto& y) { return !(x < y); }) ==
                          sols.end());
                    for (const auto& s : sols) {
                        CHECK(satisfies_classical(s, params));
                        CHECK(s.degree(p) >= 0);
                    }
                    CHECK(brute_count(params) == sols.size());
                }
            }
        }
    }
}

TEST_CASE("brute_count: tabulated values")
{
    CHECK(brute_count({3, 3, 0, 6}) == 73);
    CHECK(brute_count({5, 4, 0, 4}) == 2505);
    CHECK(brute_count({3, 2, 0, 1}) == 0);
}

TEST_CASE("quantum and graded variants")
{
    CHECK(brute_quantum(3, 1, 2) == 3);
    CHECK(brute_quantum(3, 1, 0) == 1);
    CHECK(brute_quantum(3, 1, 1) == 0);
    CHECK(brute_graded({3, 1, 0, 2}, 2) == 1);
    CHECK(brute_graded({3, 1, 0, 2}, 0) == 0);

    const auto q = enumerate_quantum(3, 1, 2);
    REQUIRE(q.size() == 3);
    CHECK(*q[0].a0 == 0);
    CHECK(q[0].a == std::vector<std::int64_t>{1});
    CHECK(*q[1].a0 == 2);
    CHECK(q[1].b == std::vector<std::int64_t>{1});
    CHECK(*q[2].a0 == 3);
    for (const auto& s : q) CHECK(satisfies_quantum(s, 3, 1, 2));
    CHECK_THROWS_AS(brute_quantum(2, 1, 2), InvalidInput);
}

TEST_CASE("satisfies_* reject non-solutions")
{
    CHECK_FALSE(satisfies_classical({{1, 0}, {0, 0}, std::nullopt}, {3, 2, 0, 2}));
    CHECK_FALSE(satisfies_classical({{0, 1}, {0, 2}, std::nullopt}, {3, 2, 0, 2}));
    CHECK_FALSE(satisfies_classical({{0, 1}, {0}, std::nullopt}, {3, 2, 0, 2}));
    CHECK_FALSE(satisfies_quantum({{1}, {0}, std::nullopt}, 3, 1, 2));
}

TEST_CASE("box size follows the linear bounds")
{
    // p = 3, r = 2, m = 0, n = 2: a_1 <= 18/6, a_2 <= 18/18, two b's.
    CHECK(classical_box_size({3, 2, 0, 2}) == 4 * 2 * 2 * 2);
    // p = 2, r = 2, m = 1, n = 1: a_1 <= 3/2, a_2 <= 3/4.
    CHECK(classical_box_size({2, 2, 1, 1}) == 2 * 1);
    // m > n p^r: empty box.
    CHECK(classical_box_size({3, 1, 10, 1}) == 0);
    // a_0 <= 6/2, a_1 <= 6/6, one b.
    CHECK(quantum_box_size(3, 1, 2) == 4 * 2 * 2);
}

TEST_CASE("force threshold")
{
    CHECK(classical_box_size({5, 5, 0, 10}) > kOracleForceThreshold);
    CHECK_THROWS_AS(brute_count({5, 5, 0, 10}), OracleRefused);
    CHECK_THROWS_AS(enumerate_solutions({5, 5, 0, 10}), OracleRefused);
    CHECK_THROWS_AS(brute_quantum(5, 3, 12), OracleRefused);
    CHECK(brute_count({3, 4, 0, 2}, {.force = true}) == 111);
}

TEST_CASE("serial reference and OpenMP kernel agree")
{
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t r = 1; r <= 3; ++r) {
            for (std::int64_t n : {0, 3, 6}) {
                for (std::int64_t m : {0, 1, 4}) {
                    const CountParams params{p, r, m, n};
                    CHECK(brute_count(params, {.parallel = false}) == brute_count(params, {.parallel = true}));
                    CHECK(brute_degree_histogram(params, {.parallel = false}) ==
                          brute_degree_histogram(params, {.parallel = true}));
                }
            }
            if (p != 2) CHECK(brute_quantum(p, r, 4, {.parallel = true}) == brute_quantum(p, r, 4));
        }
    }
}
