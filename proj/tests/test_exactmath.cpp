#include "doctest.h"

#include "curvcert/errors.hpp"
#include "curvcert/exactmath.hpp"
#include "oracles/bareiss.hpp"
#include "oracles/fourier_motzkin.hpp"
#include "support/random.hpp"

using namespace curvcert;
using testing_support::Rng;

TEST_CASE("rational text form")
{
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("solve_linear on the identity")
{
    Matrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto sol = solve_linear(id, {1, 2, 3});
    REQUIRE(sol);
    CHECK(sol->particular == Vector{1, 2, 3});
    CHECK(sol->kernel.empty());
}

TEST_CASE("solve_linear on a zero row")
{
    auto sol = solve_linear(Matrix{{0, 0}}, {0});
    REQUIRE(sol);
    CHECK(sol->kernel.size() == 2);
    CHECK_FALSE(solve_linear(Matrix{{0, 0}}, {1}));
    CHECK_THROWS_AS(solve_linear(Matrix{}, {}), InvalidInput);
}

TEST_CASE("solve_linear agrees with fraction-free elimination")
{
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 5, cols = 7;
        Matrix a(rows);
        for (auto& r : a)
            r = testing_support::random_vector(rng, cols, 3);
        // Some trials get dependent rows to exercise rank deficiency.
        if (trial % 3 == 0)
            for (std::size_t j = 0; j < cols; ++j)
                a[4][j] = a[0][j] * 2 - a[1][j];
        const Vector b = testing_support::random_vector(rng, rows);
        const auto sol = solve_linear(a, b);
        CHECK(sol.has_value() == oracle::bareiss_consistent(a, b));
        CHECK(rank(a) == oracle::bareiss_rank(a));
        if (!sol)
            continue;
        CHECK(mat_vec(a, sol->particular) == b);
        CHECK(sol->kernel.size() == cols - oracle::bareiss_rank(a));
        for (const auto& k : sol->kernel)
            CHECK(is_zero(mat_vec(a, k)));
    }
}

TEST_CASE("linear system construction")
{
    CHECK_THROWS_AS(LinearSystem(2, {{1}}), DimensionMismatch);
    CHECK_THROWS_AS(LinearSystem(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(LinearSystem(2, {{1, 0}}, {2}), IndexOutOfRange);
    LinearSystem sys(2, {{-2, 1}});
    CHECK(sys.satisfied_by({1, 3}));
    CHECK_FALSE(sys.satisfied_by({1, 2}));
}

TEST_CASE("strict feasibility examples")
{
    auto w = strict_feasible(LinearSystem(2, {{-2, 1}}));
    REQUIRE(w);
    CHECK((*w)[1] - 2 * (*w)[0] > 0);

    CHECK_FALSE(strict_feasible(LinearSystem(1, {{1}, {-1}})));

    // Level rows of ([1],[1,1],[1,2]): 2a1 > a2 and a1 + a2 > 3a1 and a1 + a2 > a3.
    CHECK_FALSE(strict_feasible(LinearSystem(3, {{2, -1, 0}, {-2, 1, 0}, {1, 1, -1}})));

    auto nonneg = strict_feasible(LinearSystem(2, {{1, -1}}, {1}));
    REQUIRE(nonneg);
    CHECK((*nonneg)[1] >= 0);
    CHECK((*nonneg)[0] > (*nonneg)[1]);
}

TEST_CASE("strict feasibility agrees with Fourier-Motzkin")
{
    Rng rng(5);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = testing_support::uniform_int(rng, 1, 5);
        const int m = testing_support::uniform_int(rng, 1, 7);
        std::vector<Vector> rows;
        while (static_cast<int>(rows.size()) < m) {
            Vector r(static_cast<std::size_t>(n));
            for (auto& x : r)
                x = testing_support::uniform_int(rng, -3, 3);
            if (!is_zero(r))
                rows.push_back(r);
        }
        std::vector<std::size_t> nonneg;
        for (int i = 0; i < n; ++i)
            if (testing_support::uniform_int(rng, 0, 3) == 0)
                nonneg.push_back(static_cast<std::size_t>(i));
        const LinearSystem sys(static_cast<std::size_t>(n), rows, nonneg);

        std::vector<oracle::Inequality> fm;
        for (const auto& r : rows)
            fm.push_back({r, true});
        for (std::size_t i : nonneg) {
            Vector e(static_cast<std::size_t>(n), Rational(0));
            e[i] = 1;
            fm.push_back({e, false});
        }
        const bool expected = oracle::fm_feasible(fm, static_cast<std::size_t>(n));
        const auto w = strict_feasible(sys);
        REQUIRE(w.has_value() == expected);
        if (w) {
            ++feasible;
            CHECK(sys.satisfied_by(*w));
            for (const Rational c : {Rational(1, 7), Rational(5), Rational(3, 2)}) {
                Vector scaled = *w;
                for (auto& x : scaled)
                    x *= c;
                CHECK(sys.satisfied_by(scaled));
            }
        } else {
            ++infeasible;
        }
    }
    // Both verdicts must actually occur for the comparison to mean anything.
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
}

TEST_CASE("zero-variable systems")
{
    auto w = strict_feasible(LinearSystem(0, {}));
    REQUIRE(w);
    CHECK(w->empty());
}
