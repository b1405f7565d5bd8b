#include "doctest.h"

#include "curvcert/errors.hpp"
#include "curvcert/weights.hpp"
#include "oracles/fourier_motzkin.hpp"

using namespace curvcert;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

bool fm_level_feasible(const LevelSystem& sys, std::size_t k)
{
    std::vector<oracle::Inequality> rows;
    for (const auto& r : sys.rows) {
        Vector c;
        for (int x : r.coeffs)
            c.push_back(x);
        rows.push_back({c, true});
    }
    return oracle::fm_feasible(rows, k);
}

}  // namespace

TEST_CASE("level systems")
{
    const LevelSystem a = level_system({P({1}), P({2})});
    REQUIRE(a.rows.size() == 1);
    CHECK(a.rows[0].level == 2);
    CHECK(a.rows[0].competitor == P({1, 1}));
    CHECK(a.rows[0].coeffs == std::vector<int>{-2, 1});

    const LevelSystem b = level_system({P({1}), P({1, 1}), P({1, 2})});
    REQUIRE(b.rows.size() == 3);
    CHECK(b.rows[0].coeffs == std::vector<int>{2, -1, 0});
    CHECK(b.rows[1].competitor == P({1, 1, 1}));
    CHECK(b.rows[1].coeffs == std::vector<int>{-2, 1, 0});
    CHECK(b.rows[2].competitor == P({3}));
    CHECK(b.rows[2].coeffs == std::vector<int>{1, 1, -1});

    CHECK(level_system({P({1})}).rows.empty());
    CHECK_THROWS_AS(level_system({P({2})}), NotToric);
    CHECK(partition_vector(P({1, 1, 3}), 4) == std::vector<int>{2, 0, 1, 0});
}

TEST_CASE("row count is the number of competitors")
{
    for (int k = 1; k <= 6; ++k)
        for (const auto& pi : enumerate_toric_sequences(k)) {
            std::size_t expected = 0;
            for (int l = 1; l <= k; ++l)
                expected += partition_count(l) - 1;
            const auto sys = level_system(pi);
            REQUIRE(sys.rows.size() == expected);
            for (const auto& r : sys.rows)
                for (std::size_t i = static_cast<std::size_t>(r.level); i < r.coeffs.size(); ++i)
                    REQUIRE(r.coeffs[i] == 0);
        }
}

TEST_CASE("weight certificate examples")
{
    const auto w = weight_certificate({P({1}), P({2}), P({1, 2})});
    REQUIRE(w);
    CHECK(w->provenance == "level-system-lp");
    CHECK(verify_weights({P({1}), P({2}), P({1, 2})}, w->values));

    CHECK_FALSE(weight_certificate({P({1}), P({1, 1}), P({1, 2})}));
    CHECK_FALSE(incremental_weight_certificate({P({1}), P({1, 1}), P({1, 2})}));

    const auto single = weight_certificate({P({1})});
    REQUIRE(single);
    CHECK(single->values == Vector{1});
}

TEST_CASE("feasible exactly on complete sequences, by two routes")
{
    std::size_t total = 0, complete = 0;
    for (int k = 1; k <= 5; ++k)
        for (const auto& pi : enumerate_toric_sequences(k)) {
            ++total;
            const auto sys = level_system(pi);
            const auto w = weight_certificate(pi);
            const bool fm = fm_level_feasible(sys, static_cast<std::size_t>(k));
            REQUIRE(w.has_value() == is_complete(pi));
            REQUIRE(fm == is_complete(pi));
            const auto inc = incremental_weight_certificate(pi);
            REQUIRE(inc.has_value() == w.has_value());
            if (!w)
                continue;
            ++complete;
            REQUIRE(violated_rows(sys, w->values).empty());
            REQUIRE(violated_rows(sys, inc->values).empty());
            REQUIRE(verify_weights(pi, w->values));
            REQUIRE(verify_weights(pi, inc->values));
            for (const Rational c : {Rational(1, 5), Rational(7), Rational(2, 3)}) {
                Vector scaled = w->values;
                for (auto& x : scaled)
                    x *= c;
                REQUIRE(verify_weights(pi, scaled));
            }
            Vector negated = w->values;
            for (auto& x : negated)
                x = -x;
            if (!sys.rows.empty())
                REQUIRE_FALSE(verify_weights(pi, negated));
        }
    CHECK(total == 1 + 2 + 6 + 30 + 210);
    CHECK(complete > 0);
    CHECK(complete < total);
}

TEST_CASE("incremental witnesses for longer sequences")
{
    for (int k = 6; k <= 7; ++k)
        for (const auto& pi : enumerate_complete_toric_sequences(k)) {
            const auto inc = incremental_weight_certificate(pi);
            REQUIRE(inc);
            CHECK(violated_rows(level_system(pi), inc->values).empty());
            CHECK((inc->provenance == "level-by-level" || inc->provenance == "level-by-level-with-prefix-lp"));
        }
}

TEST_CASE("wrong witnesses are refused")
{
    const PartitionSequence pi{P({1}), P({2})};
    CHECK(verify_weights(pi, {1, 3}));
    CHECK_FALSE(verify_weights(pi, {1, 2}));
    CHECK_FALSE(verify_weights(pi, {2, 3}));
    CHECK_FALSE(verify_weights(pi, {1, 3, 4}));
}

TEST_CASE("exponent vectors telescope to the limit exponent")
{
    CHECK(exponent_vector({P({1}), P({2})}) == std::vector<int>{1, 1});
    CHECK(exponent_vector({P({1}), P({1, 1}), P({1, 2})}) == std::vector<int>{4, 1, 0});
    CHECK_THROWS_AS(exponent_vector({P({1}), P({3})}), NotToric);
    const Vector alpha{3, -1, 2, 5};
    for (const auto& pi : enumerate_toric_sequences(4)) {
        const auto e = exponent_vector(pi);
        Rational total = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            total += e[i] * alpha[i];
        CHECK(limit_exponent(pi, alpha) == total);
    }
}
