#include "doctest.h"

#include <algorithm>
#include <set>

#include "curvcert/errors.hpp"
#include "curvcert/partitions.hpp"
#include "oracles/pentagonal.hpp"

using namespace curvcert;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("partition basics")
{
    const Partition t = P({2, 1, 2});
    CHECK(t.parts() == std::vector<int>{1, 2, 2});
    CHECK(t.sum() == 5);
    CHECK(t.length() == 3);
    CHECK(t.multiplicity(2) == 2);
    CHECK(t.composition_count() == 3);
    CHECK(P({1, 1, 2}).composition_count() == 3);
    CHECK(P({1, 2}).composition_count() == 2);
    CHECK_THROWS_AS(P({0, 1}), InvalidInput);
}

TEST_CASE("partition text form")
{
    CHECK(to_string(P({1, 2, 2})) == "[1,2,2]");
    CHECK(to_string(Partition{}) == "[]");
    CHECK(parse_partition("[1,2,2]") == P({1, 2, 2}));
    CHECK(parse_partition("[2, 1]") == P({1, 2}));
    CHECK(parse_partition("[]") == Partition{});
    CHECK_THROWS_AS(parse_partition("[1,"), ParseError);
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
    CHECK(to_string(PartitionSequence{P({1}), P({2})}) == "([1],[2])");
}

TEST_CASE("enumerate_partitions")
{
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(1) == std::vector<Partition>{P({1})});
    const auto four = enumerate_partitions(4);
    const std::set<Partition> got(four.begin(), four.end());
    const std::set<Partition> want{P({1, 1, 1, 1}), P({1, 1, 2}), P({2, 2}), P({1, 3}), P({4})};
    CHECK(got == want);
    CHECK(std::is_sorted(four.begin(), four.end()));

    const auto p = oracle::partition_numbers(20);
    for (int m = 0; m <= 20; ++m) {
        const auto parts = enumerate_partitions(m);
        CHECK(parts.size() == static_cast<std::size_t>(p[static_cast<std::size_t>(m)]));
        CHECK(partition_count(m) == static_cast<std::uint64_t>(p[static_cast<std::size_t>(m)]));
        CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
        for (const auto& t : parts)
            CHECK(t.sum() == m);
    }
}

TEST_CASE("box correspondence")
{
    CHECK(box(P({1, 2, 2}), 3) == Exponent{1, 2, 0});
    CHECK(box(Partition{}, 2) == Exponent{0, 0});
    CHECK_THROWS_AS(box(P({4}), 3), PartExceedsAmbient);
    for (int m = 0; m <= 8; ++m)
        for (const auto& t : enumerate_partitions(m))
            CHECK(partition_of_box(box(t, 8)) == t);
}

TEST_CASE("proper sub-partitions")
{
    CHECK(proper_subpartitions(P({1, 2})) == std::set<Partition>{P({1}), P({2})});
    CHECK(proper_subpartitions(P({3})).empty());
    CHECK(proper_subpartitions(P({1, 1, 2})) == std::set<Partition>{P({1}), P({2}), P({1, 1}), P({1, 2})});
}

TEST_CASE("completeness examples")
{
    const std::vector<Partition> a{P({1}), P({1, 1}), P({2})};
    CHECK(is_complete(a));
    CHECK(boxes_form_staircase(a));
    const std::vector<Partition> b{P({1}), P({1, 2})};
    CHECK_FALSE(is_complete(b));
    CHECK_FALSE(boxes_form_staircase(b));
    const std::vector<Partition> c{P({1}), P({1, 1}), P({3})};
    CHECK(is_complete(c));
    CHECK(boxes_form_staircase(c));
}

TEST_CASE("box lemma: both completeness tests agree on every small family")
{
    // All partitions with sum <= 10 would give 2^138 subsets; instead take
    // every subset of the partitions of sum <= 5 (2^18), plus every subset of
    // size <= 3 drawn from sum <= 10.
    std::vector<Partition> pool;
    for (int m = 1; m <= 5; ++m)
        for (const auto& t : enumerate_partitions(m))
            pool.push_back(t);
    REQUIRE(pool.size() == 18);
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<Partition> set;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (1u << i))
                set.push_back(pool[i]);
        REQUIRE(is_complete(set) == boxes_form_staircase(set));
    }

    std::vector<Partition> wide;
    for (int m = 1; m <= 10; ++m)
        for (const auto& t : enumerate_partitions(m))
            wide.push_back(t);
    for (std::size_t i = 0; i < wide.size(); ++i)
        for (std::size_t j = i; j < wide.size(); ++j)
            for (std::size_t l = j; l < wide.size(); ++l) {
                std::set<Partition> s{wide[i], wide[j], wide[l]};
                std::vector<Partition> set(s.begin(), s.end());
                REQUIRE(is_complete(set) == boxes_form_staircase(set));
            }
}

TEST_CASE("toric sequences")
{
    std::vector<PartitionSequence> one(enumerate_toric_sequences(1).begin(), enumerate_toric_sequences(1).end());
    CHECK(one == std::vector<PartitionSequence>{{P({1})}});

    std::set<PartitionSequence> two;
    for (const auto& s : enumerate_toric_sequences(2))
        two.insert(s);
    CHECK(two == std::set<PartitionSequence>{{P({1}), P({2})}, {P({1}), P({1, 1})}});

    const auto p = oracle::partition_numbers(7);
    std::uint64_t expected = 1;
    for (int k = 1; k <= 6; ++k) {
        expected *= static_cast<std::uint64_t>(p[static_cast<std::size_t>(k)]);
        std::set<PartitionSequence> seen;
        for (const auto& s : enumerate_toric_sequences(k)) {
            CHECK(is_toric(s));
            CHECK(pairwise_distinct(s));
            CHECK(is_admissible(s));
            seen.insert(s);
        }
        CHECK(seen.size() == expected);
        CHECK(toric_sequence_count(k) == expected);
    }
    CHECK(toric_sequence_count(4) == 30);
    CHECK(toric_sequence_count(6) == 2310);
}

TEST_CASE("sequence predicates")
{
    const PartitionSequence adm{P({1}), P({1}), P({2})};
    CHECK_FALSE(pairwise_distinct(adm));
    CHECK_FALSE(is_admissible(adm));
    const PartitionSequence rl{P({1}), P({1, 1}), P({2}), P({2, 2}), P({2, 2, 2})};
    CHECK_FALSE(is_admissible(rl));
    CHECK_FALSE(is_toric(rl));
    CHECK(is_admissible(PartitionSequence{P({1}), P({2}), P({2})}) == false);
    CHECK(is_admissible(PartitionSequence{P({1}), P({1, 1}), P({2})}));
}

TEST_CASE("complete toric sequences match a brute-force filter")
{
    for (int k = 1; k <= 6; ++k) {
        std::set<PartitionSequence> filtered;
        for (const auto& s : enumerate_toric_sequences(k))
            if (is_complete(s))
                filtered.insert(s);
        const auto dfs = enumerate_complete_toric_sequences(k);
        CHECK(std::set<PartitionSequence>(dfs.begin(), dfs.end()) == filtered);
        CHECK(dfs.size() == filtered.size());
        for (const auto& s : dfs)
            for (std::size_t l = 1; l <= s.size(); ++l)
                CHECK(is_complete(std::span<const Partition>(s.data(), l)));
    }
    const auto three = enumerate_complete_toric_sequences(3);
    const std::set<PartitionSequence> s3(three.begin(), three.end());
    CHECK(s3.count({P({1}), P({2}), P({1, 2})}) == 1);
    CHECK(s3.count({P({1}), P({2}), P({3})}) == 1);
    CHECK(enumerate_complete_toric_sequences(2).size() == 2);
}
