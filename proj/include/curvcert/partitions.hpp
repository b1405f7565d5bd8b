#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvcert {

/// Exponent vector in N^n; also the coordinates of a box.
using Exponent = std::vector<int>;

/// A multiset of positive integers stored as a non-decreasing part list.
///
/// The default ordering is lexicographic on the part list, which is the
/// canonical order used for enumeration and for certificates.
class Partition {
public:
    Partition() = default;
    /// Sorts `parts`; throws InvalidInput if any part is < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int multiplicity(int part) const;
    int largest_part() const { return parts_.empty() ? 0 : parts_.back(); }

    /// Multiplicity vector v with v[i-1] = multiplicity of part i, of length
    /// largest_part().
    std::vector<int> exponents() const { return exponents(largest_part()); }
    std::vector<int> exponents(int ambient) const;

    /// Number of ordered compositions whose multiset of parts is this
    /// partition: length! / prod(multiplicity!).
    std::uint64_t composition_count() const;

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// Order used for wedge basis elements: by sum, then canonical order.
struct WedgeOrder {
    bool operator()(const Partition& a, const Partition& b) const
    {
        if (a.sum() != b.sum())
            return a.sum() < b.sum();
        return a < b;
    }
};

/// Sequence pi_1..pi_k (stored 0-based).
using PartitionSequence = std::vector<Partition>;

std::string to_string(const Partition& p);
std::string to_string(const PartitionSequence& seq);
/// Accepts "[1,2,2]", "[ ]" and "[]".
Partition parse_partition(std::string_view text);

/// All partitions of m in canonical order.
std::vector<Partition> enumerate_partitions(int m);
/// p(m), by the same enumeration but cached.
const std::vector<Partition>& partitions_of(int m);
std::uint64_t partition_count(int m);

/// Coordinate i-1 is the multiplicity of part i. Throws PartExceedsAmbient.
Exponent box(const Partition& tau, int ambient);
Partition partition_of_box(const Exponent& box);

/// Non-empty proper sub-multisets of the parts.
std::set<Partition> proper_subpartitions(const Partition& tau);

/// Closure under proper sub-partitions (the empty partition is ignored).
bool is_complete(std::span<const Partition> set);
/// Box criterion: the boxes of the set, together with the origin, are closed
/// under decrementing any positive coordinate.
bool boxes_form_staircase(std::span<const Partition> set);

bool is_toric(const PartitionSequence& seq);
bool is_admissible(const PartitionSequence& seq);
bool pairwise_distinct(const PartitionSequence& seq);

/// prod_{i=1..k} p(i).
std::uint64_t toric_sequence_count(int k);

/// Forward range over every toric sequence of length k, in odometer order
/// (last entry varies fastest, entries in canonical order).
class ToricSequences {
public:
    explicit ToricSequences(int k);

    class iterator {
    public:
        using value_type = PartitionSequence;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        const PartitionSequence& operator*() const { return current_; }
        const PartitionSequence* operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.digits_ == b.digits_); }

    private:
        friend class ToricSequences;
        explicit iterator(int k);
        std::vector<std::size_t> digits_;
        PartitionSequence current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(k_); }
    iterator end() const { return iterator(); }

private:
    int k_;
};

inline ToricSequences enumerate_toric_sequences(int k) { return ToricSequences(k); }

/// Depth-first enumeration of complete toric sequences; every prefix visited
/// is itself complete. The callback is invoked once per sequence of length k.
void for_each_complete_toric_sequence(int k, const std::function<void(const PartitionSequence&)>& visit);
std::vector<PartitionSequence> enumerate_complete_toric_sequences(int k);

}  // namespace curvcert
