#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "curvcert/partitions.hpp"

namespace curvcert {

/// Reverse lexicographic order: compare at the largest differing coordinate.
struct RLLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Finite order ideal in N^n, i.e. the complement of a monomial ideal of
/// finite colength. Boxes are held in increasing RL order; the origin is
/// always first.
class Staircase {
public:
    /// Throws InvalidStaircase unless the boxes are distinct, of length n,
    /// non-negative, contain the origin and are closed under decrementing.
    Staircase(int dim, std::vector<Exponent> boxes);

    int dim() const { return dim_; }
    std::size_t colength() const { return boxes_.size(); }
    const std::vector<Exponent>& boxes() const { return boxes_; }
    bool contains(const Exponent& b) const;

    friend bool operator==(const Staircase& a, const Staircase& b) = default;

private:
    int dim_;
    std::vector<Exponent> boxes_;
};

/// True when the boxes contain the origin and are decrement-closed.
bool is_order_ideal(int dim, const std::vector<Exponent>& boxes);

/// Complement of the monomial ideal generated by `gens`. Throws
/// InfiniteColength when an axis carries no pure power, InvalidInput for the
/// unit ideal or for exponents of the wrong length.
Staircase from_generators(const std::vector<Exponent>& gens, int n);

/// Minimal exponents of N^n outside the staircase, in increasing RL order.
std::vector<Exponent> minimal_generators(const Staircase& y);

/// Non-origin boxes in increasing RL order, as partitions.
PartitionSequence rl_sequence(const Staircase& y);

/// Boxes b with b + e_i outside the staircase for every i, in RL order.
std::vector<Exponent> socle(const Staircase& y);

/// Axes s (0-based, increasing) whose unit box e_s lies in the staircase.
std::vector<int> essential_axes(const Staircase& y);
/// The staircase restricted to its essential axes; other coordinates are 0.
Staircase compact(const Staircase& y);

inline constexpr int kDefaultEnumerationBudget = 64;

/// Visits every order ideal of size k in N^n exactly once, each built by
/// appending boxes in increasing RL order. Throws BudgetExceeded when
/// n * k > budget.
void for_each_staircase(int n, int k, const std::function<void(const Staircase&)>& visit,
                        int budget = kDefaultEnumerationBudget);
std::vector<Staircase> enumerate_staircases(int n, int k, int budget = kDefaultEnumerationBudget);

/// Generator grammar: "x1^4, x1^3*x2, x2^5"; variables are 1-based and "1"
/// denotes the empty product. Throws ParseError or IndexOutOfRange.
std::vector<Exponent> parse_monomials(std::string_view text, int n);
std::string format_monomial(const Exponent& e);
std::string format_monomials(const std::vector<Exponent>& gens);

}  // namespace curvcert
