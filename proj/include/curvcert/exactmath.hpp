#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace curvcert {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;  // always canonical, den > 0
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// "num/den" text form used in certificates; integers still carry "/1".
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Rational dot(const Vector& a, const Vector& b);
Vector mat_vec(const Matrix& a, const Vector& x);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_zero(const Vector& v);

/// Rank by exact Gauss-Jordan elimination.
std::size_t rank(Matrix a);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a);

struct SolutionSpace {
    Vector particular;
    std::vector<Vector> kernel;
};

/// Every solution of a*x = rhs, or nullopt when the system is inconsistent.
std::optional<SolutionSpace> solve_linear(const Matrix& a, const Vector& rhs);

/// Homogeneous strict inequalities <row, alpha> > 0, optionally with some
/// variables restricted to be non-negative.
class LinearSystem {
public:
    LinearSystem(std::size_t num_vars, std::vector<Vector> strict_rows,
                 std::vector<std::size_t> nonneg_vars = {});

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Vector>& strict_rows() const { return rows_; }
    const std::vector<std::size_t>& nonneg_vars() const { return nonneg_; }

    /// Exact substitution check of every constraint.
    bool satisfied_by(const Vector& alpha) const;

private:
    std::size_t num_vars_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> nonneg_;
};

/// Decides strict feasibility via the scale-invariant relaxation
/// <row, alpha> >= 1. Returns a witness that has been re-checked by
/// substitution, or nullopt when the system is infeasible.
///
/// The relaxation is solved by row generation: a phase-one simplex with
/// Bland's rule runs on a growing subset of rows until the candidate point
/// satisfies every row. Infeasibility of a subset proves infeasibility of the
/// whole system, so the verdict is exact.
std::optional<Vector> strict_feasible(const LinearSystem& system);

}  // namespace curvcert
