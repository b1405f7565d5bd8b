#include "curvcert/weights.hpp"

#include <algorithm>

#include "curvcert/errors.hpp"

namespace curvcert {

std::vector<int> partition_vector(const Partition& tau, int k)
{
    std::vector<int> v(static_cast<std::size_t>(k), 0);
    for (int part : tau.parts()) {
        if (part > k)
            throw IndexOutOfRange("partition_vector: part exceeds k");
        ++v[static_cast<std::size_t>(part - 1)];
    }
    return v;
}

LinearSystem LevelSystem::linear_system() const
{
    std::vector<Vector> strict;
    strict.reserve(rows.size());
    for (const auto& row : rows)
        strict.emplace_back(row.coeffs.begin(), row.coeffs.end());
    return LinearSystem(target.size(), std::move(strict));
}

LevelSystem level_system(const PartitionSequence& pi)
{
    if (!is_toric(pi))
        throw NotToric("level_system: sequence is not toric");
    const int k = static_cast<int>(pi.size());
    LevelSystem sys;
    sys.target = pi;
    for (int l = 1; l <= k; ++l) {
        const Partition& own = pi[static_cast<std::size_t>(l - 1)];
        const std::vector<int> v_own = partition_vector(own, k);
        for (const auto& tau : partitions_of(l)) {
            if (tau == own)
                continue;
            LevelRow row{l, tau, v_own};
            const std::vector<int> v_tau = partition_vector(tau, k);
            for (std::size_t i = 0; i < row.coeffs.size(); ++i)
                row.coeffs[i] -= v_tau[i];
            sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

std::optional<WeightVector> weight_certificate(const PartitionSequence& pi)
{
    const LevelSystem sys = level_system(pi);
    if (sys.rows.empty())
        return WeightVector{Vector(pi.size(), Rational(1)), "level-system-lp"};
    auto alpha = strict_feasible(sys.linear_system());
    if (!alpha)
        return std::nullopt;
    return WeightVector{std::move(*alpha), "level-system-lp"};
}

namespace {

Rational row_value(const LevelRow& row, const Vector& alpha)
{
    Rational v = 0;
    for (std::size_t i = 0; i < row.coeffs.size() && i < alpha.size(); ++i)
        if (row.coeffs[i] != 0)
            v += row.coeffs[i] * alpha[i];
    return v;
}

/// LP on the rows of levels 1..l restricted to alpha_1..alpha_l.
std::optional<Vector> solve_prefix(const LevelSystem& sys, int l)
{
    std::vector<Vector> strict;
    for (const auto& row : sys.rows)
        if (row.level <= l)
            strict.emplace_back(row.coeffs.begin(), row.coeffs.begin() + l);
    if (strict.empty())
        return Vector(static_cast<std::size_t>(l), Rational(1));
    return strict_feasible(LinearSystem(static_cast<std::size_t>(l), std::move(strict)));
}

}  // namespace

std::optional<WeightVector> incremental_weight_certificate(const PartitionSequence& pi)
{
    const LevelSystem sys = level_system(pi);
    const int k = static_cast<int>(pi.size());
    Vector alpha;
    bool resolved = false;
    for (int l = 1; l <= k; ++l) {
        const Partition& own = pi[static_cast<std::size_t>(l - 1)];
        const auto idx = static_cast<std::size_t>(l - 1);
        alpha.push_back(0);
        // Only rows against [l], or all rows when pi_l = [l], involve alpha_l.
        std::optional<Rational> lower, upper;
        bool blocked = false;
        for (const auto& row : sys.rows) {
            if (row.level != l)
                continue;
            const int c = row.coeffs[idx];
            const Rational rest = row_value(row, alpha);
            if (c == 0) {
                blocked = blocked || rest <= 0;
            } else if (c > 0) {
                const Rational bound = -rest / c;
                if (!lower || bound > *lower)
                    lower = bound;
            } else {
                const Rational bound = -rest / c;
                if (!upper || bound < *upper)
                    upper = bound;
            }
        }
        if (lower && upper && *lower >= *upper)
            blocked = true;
        if (!blocked) {
            if (lower && upper)
                alpha[idx] = (*lower + *upper) / 2;
            else if (lower)
                alpha[idx] = *lower + 1;
            else if (upper)
                alpha[idx] = *upper - 1;
            else
                alpha[idx] = own == Partition({l}) ? 1 : 0;
            continue;
        }
        auto prefix = solve_prefix(sys, l);
        if (!prefix)
            return std::nullopt;
        alpha = std::move(*prefix);
        resolved = true;
    }
    if (!violated_rows(sys, alpha).empty())
        throw Error("incremental_weight_certificate: witness fails re-substitution");
    return WeightVector{std::move(alpha), resolved ? "level-by-level-with-prefix-lp" : "level-by-level"};
}

std::vector<std::size_t> violated_rows(const LevelSystem& sys, const Vector& alpha)
{
    std::vector<std::size_t> bad;
    for (std::size_t r = 0; r < sys.rows.size(); ++r)
        if (sys.rows[r].coeffs.size() != alpha.size() || row_value(sys.rows[r], alpha) <= 0)
            bad.push_back(r);
    return bad;
}

bool verify_weights(const PartitionSequence& pi, const Vector& alpha, int limit_cap)
{
    if (alpha.size() != pi.size() || !is_toric(pi))
        return false;
    if (!violated_rows(level_system(pi), alpha).empty())
        return false;
    const int k = static_cast<int>(pi.size());
    if (k >= 1 && k <= limit_cap) {
        const TorusLimit lim = torus_limit(k, alpha, limit_cap);
        if (!lim.limit || *lim.limit != pi)
            return false;
    }
    return true;
}

std::vector<int> exponent_vector(const PartitionSequence& pi)
{
    if (!is_toric(pi))
        throw NotToric("exponent_vector: sequence is not toric");
    const int k = static_cast<int>(pi.size());
    std::vector<int> v(static_cast<std::size_t>(k), 0);
    for (const auto& tau : pi) {
        const std::vector<int> t = partition_vector(tau, k);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += t[i];
    }
    return v;
}

}  // namespace curvcert
