#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvcert/exactmath.hpp"
#include "curvcert/partitions.hpp"
#include "curvcert/testcurve.hpp"

namespace curvcert {

/// Strict inequality <coeffs, alpha> > 0 saying that pi_level beats the
/// competitor partition of the same sum.
struct LevelRow {
    int level = 0;
    Partition competitor;
    std::vector<int> coeffs;  // v_{pi_level} - v_competitor, length k
};

/// For every level l and every tau |- l other than pi_l, one row; rows are
/// ordered by level, then by canonical order of tau. Row l only involves
/// alpha_1..alpha_l.
struct LevelSystem {
    PartitionSequence target;
    std::vector<LevelRow> rows;

    LinearSystem linear_system() const;
};

/// Throws NotToric.
LevelSystem level_system(const PartitionSequence& pi);

/// v_tau in Z^k: multiplicity of each part index.
std::vector<int> partition_vector(const Partition& tau, int k);

struct WeightVector {
    Vector values;
    std::string provenance;
};

/// Solves the whole level system at once. nullopt exactly when the system is
/// infeasible, which for toric pi happens exactly when pi is not complete.
/// Throws NotToric.
std::optional<WeightVector> weight_certificate(const PartitionSequence& pi);

/// Builds alpha one level at a time: alpha_l is chosen against the fixed
/// prefix, and the prefix is re-solved only when a fixed value blocks level l.
std::optional<WeightVector> incremental_weight_certificate(const PartitionSequence& pi);

/// Indices of rows of `sys` that alpha does not satisfy strictly.
std::vector<std::size_t> violated_rows(const LevelSystem& sys, const Vector& alpha);

/// Exact re-substitution into every level row, no solver involved. When
/// k <= limit_cap the brute-force torus limit must also equal pi.
bool verify_weights(const PartitionSequence& pi, const Vector& alpha, int limit_cap = kDefaultLimitCap);

/// Total multiplicity of each part index across the sequence. Throws NotToric.
std::vector<int> exponent_vector(const PartitionSequence& pi);

}  // namespace curvcert
