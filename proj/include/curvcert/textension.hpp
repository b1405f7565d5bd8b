#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "curvcert/partitions.hpp"
#include "curvcert/staircase.hpp"

namespace curvcert {

/// Embedding of a staircase into its minimal cuboid, relabelled so that the
/// cuboid's RL order becomes a toric sequence.
///
/// With r essential axes, R_s = 1 + max coordinate s, K = prod R_s,
/// N = K - 1 and beta_s = prod_{s' < s} R_s'. The cuboid box (j_1..j_r) has
/// RL-index sum_s j_s beta_s. For 1 <= t < K the box of index t gives
/// pi_plus[t-1]: the source partition with part s replaced by beta_s when the
/// box lies in the source, [t] otherwise.
struct TExtension {
    Staircase source{0, {Exponent{}}};  // compacted to the essential axes
    std::vector<int> essential_axes;    // original 0-based axes, increasing
    std::vector<int> cuboid_dims;       // R_s
    std::vector<int> beta;              // beta_s, 1-based target variable of axis s
    PartitionSequence pi_plus;          // length K - 1
    Staircase target{0, {Exponent{}}};  // in N^N
    std::vector<std::size_t> embedding; // cuboid RL-index of each source box, source RL order
    int N = 0;
    int K = 1;
    std::vector<Exponent> mon_plus;     // minimal generators of target
};

/// Throws Error if an internal postcondition (toricity, completeness,
/// mixed-radix indexing) fails; valid input never triggers this.
TExtension t_extend(const Staircase& y);

/// Cuboid RL-index of every box of the cuboid with the given side lengths,
/// by explicit sort; used to cross-check the mixed-radix formula.
std::vector<Exponent> cuboid_boxes_rl(const std::vector<int>& dims);

/// Image of a compacted source box in N^N: coordinate s moves to beta_s.
Exponent relabel_box(const Exponent& source_box, const std::vector<int>& beta, int target_dim);

struct SocleExtensionCheck {
    bool subalgebra = false;  // source products land in the image or vanish
    bool socle = false;       // every adjoined box is a degree-one socle box
    std::vector<std::string> failures;
    bool ok() const { return subalgebra && socle; }
};

SocleExtensionCheck verify_socle_extension(const TExtension& ext);

/// Removes the adjoined socle boxes from the target and maps x_{beta_s} back
/// to x_s. Uses only target and beta. Throws SocleCheckFailed when the
/// socle-extension check fails or the result differs from the source.
Staircase quotient_q(const TExtension& ext);

}  // namespace curvcert
