#pragma once

// Single-field mutations of a valid certificate. Each mutation says whether
// it changes the certified content; witness perturbations are classified by
// re-substituting the level inequalities from scratch.

#include <string>
#include <vector>

#include "curvcert/certify.hpp"
#include "support/random.hpp"

namespace testing_support {

struct Mutation {
    curvcert::CurvilinearCertificate cert;
    std::string kind;
    bool semantic = true;
};

namespace detail {

inline void partitions_of(int m, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(m - p, p, cur, out);
        cur.pop_back();
    }
}

/// Every level of pi strictly beats every other partition of the same sum.
inline bool level_rows_hold(const curvcert::PartitionSequence& pi, const curvcert::Vector& alpha)
{
    if (alpha.size() != pi.size())
        return false;
    auto weight = [&](const std::vector<int>& parts) {
        Rational w = 0;
        for (int p : parts)
            w += alpha[static_cast<std::size_t>(p - 1)];
        return w;
    };
    for (std::size_t l = 0; l < pi.size(); ++l) {
        const Rational mine = weight(pi[l].parts());
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        partitions_of(static_cast<int>(l + 1), static_cast<int>(l + 1), cur, all);
        for (auto tau : all) {
            std::sort(tau.begin(), tau.end());
            if (tau != pi[l].parts() && !(mine > weight(tau)))
                return false;
        }
    }
    return true;
}

inline curvcert::Staircase add_box(const curvcert::Staircase& y, const curvcert::Exponent& b)
{
    std::vector<curvcert::Exponent> boxes = y.boxes();
    boxes.push_back(b);
    return curvcert::Staircase(y.dim(), boxes);
}

inline curvcert::Staircase remove_box(const curvcert::Staircase& y, const curvcert::Exponent& b)
{
    std::vector<curvcert::Exponent> boxes;
    for (const auto& x : y.boxes())
        if (x != b)
            boxes.push_back(x);
    return curvcert::Staircase(y.dim(), boxes);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(v.size()) - 1))];
}

inline std::size_t index(Rng& rng, std::size_t size)
{
    return static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(size) - 1));
}

}  // namespace detail

inline constexpr int kMutationKinds = 24;

/// Applies mutation number `kind` (0 <= kind < kMutationKinds). Returns false
/// when the kind does not apply to this certificate.
inline bool apply_mutation(const curvcert::CurvilinearCertificate& base, int kind, Rng& rng, Mutation& out)
{
    using namespace curvcert;
    out.cert = base;
    out.semantic = true;
    auto& c = out.cert;
    auto& ext = c.extension;
    switch (kind) {
    case 0:
        out.kind = "n";
        c.n += 1;
        return true;
    case 1: {
        out.kind = "generator-exponent";
        Exponent& g = c.generators[detail::index(rng, c.generators.size())];
        const std::size_t i = detail::index(rng, g.size());
        if (g[i] > 0 && uniform_int(rng, 0, 1) == 0 && degree(g) > 1)
            --g[i];
        else
            ++g[i];
        return true;
    }
    case 2:
        out.kind = "generator-drop";
        c.generators.erase(c.generators.begin() + static_cast<long>(detail::index(rng, c.generators.size())));
        return true;
    case 3: {
        out.kind = "staircase-remove-box";
        std::vector<Exponent> candidates;
        for (const auto& b : socle(c.staircase))
            if (degree(b) > 0)
                candidates.push_back(b);
        if (candidates.empty())
            return false;
        c.staircase = detail::remove_box(c.staircase, detail::pick(rng, candidates));
        return true;
    }
    case 4: {
        out.kind = "staircase-add-box";
        const auto gens = minimal_generators(c.staircase);
        if (gens.empty())
            return false;
        c.staircase = detail::add_box(c.staircase, detail::pick(rng, gens));
        return true;
    }
    case 5: {
        out.kind = "rl-swap";
        if (c.rl.size() < 2)
            return false;
        const std::size_t i = detail::index(rng, c.rl.size() - 1);
        std::swap(c.rl[i], c.rl[i + 1]);
        return true;
    }
    case 6: {
        out.kind = "rl-replace";
        if (c.rl.empty())
            return false;
        Partition& p = c.rl[detail::index(rng, c.rl.size())];
        std::vector<int> parts = p.parts();
        parts.push_back(1);
        p = Partition(parts);
        return true;
    }
    case 7: {
        out.kind = "beta";
        if (ext.beta.empty())
            return false;
        ext.beta[detail::index(rng, ext.beta.size())] += uniform_int(rng, 0, 1) == 0 ? 1 : -1;
        return true;
    }
    case 8:
        out.kind = "N";
        ext.N += uniform_int(rng, 0, 1) == 0 ? 1 : -1;
        return true;
    case 9:
        out.kind = "K";
        ext.K += uniform_int(rng, 0, 1) == 0 ? 1 : -1;
        return true;
    case 10: {
        out.kind = "pi-plus-entry";
        if (ext.pi_plus.size() < 2)
            return false;
        const std::size_t t = 1 + detail::index(rng, ext.pi_plus.size() - 1);
        const int sum = static_cast<int>(t + 1);
        const Partition single({sum});
        ext.pi_plus[t] = ext.pi_plus[t] == single ? Partition({1, sum - 1}) : single;
        return true;
    }
    case 11: {
        out.kind = "target-add-box";
        const auto gens = minimal_generators(ext.target);
        if (gens.empty())
            return false;
        ext.target = detail::add_box(ext.target, detail::pick(rng, gens));
        return true;
    }
    case 12: {
        out.kind = "embedding";
        if (ext.embedding.size() < 2)
            return false;
        ext.embedding[1 + detail::index(rng, ext.embedding.size() - 1)] += 1;
        return true;
    }
    case 13:
        out.kind = "mon-plus-drop";
        if (ext.mon_plus.empty())
            return false;
        ext.mon_plus.erase(ext.mon_plus.begin() + static_cast<long>(detail::index(rng, ext.mon_plus.size())));
        return true;
    case 14:
        out.kind = "cuboid-dims";
        if (ext.cuboid_dims.empty())
            return false;
        ext.cuboid_dims[detail::index(rng, ext.cuboid_dims.size())] += 1;
        return true;
    case 15:
        out.kind = "essential-axes";
        if (ext.essential_axes.empty())
            return false;
        ext.essential_axes.back() += 1;
        return true;
    case 16:
        out.kind = "check-failed";
        c.checks[detail::index(rng, c.checks.size())].passed = false;
        return true;
    case 17: {
        out.kind = "check-renamed";
        auto& check = c.checks[detail::index(rng, c.checks.size())];
        check.name += "-x";
        return true;
    }
    case 18:
        out.kind = "inference-licence";
        c.inferences[detail::index(rng, c.inferences.size())].licence = "unlicensed";
        return true;
    case 19:
        out.kind = "conclusion";
        c.conclusion = false;
        return true;
    case 20: {
        out.kind = "weights-drop";
        if (c.weights.values.empty())
            return false;
        c.weights.values.pop_back();
        return true;
    }
    case 21: {
        out.kind = "weights-rescale";
        if (c.weights.values.empty())
            return false;
        const Rational s(uniform_int(rng, 1, 9), uniform_int(rng, 1, 9));
        for (auto& x : c.weights.values)
            x *= s;
        out.semantic = false;
        return true;
    }
    case 22: {
        out.kind = "weights-perturb";
        if (c.weights.values.empty())
            return false;
        Rational delta = 0;
        while (delta == 0)
            delta = random_rational(rng, 6);
        c.weights.values[detail::index(rng, c.weights.values.size())] += delta;
        out.semantic = !detail::level_rows_hold(ext.pi_plus, c.weights.values);
        return true;
    }
    case 23:
        out.kind = "check-detail";
        c.checks[detail::index(rng, c.checks.size())].detail = "annotated";
        out.semantic = false;
        return true;
    default:
        return false;
    }
}

}  // namespace testing_support
