#include "curvcert/textension.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "curvcert/errors.hpp"
#include "curvcert/polynomial.hpp"

namespace curvcert {

std::vector<Exponent> cuboid_boxes_rl(const std::vector<int>& dims)
{
    std::vector<Exponent> boxes{Exponent(dims.size(), 0)};
    for (std::size_t s = 0; s < dims.size(); ++s) {
        std::vector<Exponent> grown;
        for (const auto& b : boxes)
            for (int j = 0; j < dims[s]; ++j) {
                Exponent c = b;
                c[s] = j;
                grown.push_back(std::move(c));
            }
        boxes = std::move(grown);
    }
    std::sort(boxes.begin(), boxes.end(), RLLess{});
    return boxes;
}

Exponent relabel_box(const Exponent& source_box, const std::vector<int>& beta, int target_dim)
{
    Exponent out(static_cast<std::size_t>(target_dim), 0);
    for (std::size_t s = 0; s < source_box.size(); ++s)
        if (source_box[s] > 0)
            out.at(static_cast<std::size_t>(beta[s] - 1)) += source_box[s];
    return out;
}

TExtension t_extend(const Staircase& y)
{
    TExtension ext;
    ext.essential_axes = essential_axes(y);
    ext.source = compact(y);
    const auto r = static_cast<std::size_t>(ext.source.dim());

    ext.cuboid_dims.assign(r, 1);
    for (const auto& b : ext.source.boxes())
        for (std::size_t s = 0; s < r; ++s)
            ext.cuboid_dims[s] = std::max(ext.cuboid_dims[s], b[s] + 1);
    int place = 1;
    for (std::size_t s = 0; s < r; ++s) {
        ext.beta.push_back(place);
        place *= ext.cuboid_dims[s];
    }
    ext.K = place;
    ext.N = ext.K - 1;

    const std::vector<Exponent> cuboid = cuboid_boxes_rl(ext.cuboid_dims);
    for (std::size_t t = 0; t < cuboid.size(); ++t) {
        std::size_t mixed = 0;
        for (std::size_t s = 0; s < r; ++s)
            mixed += static_cast<std::size_t>(cuboid[t][s] * ext.beta[s]);
        if (mixed != t)
            throw Error("t_extend: cuboid RL-index disagrees with mixed-radix place value");
    }

    for (std::size_t t = 1; t < cuboid.size(); ++t) {
        const Exponent& c = cuboid[t];
        if (ext.source.contains(c)) {
            std::vector<int> parts;
            for (std::size_t s = 0; s < r; ++s)
                parts.insert(parts.end(), static_cast<std::size_t>(c[s]), ext.beta[s]);
            ext.pi_plus.emplace_back(std::move(parts));
        } else {
            ext.pi_plus.emplace_back(std::vector<int>{static_cast<int>(t)});
        }
    }
    if (!is_toric(ext.pi_plus))
        throw Error("t_extend: extended sequence is not toric");
    if (!is_complete(ext.pi_plus))
        throw Error("t_extend: extended partition set is not complete");

    std::vector<Exponent> target{Exponent(static_cast<std::size_t>(ext.N), 0)};
    for (const auto& p : ext.pi_plus)
        target.push_back(box(p, ext.N));
    ext.target = Staircase(ext.N, std::move(target));

    for (const auto& b : ext.source.boxes()) {
        std::size_t idx = 0;
        for (std::size_t s = 0; s < r; ++s)
            idx += static_cast<std::size_t>(b[s] * ext.beta[s]);
        ext.embedding.push_back(idx);
    }
    ext.mon_plus = minimal_generators(ext.target);
    return ext;
}

SocleExtensionCheck verify_socle_extension(const TExtension& ext)
{
    SocleExtensionCheck check;
    check.subalgebra = true;
    check.socle = true;
    const int big_n = ext.target.dim();
    const auto r = static_cast<std::size_t>(ext.source.dim());
    if (ext.beta.size() != r ||
        std::any_of(ext.beta.begin(), ext.beta.end(), [&](int b) { return b < 1 || b > big_n; })) {
        check.subalgebra = check.socle = false;
        check.failures.push_back("beta does not map source axes into target variables");
        return check;
    }

    std::set<Exponent> image;
    for (const auto& b : ext.source.boxes()) {
        Exponent img = relabel_box(b, ext.beta, big_n);
        if (!ext.target.contains(img)) {
            check.subalgebra = false;
            check.failures.push_back("source box " + format_monomial(b) + " is missing from the target");
        }
        image.insert(std::move(img));
    }
    if (image.size() != ext.source.colength()) {
        check.subalgebra = false;
        check.failures.push_back("relabelling identifies distinct source boxes");
    }

    // Products in the source: x + y stays a box exactly when its image does.
    for (const auto& x : ext.source.boxes())
        for (const auto& y : ext.source.boxes()) {
            Exponent sum = x;
            for (std::size_t s = 0; s < r; ++s)
                sum[s] += y[s];
            const bool in_source = ext.source.contains(sum);
            const bool in_target = ext.target.contains(relabel_box(sum, ext.beta, big_n));
            if (in_source != in_target) {
                check.subalgebra = false;
                check.failures.push_back("product " + format_monomial(x) + " * " + format_monomial(y) +
                                         (in_source ? " vanishes in the target" : " survives in the target"));
            }
        }

    for (const auto& b : ext.target.boxes()) {
        if (image.count(b) != 0)
            continue;
        if (degree(b) != 1) {
            check.socle = false;
            check.failures.push_back("adjoined box " + format_monomial(b) + " has degree " + std::to_string(degree(b)));
            continue;
        }
        Exponent c = b;
        for (std::size_t i = 0; i < c.size(); ++i) {
            ++c[i];
            if (ext.target.contains(c)) {
                check.socle = false;
                check.failures.push_back("adjoined box " + format_monomial(b) + " is not annihilated by x" +
                                         std::to_string(i + 1));
            }
            --c[i];
        }
    }
    return check;
}

Staircase quotient_q(const TExtension& ext)
{
    const SocleExtensionCheck check = verify_socle_extension(ext);
    if (!check.ok())
        throw SocleCheckFailed("quotient_q: " + (check.failures.empty() ? std::string("check failed") : check.failures.front()));

    std::vector<int> axis_of(static_cast<std::size_t>(ext.target.dim()), -1);
    for (std::size_t s = 0; s < ext.beta.size(); ++s)
        axis_of[static_cast<std::size_t>(ext.beta[s] - 1)] = static_cast<int>(s);

    std::vector<Exponent> kept;
    for (const auto& b : ext.target.boxes()) {
        Exponent q(ext.beta.size(), 0);
        bool surviving = true;
        for (std::size_t i = 0; i < b.size() && surviving; ++i) {
            if (b[i] == 0)
                continue;
            if (axis_of[i] < 0)
                surviving = false;
            else
                q[static_cast<std::size_t>(axis_of[i])] = b[i];
        }
        // Adjoined boxes use a variable outside the image of beta.
        if (surviving)
            kept.push_back(std::move(q));
    }
    std::optional<Staircase> out;
    try {
        out.emplace(static_cast<int>(ext.beta.size()), std::move(kept));
    } catch (const InvalidStaircase&) {
        throw SocleCheckFailed("quotient_q: remaining boxes do not form a staircase");
    }
    if (!(*out == ext.source))
        throw SocleCheckFailed("quotient_q: quotient differs from the source staircase");
    return *out;
}

}  // namespace curvcert
