#pragma once

// Univariate truncated power series: direct substitution of curves into
// polynomial maps, and the normal form of a curve jet under reparametrisation.

#include <vector>

#include "curvcert/exactmath.hpp"
#include "curvcert/jets.hpp"

namespace oracle {

using curvcert::Rational;
using curvcert::Vector;

/// Coefficients of z^0..z^k.
using Series = std::vector<Rational>;

inline Series series_mul(const Series& a, const Series& b)
{
    Series c(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < c.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

/// Component series of a curve jet, order k.
inline std::vector<Series> curve_series(const curvcert::CurveJet& gamma)
{
    const auto k = static_cast<std::size_t>(gamma.order());
    std::vector<Series> out(static_cast<std::size_t>(gamma.dim()), Series(k + 1, Rational(0)));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t c = 0; c < out.size(); ++c)
            out[c][i] = gamma.v(static_cast<int>(i))[c];
    return out;
}

/// psi(curve(z)) truncated at the series length, one series per output.
inline std::vector<Series> substitute(const curvcert::MapJet& psi, const std::vector<Series>& curve)
{
    const std::size_t len = curve.front().size();
    std::vector<Series> out(static_cast<std::size_t>(psi.target_dim()), Series(len, Rational(0)));
    for (const auto& [mu, coeff] : psi.coefficients()) {
        Series term(len, Rational(0));
        term[0] = 1;
        for (std::size_t j = 0; j < mu.size(); ++j)
            for (int e = 0; e < mu[j]; ++e)
                term = series_mul(term, curve[j]);
        for (std::size_t c = 0; c < out.size(); ++c)
            for (std::size_t i = 0; i < len; ++i)
                out[c][i] += coeff[c] * term[i];
    }
    return out;
}

/// True iff every output series vanishes in degrees 1..up_to.
inline bool vanishes_to_order(const std::vector<Series>& s, int up_to)
{
    for (const auto& comp : s)
        for (int i = 1; i <= up_to; ++i)
            if (comp[static_cast<std::size_t>(i)] != 0)
                return false;
    return true;
}

/// Compositional inverse h of g (g_0 = 0, g_1 != 0): g(h(w)) = w + O(w^{k+1}).
inline Series series_inverse(const Series& g)
{
    const std::size_t len = g.size();
    Series h(len, Rational(0));
    h[1] = 1 / g[1];
    for (std::size_t m = 2; m < len; ++m) {
        // Coefficient of w^m in g(h(w)) with h_m still zero.
        Series power = h, composed(len, Rational(0));
        for (std::size_t d = 1; d < len; ++d) {
            for (std::size_t i = 0; i < len; ++i)
                composed[i] += g[d] * power[i];
            power = series_mul(power, h);
        }
        h[m] = -composed[m] / g[1];
    }
    return h;
}

/// Substitutes h into each component series.
inline std::vector<Series> series_compose(const std::vector<Series>& curve, const Series& h)
{
    const std::size_t len = h.size();
    std::vector<Series> out;
    for (const auto& comp : curve) {
        Series acc(len, Rational(0)), power = h;
        for (std::size_t d = 1; d < len; ++d) {
            for (std::size_t i = 0; i < len; ++i)
                acc[i] += comp[d] * power[i];
            power = series_mul(power, h);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

/// Representative of the Diff_k(1)-orbit: reparametrise so that the first
/// coordinate with non-zero tangent becomes exactly z.
inline std::vector<Series> reparam_normal_form(const curvcert::CurveJet& gamma)
{
    const std::vector<Series> s = curve_series(gamma);
    std::size_t pivot = 0;
    while (s[pivot][1] == 0)
        ++pivot;
    return series_compose(s, series_inverse(s[pivot]));
}

}  // namespace oracle
