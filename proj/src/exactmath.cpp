#include "curvcert/exactmath.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "curvcert/errors.hpp"

namespace curvcert {

std::string to_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        return Integer(std::string(s));
    };
    const auto first = text.find_first_not_of(" \t");
    text = first == std::string_view::npos ? std::string_view() : text.substr(first, text.find_last_not_of(" \t") - first + 1);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer d = to_int(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(to_int(num), d);
}

Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

Vector mat_vec(const Matrix& a, const Vector& x)
{
    Vector out;
    out.reserve(a.size());
    for (const auto& row : a)
        out.push_back(dot(row, x));
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b.front().size() : 0;
    Matrix out(a.size(), Vector(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner)
            throw DimensionMismatch("mat_mul: inner dimension mismatch");
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::vector<std::size_t> row_reduce(Matrix& a)
{
    std::vector<std::size_t> pivots;
    if (a.empty())
        return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (a[r][j] != 0)
                    a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix a)
{
    return row_reduce(a).size();
}

std::optional<SolutionSpace> solve_linear(const Matrix& a, const Vector& rhs)
{
    if (a.empty())
        throw InvalidInput("solve_linear: empty matrix");
    if (rhs.size() != a.size())
        throw DimensionMismatch("solve_linear: rhs length differs from row count");
    const std::size_t n = a.front().size();
    Matrix aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != n)
            throw DimensionMismatch("solve_linear: ragged matrix");
        Vector row = a[i];
        row.push_back(rhs[i]);
        aug.push_back(std::move(row));
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == n)
        return std::nullopt;

    SolutionSpace out;
    out.particular.assign(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        out.particular[pivots[r]] = aug[r][n];
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector k(n, Rational(0));
        k[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k[pivots[r]] = -aug[r][f];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

LinearSystem::LinearSystem(std::size_t num_vars, std::vector<Vector> strict_rows,
                           std::vector<std::size_t> nonneg_vars)
    : num_vars_(num_vars), rows_(std::move(strict_rows)), nonneg_(std::move(nonneg_vars))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != num_vars_)
            throw DimensionMismatch("LinearSystem: row " + std::to_string(i) + " has wrong length");
        if (is_zero(rows_[i]))
            throw InvalidInput("LinearSystem: row " + std::to_string(i) + " is zero");
    }
    std::sort(nonneg_.begin(), nonneg_.end());
    nonneg_.erase(std::unique(nonneg_.begin(), nonneg_.end()), nonneg_.end());
    if (!nonneg_.empty() && nonneg_.back() >= num_vars_)
        throw IndexOutOfRange("LinearSystem: non-negative variable index out of range");
}

bool LinearSystem::satisfied_by(const Vector& alpha) const
{
    if (alpha.size() != num_vars_)
        return false;
    for (auto j : nonneg_)
        if (alpha[j] < 0)
            return false;
    return std::all_of(rows_.begin(), rows_.end(), [&](const Vector& row) { return dot(row, alpha) > 0; });
}

namespace {

using IntRow = std::vector<Integer>;

// Positive rescaling of a rational row to a primitive integer row.
IntRow primitive_row(const Vector& row)
{
    Integer l = 1;
    for (const auto& q : row)
        l = boost::multiprecision::lcm(l, Integer(denominator(q)));
    IntRow out;
    out.reserve(row.size());
    Integer g = 0;
    for (const auto& q : row) {
        out.push_back(Integer(numerator(q)) * (l / denominator(q)));
        g = boost::multiprecision::gcd(g, out.back());
    }
    if (g > 1)
        for (auto& v : out)
            v /= g;
    return out;
}

// Phase-one simplex for {row . x >= 1 : row in rows} with the variables in
// `nonneg` restricted to x >= 0 and all others free. Bland's rule throughout.
std::optional<Vector> phase_one(const std::vector<const IntRow*>& rows, std::size_t n,
                                const std::vector<bool>& nonneg)
{
    const std::size_t m = rows.size();
    // Column layout: structural columns, then one surplus per row, then one
    // artificial per row, then the right-hand side.
    std::vector<std::pair<std::size_t, int>> structural;  // (variable, sign)
    for (std::size_t j = 0; j < n; ++j) {
        structural.emplace_back(j, +1);
        if (!nonneg[j])
            structural.emplace_back(j, -1);
    }
    const std::size_t ns = structural.size();
    const std::size_t art0 = ns + m;
    const std::size_t cols = ns + 2 * m;
    Matrix t(m, Vector(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < ns; ++c) {
            const auto& [var, sign] = structural[c];
            t[i][c] = sign > 0 ? Rational((*rows[i])[var]) : Rational(-(*rows[i])[var]);
        }
        t[i][ns + i] = -1;
        t[i][art0 + i] = 1;
        t[i][cols] = 1;
        basis[i] = art0 + i;
    }
    // Objective row holds minus the reduced costs of "minimise the sum of the
    // artificials"; the last entry is the current objective value.
    Vector obj(cols + 1);
    for (std::size_t c = 0; c < art0; ++c)
        for (std::size_t i = 0; i < m; ++i)
            obj[c] += t[i][c];
    obj[cols] = Rational(m);

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (obj[c] > 0) {
                enter = c;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        // The objective is bounded below by zero, so an improving column
        // always has a positive entry.
        if (leave == m)
            throw Error("phase_one: unbounded phase-one objective");

        Vector& prow = t[leave];
        const Rational inv = 1 / prow[enter];
        std::vector<std::size_t> nz;
        for (std::size_t c = 0; c <= cols; ++c) {
            if (prow[c] != 0) {
                prow[c] *= inv;
                nz.push_back(c);
            }
        }
        auto eliminate = [&](Vector& row) {
            if (row[enter] == 0)
                return;
            const Rational f = row[enter];
            for (auto c : nz)
                row[c] -= f * prow[c];
        };
        for (std::size_t i = 0; i < m; ++i)
            if (i != leave)
                eliminate(t[i]);
        eliminate(obj);
        basis[leave] = enter;
    }
    if (obj[cols] != 0)
        return std::nullopt;

    Vector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= ns)
            continue;
        const auto& [var, sign] = structural[basis[i]];
        if (sign > 0)
            x[var] += t[i][cols];
        else
            x[var] -= t[i][cols];
    }
    return x;
}

}  // namespace

std::optional<Vector> strict_feasible(const LinearSystem& system)
{
    const std::size_t n = system.num_vars();
    const auto& rows = system.strict_rows();
    std::vector<IntRow> irows;
    irows.reserve(rows.size());
    for (const auto& r : rows)
        irows.push_back(primitive_row(r));
    std::vector<bool> nonneg(n, false);
    for (auto j : system.nonneg_vars())
        nonneg[j] = true;

    const std::size_t batch = std::max<std::size_t>(n + 1, 4);
    std::vector<bool> active(rows.size(), false);
    std::vector<const IntRow*> subset;
    Vector alpha(n, Rational(0));

    for (;;) {
        // Evaluate every row at alpha = a / d with a common denominator.
        Integer d = 1;
        for (const auto& q : alpha)
            d = boost::multiprecision::lcm(d, Integer(denominator(q)));
        IntRow a;
        a.reserve(n);
        for (const auto& q : alpha)
            a.push_back(Integer(numerator(q)) * (d / denominator(q)));

        std::vector<std::pair<Integer, std::size_t>> violated;
        for (std::size_t i = 0; i < irows.size(); ++i) {
            Integer v = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (irows[i][j] != 0 && a[j] != 0)
                    v += irows[i][j] * a[j];
            if (v < d)
                violated.emplace_back(std::move(v), i);
        }
        if (violated.empty())
            break;
        const std::size_t take = std::min(batch, violated.size());
        std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(take), violated.end());
        for (std::size_t t = 0; t < take; ++t) {
            const std::size_t i = violated[t].second;
            // Rows already in the subset hold with value >= 1 at alpha.
            if (active[i])
                throw Error("strict_feasible: active row violated");
            active[i] = true;
            subset.push_back(&irows[i]);
        }
        auto next = phase_one(subset, n, nonneg);
        if (!next)
            return std::nullopt;
        alpha = std::move(*next);
    }
    if (!system.satisfied_by(alpha))
        throw Error("strict_feasible: witness failed exact re-check");
    return alpha;
}

}  // namespace curvcert
