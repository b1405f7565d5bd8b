#include "curvcert/staircase.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "curvcert/errors.hpp"

namespace curvcert {

bool RLLess::operator()(const Exponent& a, const Exponent& b) const
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return a.size() < b.size();
}

namespace {

bool divides(const Exponent& g, const Exponent& b)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > b[i])
            return false;
    return true;
}

bool in_ideal(const std::vector<Exponent>& gens, const Exponent& b)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) { return divides(g, b); });
}

bool sorted_contains(const std::vector<Exponent>& sorted, const Exponent& b)
{
    return std::binary_search(sorted.begin(), sorted.end(), b, RLLess{});
}

}  // namespace

bool is_order_ideal(int dim, const std::vector<Exponent>& boxes)
{
    std::vector<Exponent> sorted = boxes;
    std::sort(sorted.begin(), sorted.end(), RLLess{});
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    if (!sorted_contains(sorted, Exponent(static_cast<std::size_t>(dim), 0)))
        return false;
    for (const auto& b : sorted) {
        if (b.size() != static_cast<std::size_t>(dim))
            return false;
        Exponent d = b;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 0)
                return false;
            if (d[i] == 0)
                continue;
            --d[i];
            if (!sorted_contains(sorted, d))
                return false;
            ++d[i];
        }
    }
    return true;
}

Staircase::Staircase(int dim, std::vector<Exponent> boxes) : dim_(dim), boxes_(std::move(boxes))
{
    if (dim_ < 0)
        throw InvalidStaircase("Staircase: negative dimension");
    if (!is_order_ideal(dim_, boxes_))
        throw InvalidStaircase("Staircase: boxes do not form a finite order ideal");
    std::sort(boxes_.begin(), boxes_.end(), RLLess{});
}

bool Staircase::contains(const Exponent& b) const
{
    return b.size() == static_cast<std::size_t>(dim_) && sorted_contains(boxes_, b);
}

Staircase from_generators(const std::vector<Exponent>& gens, int n)
{
    if (n < 1)
        throw InvalidInput("from_generators: n must be positive");
    for (const auto& g : gens) {
        if (g.size() != static_cast<std::size_t>(n))
            throw DimensionMismatch("from_generators: generator has wrong number of variables");
        if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
            throw InvalidInput("from_generators: negative exponent");
        if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }))
            throw InvalidInput("from_generators: the unit ideal has empty staircase");
    }
    for (int axis = 0; axis < n; ++axis) {
        const bool pure = std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) {
            for (int i = 0; i < n; ++i)
                if (i != axis && g[static_cast<std::size_t>(i)] != 0)
                    return false;
            return true;
        });
        if (!pure)
            throw InfiniteColength("from_generators: no pure power of x" + std::to_string(axis + 1));
    }
    std::set<Exponent> seen;
    std::deque<Exponent> queue{Exponent(static_cast<std::size_t>(n), 0)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        Exponent b = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < b.size(); ++i) {
            ++b[i];
            if (!in_ideal(gens, b) && seen.insert(b).second)
                queue.push_back(b);
            --b[i];
        }
    }
    return Staircase(n, std::vector<Exponent>(seen.begin(), seen.end()));
}

std::vector<Exponent> minimal_generators(const Staircase& y)
{
    // Every minimal generator is a box plus a unit vector whose
    // decrements all lie in the staircase.
    std::set<Exponent> out;
    for (const auto& b : y.boxes()) {
        Exponent c = b;
        for (std::size_t i = 0; i < c.size(); ++i) {
            ++c[i];
            if (!y.contains(c)) {
                bool minimal = true;
                for (std::size_t j = 0; j < c.size() && minimal; ++j) {
                    if (c[j] == 0)
                        continue;
                    --c[j];
                    minimal = y.contains(c);
                    ++c[j];
                }
                if (minimal)
                    out.insert(c);
            }
            --c[i];
        }
    }
    std::vector<Exponent> gens(out.begin(), out.end());
    std::sort(gens.begin(), gens.end(), RLLess{});
    return gens;
}

PartitionSequence rl_sequence(const Staircase& y)
{
    PartitionSequence seq;
    for (std::size_t i = 1; i < y.boxes().size(); ++i)
        seq.push_back(partition_of_box(y.boxes()[i]));
    return seq;
}

std::vector<Exponent> socle(const Staircase& y)
{
    std::vector<Exponent> out;
    for (const auto& b : y.boxes()) {
        Exponent c = b;
        bool maximal = true;
        for (std::size_t i = 0; i < c.size() && maximal; ++i) {
            ++c[i];
            maximal = !y.contains(c);
            --c[i];
        }
        if (maximal)
            out.push_back(b);
    }
    return out;
}

std::vector<int> essential_axes(const Staircase& y)
{
    std::vector<int> axes;
    for (int s = 0; s < y.dim(); ++s) {
        Exponent e(static_cast<std::size_t>(y.dim()), 0);
        e[static_cast<std::size_t>(s)] = 1;
        if (y.contains(e))
            axes.push_back(s);
    }
    return axes;
}

Staircase compact(const Staircase& y)
{
    const std::vector<int> axes = essential_axes(y);
    std::vector<Exponent> boxes;
    for (const auto& b : y.boxes()) {
        Exponent c;
        for (int s : axes)
            c.push_back(b[static_cast<std::size_t>(s)]);
        boxes.push_back(std::move(c));
    }
    return Staircase(static_cast<int>(axes.size()), std::move(boxes));
}

namespace {

void staircase_dfs(int n, std::size_t k, std::vector<Exponent>& boxes,
                   const std::function<void(const Staircase&)>& visit)
{
    if (boxes.size() == k) {
        visit(Staircase(n, boxes));
        return;
    }
    // Addable boxes above the current RL maximum; an RL-sorted list
    // whose every prefix is an order ideal is produced exactly once.
    std::set<Exponent, RLLess> candidates;
    const Exponent& last = boxes.back();
    for (const auto& b : boxes) {
        Exponent c = b;
        for (std::size_t i = 0; i < c.size(); ++i) {
            ++c[i];
            if (RLLess{}(last, c) && !sorted_contains(boxes, c)) {
                bool addable = true;
                for (std::size_t j = 0; j < c.size() && addable; ++j) {
                    if (c[j] == 0)
                        continue;
                    --c[j];
                    addable = sorted_contains(boxes, c);
                    ++c[j];
                }
                if (addable)
                    candidates.insert(c);
            }
            --c[i];
        }
    }
    for (const auto& c : candidates) {
        boxes.push_back(c);
        staircase_dfs(n, k, boxes, visit);
        boxes.pop_back();
    }
}

}  // namespace

void for_each_staircase(int n, int k, const std::function<void(const Staircase&)>& visit, int budget)
{
    if (n < 1 || k < 1)
        throw InvalidInput("enumerate_staircases: n and k must be positive");
    if (static_cast<long long>(n) * k > budget)
        throw BudgetExceeded("enumerate_staircases: n * k exceeds the enumeration budget");
    std::vector<Exponent> boxes{Exponent(static_cast<std::size_t>(n), 0)};
    staircase_dfs(n, static_cast<std::size_t>(k), boxes, visit);
}

std::vector<Staircase> enumerate_staircases(int n, int k, int budget)
{
    std::vector<Staircase> out;
    for_each_staircase(n, k, [&](const Staircase& y) { out.push_back(y); }, budget);
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
        throw ParseError("monomial: bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

Exponent parse_monomial(std::string_view text, int n)
{
    text = trim(text);
    if (text.empty())
        throw ParseError("monomial: empty generator");
    Exponent e(static_cast<std::size_t>(n), 0);
    if (text == "1")
        return e;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t star = text.find('*', start);
        const std::string_view factor =
            trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
        if (factor.size() < 2 || factor.front() != 'x')
            throw ParseError("monomial: bad factor '" + std::string(factor) + "'");
        const std::size_t caret = factor.find('^');
        const int var = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1),
                                  "variable index");
        const int exp = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), "exponent");
        if (var < 1 || var > n)
            throw IndexOutOfRange("monomial: variable x" + std::to_string(var) + " outside 1.." + std::to_string(n));
        e[static_cast<std::size_t>(var - 1)] += exp;
        if (star == std::string_view::npos)
            break;
        start = star + 1;
    }
    return e;
}

}  // namespace

std::vector<Exponent> parse_monomials(std::string_view text, int n)
{
    if (n < 1)
        throw InvalidInput("parse_monomials: n must be positive");
    std::vector<Exponent> gens;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        gens.push_back(parse_monomial(
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), n));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return gens;
}

std::string format_monomial(const Exponent& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(i + 1);
        if (e[i] != 1)
            out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_monomials(const std::vector<Exponent>& gens)
{
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += format_monomial(gens[i]);
    }
    return out;
}

}  // namespace curvcert
