#include "curvcert/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

#include "curvcert/errors.hpp"

namespace curvcert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end());
    for (int p : parts_) {
        if (p < 1)
            throw InvalidInput("partition parts must be positive");
        sum_ += p;
    }
}

int Partition::multiplicity(int part) const
{
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), part);
    return static_cast<int>(hi - lo);
}

std::vector<int> Partition::exponents(int ambient) const
{
    return box(*this, ambient);
}

std::uint64_t Partition::composition_count() const
{
    // Multinomial built incrementally: C(len, m1) * C(len - m1, m2) * ...
    std::uint64_t out = 1;
    int remaining = length();
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        const int mult = static_cast<int>(j - i);
        std::uint64_t binom = 1;
        for (int t = 1; t <= mult; ++t)
            binom = binom * static_cast<std::uint64_t>(remaining - mult + t) / static_cast<std::uint64_t>(t);
        out *= binom;
        remaining -= mult;
        i = j;
    }
    return out;
}

std::string to_string(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out + "]";
}

std::string to_string(const PartitionSequence& seq)
{
    std::string out = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(seq[i]);
    }
    return out + ")";
}

Partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("partition must be bracketed: '" + std::string(text) + "'");
    std::string_view body = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!body.empty()) {
        const auto comma = body.find(',');
        std::string_view tok = trim(body.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
            throw ParseError("bad partition part '" + std::string(tok) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        body = body.substr(comma + 1);
        if (trim(body).empty())
            throw ParseError("trailing comma in partition");
    }
    return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int min_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = min_part; p <= remaining; ++p) {
        // A part p must be followed by parts >= p, so p == remaining or
        // remaining - p >= p.
        if (p != remaining && remaining - p < p)
            continue;
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m)
{
    if (m < 0)
        throw InvalidInput("enumerate_partitions: negative argument");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(m, 1, cur, out);
    return out;
}

const std::vector<Partition>& partitions_of(int m)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const std::vector<Partition>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot)
        slot = std::make_unique<const std::vector<Partition>>(enumerate_partitions(m));
    return *slot;
}

std::uint64_t partition_count(int m)
{
    return partitions_of(m).size();
}

Exponent box(const Partition& tau, int ambient)
{
    if (ambient < 0 || tau.largest_part() > ambient)
        throw PartExceedsAmbient("part " + std::to_string(tau.largest_part()) + " exceeds ambient dimension " +
                                 std::to_string(ambient));
    Exponent out(static_cast<std::size_t>(ambient), 0);
    for (int p : tau.parts())
        ++out[static_cast<std::size_t>(p - 1)];
    return out;
}

Partition partition_of_box(const Exponent& b)
{
    std::vector<int> parts;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0)
            throw InvalidInput("partition_of_box: negative coordinate");
        parts.insert(parts.end(), static_cast<std::size_t>(b[i]), static_cast<int>(i + 1));
    }
    return Partition(std::move(parts));
}

std::set<Partition> proper_subpartitions(const Partition& tau)
{
    // Enumerate sub-multisets by choosing a count 0..mult for each distinct part.
    std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
    for (int p : tau.parts()) {
        if (groups.empty() || groups.back().first != p)
            groups.emplace_back(p, 0);
        ++groups.back().second;
    }
    std::set<Partition> out;
    std::vector<int> take(groups.size(), 0);
    for (;;) {
        std::vector<int> parts;
        for (std::size_t g = 0; g < groups.size(); ++g)
            parts.insert(parts.end(), static_cast<std::size_t>(take[g]), groups[g].first);
        if (!parts.empty() && static_cast<int>(parts.size()) < tau.length())
            out.emplace(std::move(parts));
        std::size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second)
            take[g++] = 0;
        if (g == groups.size())
            break;
        ++take[g];
    }
    return out;
}

bool is_complete(std::span<const Partition> set)
{
    std::set<Partition> members(set.begin(), set.end());
    for (const auto& p : set)
        for (const auto& sub : proper_subpartitions(p))
            if (!members.count(sub))
                return false;
    return true;
}

bool boxes_form_staircase(std::span<const Partition> set)
{
    int ambient = 0;
    for (const auto& p : set)
        ambient = std::max(ambient, p.largest_part());
    std::set<Exponent> boxes;
    for (const auto& p : set)
        boxes.insert(box(p, ambient));
    boxes.insert(Exponent(static_cast<std::size_t>(ambient), 0));
    for (const auto& b : boxes) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] == 0)
                continue;
            Exponent down = b;
            --down[i];
            if (!boxes.count(down))
                return false;
        }
    }
    return true;
}

bool pairwise_distinct(const PartitionSequence& seq)
{
    std::set<Partition> seen(seq.begin(), seq.end());
    return seen.size() == seq.size();
}

bool is_toric(const PartitionSequence& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i].sum() != static_cast<int>(i + 1))
            return false;
    return true;
}

bool is_admissible(const PartitionSequence& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i].empty() || seq[i].sum() > static_cast<int>(i + 1))
            return false;
    return pairwise_distinct(seq);
}

std::uint64_t toric_sequence_count(int k)
{
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i)
        out *= partition_count(i);
    return out;
}

ToricSequences::ToricSequences(int k) : k_(k)
{
    if (k < 1)
        throw InvalidInput("toric sequences need k >= 1");
}

ToricSequences::iterator::iterator(int k)
    : digits_(static_cast<std::size_t>(k), 0), done_(false)
{
    current_.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        current_.push_back(partitions_of(i).front());
}

ToricSequences::iterator& ToricSequences::iterator::operator++()
{
    std::size_t pos = digits_.size();
    while (pos > 0) {
        --pos;
        const auto& choices = partitions_of(static_cast<int>(pos + 1));
        if (++digits_[pos] < choices.size()) {
            current_[pos] = choices[digits_[pos]];
            return *this;
        }
        digits_[pos] = 0;
        current_[pos] = choices.front();
    }
    done_ = true;
    return *this;
}

namespace {

void complete_rec(int k, PartitionSequence& prefix, const std::function<void(const PartitionSequence&)>& visit)
{
    const int level = static_cast<int>(prefix.size()) + 1;
    if (level > k) {
        visit(prefix);
        return;
    }
    for (const auto& cand : partitions_of(level)) {
        // Every proper sub-partition has a smaller sum, so it must already be
        // the prefix entry at that level.
        bool ok = true;
        for (const auto& sub : proper_subpartitions(cand)) {
            if (prefix[static_cast<std::size_t>(sub.sum() - 1)] != sub) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        prefix.push_back(cand);
        complete_rec(k, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_complete_toric_sequence(int k, const std::function<void(const PartitionSequence&)>& visit)
{
    if (k < 1)
        throw InvalidInput("toric sequences need k >= 1");
    PartitionSequence prefix;
    complete_rec(k, prefix, visit);
}

std::vector<PartitionSequence> enumerate_complete_toric_sequences(int k)
{
    std::vector<PartitionSequence> out;
    for_each_complete_toric_sequence(k, [&](const PartitionSequence& s) { out.push_back(s); });
    return out;
}

}  // namespace curvcert
