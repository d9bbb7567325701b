#include "sepstat/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sepstat {

namespace {

void check_position(int pos, int n, const char* what)
{
    if (pos < 1 || pos > n) {
        throw std::out_of_range(std::string(what) + ": position " + std::to_string(pos) +
                                " outside 1.." + std::to_string(n));
    }
}

}  // namespace

Word::Word(std::vector<int> values) : values_(std::move(values))
{
    std::vector<int> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1)
            throw std::invalid_argument("word value " + std::to_string(sorted[i]) + " is not positive");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("duplicate value " + std::to_string(sorted[i]) + " in word");
    }
}

int Word::at(int pos) const
{
    check_position(pos, size(), "Word::at");
    return values_[pos - 1];
}

Permutation::Permutation(std::vector<int> values) : entries_(std::move(values))
{
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[v])
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(std::max(n, 0));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Trusted{});
}

int Permutation::at(int pos) const
{
    check_position(pos, size(), "Permutation::at");
    return entries_[pos - 1];
}

int Permutation::position_of(int value) const
{
    check_position(value, size(), "Permutation::position_of");
    auto it = std::find(entries_.begin(), entries_.end(), value);
    return static_cast<int>(it - entries_.begin()) + 1;
}

std::string Permutation::to_string() const
{
    std::string s = "[";
    const bool compact = size() <= 9;
    for (int i = 0; i < size(); ++i) {
        if (i > 0 && !compact)
            s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + "]";
}

Permutation make_permutation(std::vector<int> values)
{
    return Permutation(std::move(values));
}

Permutation standardize(const Word& w)
{
    const auto& v = w.values();
    std::vector<int> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
    std::vector<int> out(v.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        out[order[rank]] = static_cast<int>(rank) + 1;
    return Permutation(std::move(out), Permutation::Trusted{});
}

std::set<int> bonds(const Permutation& p)
{
    std::set<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (std::abs(p.at(i) - p.at(i + 1)) == 1)
            out.insert(i);
    return out;
}

int bond_count(const Permutation& p)
{
    const auto& v = p.values();
    int count = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        count += std::abs(v[i] - v[i + 1]) == 1;
    return count;
}

std::vector<Run> maximal_runs(const Permutation& p)
{
    std::vector<Run> runs;
    const int n = p.size();
    int i = 1;
    while (i <= n) {
        Run run{i, 1, RunDirection::trivial};
        if (i < n) {
            const int step = p.at(i + 1) - p.at(i);
            if (step == 1 || step == -1) {
                run.direction = step == 1 ? RunDirection::ascending : RunDirection::descending;
                while (i + run.length <= n && p.at(i + run.length) - p.at(i + run.length - 1) == step)
                    ++run.length;
            }
        }
        runs.push_back(run);
        i += run.length;
    }
    return runs;
}

bool is_king(const Permutation& p)
{
    return bond_count(p) == 0;
}

Permutation inverse(const Permutation& p)
{
    std::vector<int> q(p.size());
    for (int i = 1; i <= p.size(); ++i)
        q[p.at(i) - 1] = i;
    return Permutation(std::move(q));
}

Permutation reverse(const Permutation& p)
{
    std::vector<int> r(p.values().rbegin(), p.values().rend());
    return Permutation(std::move(r));
}

Permutation delete_and_standardize(const Permutation& p, int pos)
{
    check_position(pos, p.size(), "delete_and_standardize");
    const int removed = p.at(pos);
    std::vector<int> out;
    out.reserve(p.size() - 1);
    for (int i = 1; i <= p.size(); ++i) {
        if (i == pos)
            continue;
        const int v = p.at(i);
        out.push_back(v > removed ? v - 1 : v);
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> deletions(const Permutation& p)
{
    std::vector<Permutation> out;
    out.reserve(p.size());
    for (int i = 1; i <= p.size(); ++i)
        out.push_back(delete_and_standardize(p, i));
    return out;
}

std::set<Permutation> children(const Permutation& p)
{
    auto all = deletions(p);
    return {all.begin(), all.end()};
}

Permutation inflate(const Permutation& pattern, const std::vector<Permutation>& blocks)
{
    const int k = pattern.size();
    if (k == 0 || blocks.empty())
        throw std::invalid_argument("inflate: empty pattern or block list");
    if (static_cast<int>(blocks.size()) != k)
        throw std::invalid_argument("inflate: pattern has " + std::to_string(k) + " entries but " +
                                    std::to_string(blocks.size()) + " blocks given");
    for (const auto& b : blocks)
        if (b.empty())
            throw std::invalid_argument("inflate: empty block");

    // Block for pattern value j sits on the values above the blocks of values 1..j-1.
    std::vector<int> offset_by_value(k + 1, 0);
    for (int value = 1; value < k; ++value) {
        const int pos = pattern.position_of(value);
        offset_by_value[value + 1] = offset_by_value[value] + blocks[pos - 1].size();
    }

    std::vector<int> out;
    for (int i = 1; i <= k; ++i) {
        const int offset = offset_by_value[pattern.at(i)];
        for (int v : blocks[i - 1])
            out.push_back(offset + v);
    }
    return Permutation(std::move(out));
}

Permutation comb(const Word& odd, const Word& even)
{
    if (odd.size() != even.size() && odd.size() != even.size() + 1)
        throw std::invalid_argument("comb: odd half has " + std::to_string(odd.size()) +
                                    " entries, even half " + std::to_string(even.size()));
    std::vector<int> out;
    out.reserve(odd.size() + even.size());
    for (int i = 1; i <= odd.size(); ++i) {
        out.push_back(odd.at(i));
        if (i <= even.size())
            out.push_back(even.at(i));
    }
    try {
        return Permutation(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("comb: halves do not cover 1..n: ") + e.what());
    }
}

std::pair<Word, Word> comb_split(const Permutation& p)
{
    std::vector<int> odd, even;
    for (int i = 1; i <= p.size(); ++i)
        (i % 2 == 1 ? odd : even).push_back(p.at(i));
    return {Word(std::move(odd)), Word(std::move(even))};
}

}  // namespace sepstat
