#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sepstat {

/// A sequence of distinct positive integers, not necessarily {1..k}.
/// Positions are 1-indexed.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> values);
    Word(std::initializer_list<int> values) : Word(std::vector<int>(values)) {}

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int at(int pos) const;

    const std::vector<int>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> values_;
};

/// A bijection on {1..n} in one-line notation. n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument naming the offending value when
    /// `values` is not a bijection on {1..values.size()}.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    /// Entry at 1-indexed position `pos`.
    int at(int pos) const;
    /// 1-indexed position holding `value`.
    int position_of(int value) const;

    const std::vector<int>& values() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    Word word() const { return Word(entries_); }
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    struct Trusted {};
    Permutation(std::vector<int> values, Trusted) : entries_(std::move(values)) {}
    friend Permutation standardize(const Word& w);

    std::vector<int> entries_;
};

Permutation make_permutation(std::vector<int> values);

/// Relabels a word order-isomorphically onto {1..k}.
Permutation standardize(const Word& w);

enum class RunDirection { ascending, descending, trivial };

struct Run {
    int start = 1;  // 1-indexed
    int length = 1;
    RunDirection direction = RunDirection::trivial;

    bool operator==(const Run&) const = default;
};

/// Positions i (1 <= i <= n-1) where |p_i - p_{i+1}| = 1.
std::set<int> bonds(const Permutation& p);
int bond_count(const Permutation& p);
std::vector<Run> maximal_runs(const Permutation& p);

bool is_king(const Permutation& p);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);

Permutation delete_and_standardize(const Permutation& p, int pos);
/// Every single-entry deletion in position order, duplicates kept.
std::vector<Permutation> deletions(const Permutation& p);
/// Distinct permutations of size n-1 contained in p.
std::set<Permutation> children(const Permutation& p);

/// pattern[blocks_1, ..., blocks_k]: entry i of the pattern is replaced by a
/// value-contiguous block order-isomorphic to blocks[i].
Permutation inflate(const Permutation& pattern, const std::vector<Permutation>& blocks);

/// [odd_1, even_1, odd_2, even_2, ...]; |odd| is |even| or |even| + 1.
Permutation comb(const Word& odd, const Word& even);
std::pair<Word, Word> comb_split(const Permutation& p);

}  // namespace sepstat
