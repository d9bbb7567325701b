#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sepstat/permutation.hpp"

namespace sepstat {

// Separator sets hold digits (values), not positions, unless the name says so.

/// Digits p_i (2 <= i <= n-1) whose positional neighbours differ by one.
std::set<int> vertical_separators(const Permutation& p);
std::set<int> vertical_separator_positions(const Permutation& p);

/// Digits a (2 <= a <= n-1) such that a-1 and a+1 sit in adjacent positions.
std::set<int> horizontal_separators(const Permutation& p);

struct SeparatorReport {
    std::set<int> vertical;
    std::set<int> horizontal;
    std::set<int> both;
    int sep_count = 0;
};

SeparatorReport separator_report(const Permutation& p);

bool is_separator_free(const Permutation& p);

/// Independent check: a pair of entries a knight's move apart on the
/// permutation matrix, i.e. (j-i, |p_i-p_j|) in {(1,2), (2,1)}.
bool has_knight_pair(const Permutation& p);

// ---------------------------------------------------------------------------
// Marked structures

/// A word with a subset of its bonds marked. Marked indices i refer to the
/// adjacent pair (word_i, word_{i+1}).
class MarkedWord {
public:
    MarkedWord() = default;
    explicit MarkedWord(Word word, std::set<int> marked = {});

    const Word& word() const { return word_; }
    const std::set<int>& marked() const { return marked_; }
    int marked_count() const { return static_cast<int>(marked_.size()); }

    bool operator==(const MarkedWord&) const = default;

private:
    Word word_;
    std::set<int> marked_;
};

enum class Arrow { none, up, down };

struct ArrowedPart {
    int size = 1;
    Arrow arrow = Arrow::none;

    bool operator==(const ArrowedPart&) const = default;
};

/// Composition whose parts > 1 carry an up/down arrow. Encodes the maximal
/// marked runs of a marked permutation.
class ArrowedComposition {
public:
    ArrowedComposition() = default;
    explicit ArrowedComposition(std::vector<ArrowedPart> parts);

    /// Parses the compact form, e.g. "1,2↑,1,3↓". "^"/"v" and "u"/"d" are
    /// accepted as ASCII arrows.
    static ArrowedComposition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<ArrowedPart>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    int total() const;

    bool operator==(const ArrowedComposition&) const = default;

private:
    std::vector<ArrowedPart> parts_;
};

/// Splits a marked permutation into its maximal marked runs.
std::pair<ArrowedComposition, Permutation> encode_marked(const MarkedWord& mp);
/// sigma[lambda] with every intra-run adjacency marked.
MarkedWord decode_marked(const ArrowedComposition& lambda, const Permutation& sigma);

/// Every marking of every bond subset of p, in ascending subset order.
std::vector<MarkedWord> all_markings(const Permutation& p);

/// A permutation with some vertical separator positions marked.
class MarkedSepPermutation {
public:
    MarkedSepPermutation() = default;
    MarkedSepPermutation(Permutation perm, std::set<int> marked_sep_positions);

    const Permutation& perm() const { return perm_; }
    const std::set<int>& marked_sep_positions() const { return marked_; }
    int marked_count() const { return static_cast<int>(marked_.size()); }

    bool operator==(const MarkedSepPermutation&) const = default;

private:
    Permutation perm_;
    std::set<int> marked_;
};

/// Combs two marked halves. A marked bond in one half marks the entry of the
/// other half lying between its endpoints.
MarkedSepPermutation comb_marked(const MarkedWord& odd, const MarkedWord& even);
std::pair<MarkedWord, MarkedWord> split_marked(const MarkedSepPermutation& msp);

}  // namespace sepstat
