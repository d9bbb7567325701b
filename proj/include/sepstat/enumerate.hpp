#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepstat/permutation.hpp"
#include "sepstat/series.hpp"

namespace sepstat {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_exact_string(const Rational& r);
/// Decimal rendering with `digits` significant digits. Approximate.
std::string to_decimal_string(const Rational& r, int digits = 12);

enum class StatKind { vertical, horizontal, both, any, bonds };

std::string to_string(StatKind kind);
/// Throws std::invalid_argument for an unknown name.
StatKind parse_stat_kind(const std::string& name);

/// Forward range over S_n in lexicographic order. S_0 holds just the empty
/// permutation.
class SymmetricGroup {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;
        using pointer = const Permutation*;
        using reference = const Permutation&;

        iterator() = default;
        explicit iterator(int n);

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return current_ == other.current_; }

    private:
        std::optional<Permutation> current_;
    };

    explicit SymmetricGroup(int n);

    iterator begin() const { return iterator(n_); }
    iterator end() const { return {}; }
    int degree() const { return n_; }

private:
    int n_;
};

/// Throws std::out_of_range when n is negative or exceeds `cap`.
SymmetricGroup iterate_sn(int n, int cap);

/// Per-permutation statistics from a single left-to-right scan.
struct PermStats {
    int vertical = 0;
    int horizontal = 0;
    int both = 0;
    int any = 0;
    int bonds = 0;

    int get(StatKind kind) const;
};

PermStats compute_stats(const Permutation& p);

struct DistTable {
    int n = 0;
    StatKind kind = StatKind::vertical;
    std::map<int, BigInt> counts;

    BigInt total() const;
    /// counts[0..max m] with zeros filled in, matching a marker polynomial.
    std::vector<BigInt> dense() const;
};

struct SweepOptions {
    int cap = 10;
    int threads = 0;  // 0: hardware concurrency
};

/// Everything an exhaustive pass over S_n produces.
struct SweepResult {
    int n = 0;
    std::map<StatKind, DistTable> tables;
    std::map<StatKind, BigInt> sums;
    BigInt separator_free_by_report = 0;
    BigInt separator_free_by_knight = 0;
    std::vector<Permutation> all_separator;  // sep(p) = n, sorted
};

/// Exhaustive sweep of S_n, partitioned by first entry across threads. The
/// result does not depend on the thread count.
SweepResult sweep(int n, const SweepOptions& options = {});

DistTable distribution(int n, StatKind kind, const SweepOptions& options = {});

/// Counts separator-free permutations with two independent tests; throws
/// std::logic_error if they disagree.
BigInt separator_free_count(int n, const SweepOptions& options = {});

/// Every inflation pattern[a_1..a_k] with pattern in S_k and each a_i in
/// {[3142], [2413]}; sorted.
std::vector<Permutation> max_separator_perms(int k);

/// Closed-form expectation over S_n. horizontal shares the vertical formula;
/// n < 3 gives 0. Throws for bonds.
Rational expectation_formula(long long n, StatKind kind);
Rational expectation_empirical(int n, StatKind kind, const SweepOptions& options = {});

struct Mismatch {
    std::string series;  // "h" or "B"
    int n = 0;
    int m = 0;
    BigInt expected;  // brute force
    BigInt actual;    // generating function
};

struct VerificationReport {
    int n_max = 0;
    bool passed = true;
    std::vector<Mismatch> mismatches;
};

/// Compares h(z,u) and B(z,u) row by row with exhaustive distributions.
/// Mismatches are reported, not thrown; only the first differing m of each
/// row is listed.
VerificationReport verify_gf_vs_brute(int n_max, const SweepOptions& options = {});

}  // namespace sepstat
