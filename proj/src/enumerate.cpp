#include "sepstat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <span>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sepstat/markedgf.hpp"
#include "sepstat/separators.hpp"

namespace sepstat {

std::string to_exact_string(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r, int digits)
{
    using Float = boost::multiprecision::cpp_bin_float_50;
    const Float value = Float(boost::multiprecision::numerator(r)) / Float(boost::multiprecision::denominator(r));
    return value.str(digits);
}

std::string to_string(StatKind kind)
{
    switch (kind) {
    case StatKind::vertical: return "vertical";
    case StatKind::horizontal: return "horizontal";
    case StatKind::both: return "both";
    case StatKind::any: return "any";
    case StatKind::bonds: return "bonds";
    }
    return "?";
}

StatKind parse_stat_kind(const std::string& name)
{
    for (StatKind k : {StatKind::vertical, StatKind::horizontal, StatKind::both, StatKind::any, StatKind::bonds})
        if (to_string(k) == name)
            return k;
    throw std::invalid_argument("unknown statistic kind '" + name +
                                "' (expected vertical, horizontal, both, any or bonds)");
}

// ---------------------------------------------------------------------------

SymmetricGroup::iterator::iterator(int n) : current_(Permutation::identity(n)) {}

SymmetricGroup::iterator& SymmetricGroup::iterator::operator++()
{
    std::vector<int> v = current_->values();
    if (std::next_permutation(v.begin(), v.end()))
        current_ = Permutation(std::move(v));
    else
        current_.reset();
    return *this;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n)
{
    if (n < 0)
        throw std::out_of_range("S_n needs n >= 0");
}

SymmetricGroup iterate_sn(int n, int cap)
{
    if (n < 0 || n > cap)
        throw std::out_of_range("n = " + std::to_string(n) + " outside enumeration range 0.." + std::to_string(cap));
    return SymmetricGroup(n);
}

// ---------------------------------------------------------------------------

int PermStats::get(StatKind kind) const
{
    switch (kind) {
    case StatKind::vertical: return vertical;
    case StatKind::horizontal: return horizontal;
    case StatKind::both: return both;
    case StatKind::any: return any;
    case StatKind::bonds: return bonds;
    }
    return 0;
}

namespace {

constexpr StatKind all_kinds[] = {StatKind::vertical, StatKind::horizontal, StatKind::both, StatKind::any,
                                  StatKind::bonds};

// Values are 1..n stored 0-indexed in `v`; requires n < 64.
PermStats scan_stats(std::span<const int> v)
{
    const int n = static_cast<int>(v.size());
    int pos[64];
    for (int i = 0; i < n; ++i)
        pos[v[i]] = i;

    PermStats s;
    std::uint64_t vertical = 0;
    std::uint64_t horizontal = 0;
    for (int i = 0; i + 1 < n; ++i) {
        s.bonds += std::abs(v[i] - v[i + 1]) == 1;
        if (i >= 1 && std::abs(v[i - 1] - v[i + 1]) == 1)
            vertical |= std::uint64_t{1} << v[i];
    }
    for (int a = 2; a < n; ++a)
        if (std::abs(pos[a - 1] - pos[a + 1]) == 1)
            horizontal |= std::uint64_t{1} << a;
    s.vertical = std::popcount(vertical);
    s.horizontal = std::popcount(horizontal);
    s.both = std::popcount(vertical & horizontal);
    s.any = std::popcount(vertical | horizontal);
    return s;
}

struct Partial {
    explicit Partial(int n = 0)
    {
        for (auto& row : counts)
            row.assign(n + 1, 0);
    }

    std::array<std::vector<std::uint64_t>, std::size(all_kinds)> counts;
    std::array<std::uint64_t, std::size(all_kinds)> sums{};
    std::uint64_t free_by_report = 0;
    std::uint64_t free_by_knight = 0;
    std::vector<Permutation> all_separator;

    void add(std::span<const int> v)
    {
        const PermStats s = scan_stats(v);
        for (std::size_t k = 0; k < std::size(all_kinds); ++k) {
            const int value = s.get(all_kinds[k]);
            ++counts[k][value];
            sums[k] += value;
        }
        free_by_report += s.any == 0;
        const Permutation p{std::vector<int>(v.begin(), v.end())};
        free_by_knight += !has_knight_pair(p);
        if (s.any == static_cast<int>(v.size()) && !v.empty())
            all_separator.push_back(p);
    }
};

// Permutations of 1..n with first entry `first`, in lexicographic order.
Partial sweep_chunk(int n, int first)
{
    Partial part(n);
    std::vector<int> v;
    v.reserve(n);
    if (n > 0)
        v.push_back(first);
    for (int x = 1; x <= n; ++x)
        if (x != first)
            v.push_back(x);
    do {
        part.add(v);
    } while (n > 1 && std::next_permutation(v.begin() + 1, v.end()));
    return part;
}

}  // namespace

PermStats compute_stats(const Permutation& p)
{
    if (p.size() < 64)
        return scan_stats(p.values());
    const SeparatorReport r = separator_report(p);
    PermStats s;
    s.vertical = static_cast<int>(r.vertical.size());
    s.horizontal = static_cast<int>(r.horizontal.size());
    s.both = static_cast<int>(r.both.size());
    s.any = r.sep_count;
    s.bonds = bond_count(p);
    return s;
}

BigInt DistTable::total() const
{
    BigInt t = 0;
    for (const auto& [m, c] : counts)
        t += c;
    return t;
}

std::vector<BigInt> DistTable::dense() const
{
    if (counts.empty())
        return {};
    std::vector<BigInt> out(counts.rbegin()->first + 1);
    for (const auto& [m, c] : counts)
        out[m] = c;
    return out;
}

SweepResult sweep(int n, const SweepOptions& options)
{
    if (n < 0 || n > options.cap)
        throw std::out_of_range("n = " + std::to_string(n) + " outside enumeration range 0.." +
                                std::to_string(options.cap));
    if (n > 20)
        throw std::out_of_range("exhaustive sweep supports n <= 20");

    const int chunks = std::max(n, 1);
    std::vector<Partial> partials(chunks);
    int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, chunks);

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int c = next++; c < chunks; c = next++)
            partials[c] = sweep_chunk(n, c + 1);
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    SweepResult result;
    result.n = n;
    for (StatKind k : all_kinds) {
        result.tables[k] = DistTable{n, k, {}};
        result.sums[k] = 0;
    }
    for (auto& part : partials) {
        for (std::size_t k = 0; k < std::size(all_kinds); ++k) {
            for (std::size_t m = 0; m < part.counts[k].size(); ++m)
                if (part.counts[k][m] != 0)
                    result.tables[all_kinds[k]].counts[static_cast<int>(m)] += part.counts[k][m];
            result.sums[all_kinds[k]] += part.sums[k];
        }
        result.separator_free_by_report += part.free_by_report;
        result.separator_free_by_knight += part.free_by_knight;
        std::move(part.all_separator.begin(), part.all_separator.end(), std::back_inserter(result.all_separator));
    }
    return result;
}

DistTable distribution(int n, StatKind kind, const SweepOptions& options)
{
    return sweep(n, options).tables.at(kind);
}

BigInt separator_free_count(int n, const SweepOptions& options)
{
    const SweepResult r = sweep(n, options);
    if (r.separator_free_by_report != r.separator_free_by_knight)
        throw std::logic_error("separator-free count disagreement at n = " + std::to_string(n) + ": report gives " +
                               r.separator_free_by_report.str() + ", knight test gives " +
                               r.separator_free_by_knight.str());
    return r.separator_free_by_report;
}

std::vector<Permutation> max_separator_perms(int k)
{
    if (k < 1)
        throw std::invalid_argument("max_separator_perms needs k >= 1");
    const Permutation a{3, 1, 4, 2};
    const Permutation b{2, 4, 1, 3};
    std::vector<Permutation> out;
    for (const Permutation& pattern : SymmetricGroup(k)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<Permutation> blocks;
            for (int i = 0; i < k; ++i)
                blocks.push_back(mask >> i & 1 ? b : a);
            out.push_back(inflate(pattern, blocks));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational expectation_formula(long long n, StatKind kind)
{
    if (kind == StatKind::bonds)
        throw std::invalid_argument("no expectation formula for bonds");
    if (n < 3)
        return 0;
    const BigInt N = n;
    switch (kind) {
    case StatKind::vertical:
    case StatKind::horizontal:
        return Rational(2 * (N - 2), N);
    case StatKind::both:
        return Rational(4 * (N - 3) * (N - 3), N * (N - 1) * (N - 2));
    case StatKind::any:
        return Rational(4 * (N * N * N - 6 * N * N + 14 * N - 13), N * (N - 1) * (N - 2));
    case StatKind::bonds:
        break;
    }
    return 0;
}

Rational expectation_empirical(int n, StatKind kind, const SweepOptions& options)
{
    const SweepResult r = sweep(n, options);
    return Rational(r.sums.at(kind), factorial(n));
}

VerificationReport verify_gf_vs_brute(int n_max, const SweepOptions& options)
{
    VerificationReport report;
    report.n_max = n_max;
    const BiSeries h = vertical_sep_gf(std::max(n_max, 0));
    const BiSeries bonds_series = bond_gf(std::max(n_max, 0));

    auto compare = [&](const std::string& name, int n, const MarkerPoly& row, const DistTable& table) {
        const std::vector<BigInt> brute = table.dense();
        const int top = std::max(row.degree(), static_cast<int>(brute.size()) - 1);
        for (int m = 0; m <= top; ++m) {
            const BigInt expected = m < static_cast<int>(brute.size()) ? brute[m] : BigInt(0);
            const BigInt actual = row.coefficient(m);
            if (expected != actual) {
                report.mismatches.push_back({name, n, m, expected, actual});
                report.passed = false;
                return;
            }
        }
    };

    for (int n = 0; n <= n_max; ++n) {
        const SweepResult r = sweep(n, options);
        compare("h", n, h.coeff(n), r.tables.at(StatKind::vertical));
        compare("B", n, bonds_series.coeff(n), r.tables.at(StatKind::bonds));
    }
    return report;
}

}  // namespace sepstat
