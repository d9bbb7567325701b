#include "sepstat/verify.hpp"

#include <algorithm>
#include <sstream>

#include "sepstat/markedgf.hpp"

namespace sepstat {

bool SuiteReport::passed() const
{
    if (!gf.passed)
        return false;
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

namespace {

class Collector {
public:
    explicit Collector(std::string name) : name_(std::move(name)) {}

    template <typename... Parts>
    void fail(const Parts&... parts)
    {
        if (!failure_.empty())
            return;  // first failure is enough
        std::ostringstream s;
        (s << ... << parts);
        failure_ = s.str();
    }

    CheckResult result(std::string summary) const
    {
        if (failure_.empty())
            return {name_, true, std::move(summary)};
        return {name_, false, failure_};
    }

private:
    std::string name_;
    std::string failure_;
};

}  // namespace

SuiteReport run_verification_suite(int n_max, const SweepOptions& options)
{
    SuiteReport report;
    report.n_max = n_max;
    report.gf = verify_gf_vs_brute(n_max, options);
    {
        Collector c("gf_vs_brute");
        for (const auto& m : report.gf.mismatches)
            c.fail(m.series, " row n=", m.n, " differs first at m=", m.m, ": brute ", m.expected, ", series ",
                   m.actual);
        report.checks.push_back(c.result("h(z,u) and B(z,u) match exhaustive counts for n <= " +
                                         std::to_string(n_max)));
    }

    std::vector<SweepResult> sweeps;
    for (int n = 0; n <= n_max; ++n)
        sweeps.push_back(sweep(n, options));

    Collector totals("totals");
    Collector symmetry("vertical_horizontal_symmetry");
    Collector max_stat("max_separators");
    Collector expect("expectation_formulas");
    Collector dual("separator_free_dual_oracle");
    for (const auto& r : sweeps) {
        const int n = r.n;
        const BigInt n_fact = factorial(n);
        for (const auto& [kind, table] : r.tables)
            if (table.total() != n_fact)
                totals.fail(to_string(kind), " table at n=", n, " sums to ", table.total(), " not ", n_fact);

        if (r.tables.at(StatKind::vertical).counts != r.tables.at(StatKind::horizontal).counts)
            symmetry.fail("vertical and horizontal distributions differ at n=", n);

        const auto& any = r.tables.at(StatKind::any).counts;
        const int top = any.empty() ? 0 : any.rbegin()->first;
        if (n >= 1 && n % 4 == 0) {
            const int k = n / 4;
            const BigInt expected = (BigInt(1) << k) * factorial(k);
            if (top != n || any.at(n) != expected)
                max_stat.fail("n=", n, ": expected ", expected, " permutations with sep = n");
            else if (max_separator_perms(k) != r.all_separator)
                max_stat.fail("n=", n, ": inflation list differs from the exhaustive set");
        } else if (n >= 1 && top == n) {
            max_stat.fail("n=", n, ": found permutations with sep = n");
        }

        if (n >= 3) {
            for (StatKind kind : {StatKind::vertical, StatKind::both, StatKind::any}) {
                const Rational empirical(r.sums.at(kind), n_fact);
                const Rational formula = expectation_formula(n, kind);
                if (empirical != formula)
                    expect.fail(to_string(kind), " at n=", n, ": formula ", to_exact_string(formula),
                                ", empirical ", to_exact_string(empirical));
            }
        }

        if (r.separator_free_by_report != r.separator_free_by_knight)
            dual.fail("n=", n, ": report ", r.separator_free_by_report, ", knight ", r.separator_free_by_knight);
    }
    report.checks.push_back(totals.result("every distribution sums to n!"));
    report.checks.push_back(symmetry.result("vertical and horizontal distributions coincide"));
    report.checks.push_back(max_stat.result("sep = n only for n = 4k, with 2^k k! such permutations"));
    report.checks.push_back(expect.result("closed-form expectations equal exhaustive means for 3 <= n"));
    report.checks.push_back(dual.result("separator-free counts agree between both oracles"));

    const int order = std::max(n_max, 0);
    const BiSeries g = vertical_marked_gf(order);
    const BiSeries h = vertical_sep_gf(order);
    Collector binom("binomial_transform");
    Collector shape("series_shape");
    for (int n = 0; n <= order; ++n) {
        const MarkerPoly& hn = h.coeff(n);
        for (int m = 0; m <= n; ++m) {
            BigInt acc = 0;
            for (int k = m; k <= hn.degree(); ++k)
                acc += hn.coefficient(k) * binomial(k, m);
            if (acc != g.coeff2(n, m))
                binom.fail("g at z^", n, " v^", m, " is ", g.coeff2(n, m), ", binomial transform of h gives ", acc);
        }
        if (hn.evaluate(1) != factorial(n))
            shape.fail("h row ", n, " evaluated at u=1 is ", hn.evaluate(1));
        // the first and last positions are never vertical separators
        if (hn.degree() > std::max(n - 2, 0))
            shape.fail("h row ", n, " has degree ", hn.degree());
        for (const auto& c : hn.coefficients())
            if (c < 0)
                shape.fail("negative coefficient in h row ", n);
        for (const auto& c : g.coeff(n).coefficients())
            if (c < 0)
                shape.fail("negative coefficient in g row ", n);
    }
    report.checks.push_back(binom.result("g(z,v) is the binomial transform of h(z,u)"));
    report.checks.push_back(shape.result("h rows are nonnegative, total n!, degree <= n - 2"));
    return report;
}

}  // namespace sepstat
