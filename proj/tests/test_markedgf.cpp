#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sepstat/markedgf.hpp"

using namespace sepstat;

namespace {

std::vector<std::uint64_t> row_of(const BiSeries& s, int n)
{
    std::vector<std::uint64_t> out;
    for (const auto& c : s.coeff(n).coefficients())
        out.push_back(c.convert_to<std::uint64_t>());
    if (out.empty())
        out.push_back(0);
    return out;
}

int vertical_count(const std::vector<int>& v)
{
    return static_cast<int>(oracle::vertical_digits(v).size());
}

int horizontal_count(const std::vector<int>& v)
{
    return static_cast<int>(oracle::horizontal_digits(v).size());
}

}  // namespace

TEST_CASE("run block series")
{
    const BiSeries r = run_block_series(6);
    CHECK(r.coeff(0).is_zero());
    CHECK(r.coeff(1) == MarkerPoly(1));
    for (int j = 2; j <= 6; ++j)
        CHECK(r.coeff(j) == MarkerPoly::monomial(2, j - 1));
    CHECK(run_block_series(1) == BiSeries::monomial(1, 1, 1));
}

TEST_CASE("marked bond series A(z, v)")
{
    const BiSeries a = bond_marked_gf(8);
    // a_{3,m} = sum over S_3 of C(bonds, m): four perms with one bond, two with two.
    CHECK(oracle::marked_row(3, oracle::bonds) == std::vector<std::uint64_t>{6, 8, 2});
    CHECK(a.coeff(3).to_string('v') == "6 + 8v + 2v^2");
    CHECK(a.coeff(0) == MarkerPoly(1));
    CHECK(a.coeff(1) == MarkerPoly(1));
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(row_of(a, n) == oracle::marked_row(n, oracle::bonds));
    }
}

TEST_CASE("bond series B(z, u)")
{
    const BiSeries b = bond_gf(8);
    CHECK(b.coeff(3).to_string() == "4u + 2u^2");
    CHECK(b.coeff(4).evaluate(1) == 24);
    CHECK(b.coeff2(4, 0) == 2);
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(row_of(b, n) == oracle::plain_row(n, oracle::bonds));
    }
}

TEST_CASE("marked vertical separator series g(z, v)")
{
    const BiSeries g = vertical_marked_gf(8);
    CHECK(g.coeff(0) == MarkerPoly(1));
    CHECK(g.coeff(2) == MarkerPoly(2));
    CHECK(g.coeff(3).to_string('v') == "6 + 4v");
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(row_of(g, n) == oracle::marked_row(n, vertical_count));
    }
}

TEST_CASE("vertical separator series h(z, u)")
{
    const BiSeries h = vertical_sep_gf(8);
    CHECK(h.coeff(0) == MarkerPoly(1));
    CHECK(h.coeff2(1, 0) == 1);
    CHECK(h.coeff2(2, 0) == 2);
    CHECK(h.coeff(3).to_string() == "2 + 4u");
    CHECK(h.coeff2(3, 1) == 4);
    CHECK_THROWS_AS(h.coeff(9), std::out_of_range);
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        const auto brute = oracle::plain_row(n, vertical_count);
        CHECK(row_of(h, n) == brute);
        // horizontal separators share the distribution
        CHECK(oracle::plain_row(n, horizontal_count) == brute);
        CHECK(h.coeff(n).evaluate(1) == factorial(n));
    }
}

TEST_CASE("h(z, u) structure at higher order")
{
    const int order = 24;
    const BiSeries h = vertical_sep_gf(order);
    const BiSeries g = vertical_marked_gf(order);
    for (int n = 0; n <= order; ++n) {
        CAPTURE(n);
        const MarkerPoly& row = h.coeff(n);
        CHECK(row.evaluate(1) == factorial(n));
        CHECK(row.degree() <= std::max(n - 2, 0));
        for (const auto& c : row.coefficients())
            CHECK(c >= 0);
        for (const auto& c : g.coeff(n).coefficients())
            CHECK(c >= 0);
        for (int m = 0; m <= n; ++m) {
            BigInt acc = 0;
            for (int k = m; k <= row.degree(); ++k)
                acc += row.coefficient(k) * binomial(k, m);
            CHECK(acc == g.coeff2(n, m));
        }
    }
}

TEST_CASE("series at order zero and one")
{
    CHECK(vertical_sep_gf(0) == BiSeries::constant(0, 1));
    CHECK(vertical_sep_gf(1) == BiSeries(1, {1, 1}));
    CHECK(bond_gf(0) == BiSeries::constant(0, 1));
}

TEST_CASE("truncation is consistent across orders")
{
    const BiSeries big = vertical_sep_gf(20);
    for (int order : {5, 9, 12})
        CHECK(vertical_sep_gf(order) == big.truncated(order));
    CHECK(bond_gf(7) == bond_gf(15).truncated(7));
}
