#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sepstat {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Polynomial in the marker variable (u or v) with exact integer
/// coefficients; index = power. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
class MarkerPoly {
public:
    MarkerPoly() = default;
    explicit MarkerPoly(std::vector<BigInt> coefficients);
    MarkerPoly(long long constant);

    static MarkerPoly monomial(BigInt c, int power);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of marker^m; zero beyond the degree.
    BigInt coefficient(int m) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    /// q(t) -> q(t + offset), expanded exactly.
    MarkerPoly shifted(int offset) const;

    MarkerPoly& operator+=(const MarkerPoly& other);
    MarkerPoly& operator-=(const MarkerPoly& other);
    MarkerPoly& operator*=(const BigInt& scalar);
    friend MarkerPoly operator+(MarkerPoly a, const MarkerPoly& b) { return a += b; }
    friend MarkerPoly operator-(MarkerPoly a, const MarkerPoly& b) { return a -= b; }
    friend MarkerPoly operator*(MarkerPoly a, const BigInt& s) { return a *= s; }
    friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b);

    bool operator==(const MarkerPoly&) const = default;

    std::string to_string(char var = 'u') const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Power series in z truncated at z^order, with MarkerPoly coefficients.
/// Exponents above the order are unknown, not zero.
class BiSeries {
public:
    explicit BiSeries(int order);
    BiSeries(int order, std::vector<MarkerPoly> coeffs);

    static BiSeries constant(int order, MarkerPoly c);
    /// c * z^exponent (zero series when exponent > order).
    static BiSeries monomial(int order, int exponent, MarkerPoly c);
    /// sum_{n=0}^{order} z^n.
    static BiSeries geometric(int order);

    int order() const { return order_; }
    /// Smallest exponent with a nonzero coefficient, or order+1 when zero.
    int valuation() const;

    /// Exact coefficient of z^n; throws std::out_of_range when n is negative
    /// or beyond the truncation order.
    const MarkerPoly& coeff(int n) const;
    BigInt coeff2(int n, int m) const;
    void set_coeff(int n, MarkerPoly c);

    /// Same series known only up to z^new_order (new_order <= order).
    BiSeries truncated(int new_order) const;

    bool operator==(const BiSeries&) const = default;

private:
    int order_;
    std::vector<MarkerPoly> coeffs_;  // size order_ + 1
};

BiSeries series_add(const BiSeries& a, const BiSeries& b);
BiSeries series_mul(const BiSeries& a, const BiSeries& b);
BiSeries series_scale(const BiSeries& a, const BigInt& s);
/// Coefficient-wise product in z.
BiSeries hadamard(const BiSeries& a, const BiSeries& b);
/// Multiplies by z^k, k in {-1, +1}; the order moves by k. Shifting down
/// requires a zero constant term.
BiSeries z_shift(const BiSeries& a, int k);
/// z -> z^factor; the result is known up to order * factor, capped at max_order.
BiSeries z_dilate(const BiSeries& a, int factor, int max_order);
/// Replaces the marker t by t + offset in every coefficient.
BiSeries substitute_marker(const BiSeries& a, int offset);

inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return series_add(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return series_mul(a, b); }

}  // namespace sepstat
