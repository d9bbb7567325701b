#include "sepstat/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sepstat {

BigInt factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative number");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

// ---------------------------------------------------------------------------
// MarkerPoly

MarkerPoly::MarkerPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

MarkerPoly::MarkerPoly(long long constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

MarkerPoly MarkerPoly::monomial(BigInt c, int power)
{
    if (power < 0)
        throw std::invalid_argument("negative marker power");
    std::vector<BigInt> v(power + 1);
    v[power] = std::move(c);
    return MarkerPoly(std::move(v));
}

void MarkerPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt MarkerPoly::coefficient(int m) const
{
    if (m < 0 || m >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[m];
}

BigInt MarkerPoly::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

MarkerPoly MarkerPoly::shifted(int offset) const
{
    if (offset == 0 || is_zero())
        return *this;
    // Horner in the shifted variable: q(t + c) = (...(a_d (t+c) + a_{d-1})(t+c) ...).
    std::vector<BigInt> out(coeffs_.size());
    const BigInt c = offset;
    for (int i = degree(); i >= 0; --i) {
        // out <- out * (t + c) + a_i
        for (int j = degree(); j >= 1; --j)
            out[j] = out[j] * c + out[j - 1];
        out[0] = out[0] * c + coeffs_[i];
    }
    return MarkerPoly(std::move(out));
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

MarkerPoly& MarkerPoly::operator*=(const BigInt& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return MarkerPoly(std::move(out));
}

std::string MarkerPoly::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::string s;
    for (int m = 0; m <= degree(); ++m) {
        const BigInt& c = coeffs_[m];
        if (c == 0)
            continue;
        std::string term = (c < 0 ? BigInt(-c) : c).str();
        if (m > 0) {
            if (term == "1")
                term.clear();
            term += var;
            if (m > 1)
                term += "^" + std::to_string(m);
        }
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

// ---------------------------------------------------------------------------
// BiSeries

namespace {

void require_same_order(const BiSeries& a, const BiSeries& b, const char* op)
{
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

}  // namespace

BiSeries::BiSeries(int order) : order_(order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be non-negative, got " + std::to_string(order));
    coeffs_.resize(order + 1);
}

BiSeries::BiSeries(int order, std::vector<MarkerPoly> coeffs) : BiSeries(order)
{
    if (static_cast<int>(coeffs.size()) > order + 1)
        coeffs.resize(order + 1);
    std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

BiSeries BiSeries::constant(int order, MarkerPoly c)
{
    return monomial(order, 0, std::move(c));
}

BiSeries BiSeries::monomial(int order, int exponent, MarkerPoly c)
{
    BiSeries s(order);
    if (exponent < 0)
        throw std::invalid_argument("negative z exponent");
    if (exponent <= order)
        s.coeffs_[exponent] = std::move(c);
    return s;
}

BiSeries BiSeries::geometric(int order)
{
    return BiSeries(order, std::vector<MarkerPoly>(order + 1, MarkerPoly(1)));
}

int BiSeries::valuation() const
{
    for (int n = 0; n <= order_; ++n)
        if (!coeffs_[n].is_zero())
            return n;
    return order_ + 1;
}

const MarkerPoly& BiSeries::coeff(int n) const
{
    if (n < 0 || n > order_)
        throw std::out_of_range("coefficient of z^" + std::to_string(n) + " requested from a series truncated at z^" +
                                std::to_string(order_));
    return coeffs_[n];
}

BigInt BiSeries::coeff2(int n, int m) const
{
    return coeff(n).coefficient(m);
}

void BiSeries::set_coeff(int n, MarkerPoly c)
{
    if (n < 0 || n > order_)
        throw std::out_of_range("z^" + std::to_string(n) + " outside series order " + std::to_string(order_));
    coeffs_[n] = std::move(c);
}

BiSeries BiSeries::truncated(int new_order) const
{
    if (new_order > order_)
        throw std::invalid_argument("cannot extend a series from order " + std::to_string(order_) + " to " +
                                    std::to_string(new_order));
    return BiSeries(new_order, std::vector<MarkerPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

BiSeries series_add(const BiSeries& a, const BiSeries& b)
{
    require_same_order(a, b, "series_add");
    BiSeries out = a;
    for (int n = 0; n <= a.order(); ++n)
        out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

BiSeries series_mul(const BiSeries& a, const BiSeries& b)
{
    require_same_order(a, b, "series_mul");
    const int order = a.order();
    BiSeries out(order);
    const int va = a.valuation();
    const int vb = b.valuation();
    for (int n = va + vb; n <= order; ++n) {
        MarkerPoly acc;
        for (int i = va; i <= n - vb; ++i) {
            const MarkerPoly& x = a.coeff(i);
            const MarkerPoly& y = b.coeff(n - i);
            if (!x.is_zero() && !y.is_zero())
                acc += x * y;
        }
        out.set_coeff(n, std::move(acc));
    }
    return out;
}

BiSeries series_scale(const BiSeries& a, const BigInt& s)
{
    BiSeries out = a;
    for (int n = 0; n <= a.order(); ++n)
        out.set_coeff(n, a.coeff(n) * s);
    return out;
}

BiSeries hadamard(const BiSeries& a, const BiSeries& b)
{
    require_same_order(a, b, "hadamard");
    BiSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n)
        out.set_coeff(n, a.coeff(n) * b.coeff(n));
    return out;
}

BiSeries z_shift(const BiSeries& a, int k)
{
    if (k == 1) {
        BiSeries out(a.order() + 1);
        for (int n = 0; n <= a.order(); ++n)
            out.set_coeff(n + 1, a.coeff(n));
        return out;
    }
    if (k == -1) {
        if (!a.coeff(0).is_zero())
            throw std::domain_error("z_shift: cannot divide by z, constant term is " + a.coeff(0).to_string());
        if (a.order() == 0)
            throw std::domain_error("z_shift: nothing is known about a series of order 0 after division by z");
        BiSeries out(a.order() - 1);
        for (int n = 1; n <= a.order(); ++n)
            out.set_coeff(n - 1, a.coeff(n));
        return out;
    }
    throw std::invalid_argument("z_shift: k must be -1 or +1, got " + std::to_string(k));
}

BiSeries z_dilate(const BiSeries& a, int factor, int max_order)
{
    if (factor < 1)
        throw std::invalid_argument("z_dilate: factor must be positive");
    // Exponents strictly between multiples of factor are known zeros up to the
    // next unknown multiple, factor * (order + 1).
    const int known = factor * (a.order() + 1) - 1;
    const int order = std::min(known, max_order);
    BiSeries out(order);
    for (int n = 0; n * factor <= order; ++n)
        out.set_coeff(n * factor, a.coeff(n));
    return out;
}

BiSeries substitute_marker(const BiSeries& a, int offset)
{
    BiSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n)
        out.set_coeff(n, a.coeff(n).shifted(offset));
    return out;
}

}  // namespace sepstat
