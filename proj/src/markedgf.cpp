#include "sepstat/markedgf.hpp"

#include <stdexcept>
#include <vector>

namespace sepstat {

BiSeries run_block_series(int order)
{
    BiSeries s(order);
    if (order >= 1)
        s.set_coeff(1, MarkerPoly(1));
    for (int j = 2; j <= order; ++j)
        s.set_coeff(j, MarkerPoly::monomial(2, j - 1));
    return s;
}

BiSeries bond_marked_gf(int order)
{
    const BiSeries block = run_block_series(order);
    BiSeries power = BiSeries::constant(order, MarkerPoly(1));
    BiSeries total = power;
    // block has valuation 1, so block^m starts at z^m.
    for (int m = 1; m <= order; ++m) {
        power = power * block;
        total = total + series_scale(power, factorial(m));
    }
    return total;
}

BiSeries bond_gf(int order)
{
    return substitute_marker(bond_marked_gf(order), -1);
}

BiSeries vertical_marked_gf(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be non-negative");

    // Odd-length terms are [P_mo / z] * [z P_me] = ([P_mo] * [z^2 P_me]) / z, so
    // every factor is carried one order higher and nothing below z^0 is formed.
    const int work = order + 1;
    const BiSeries block = z_dilate(run_block_series(work), 2, work);

    // P_m = block^m has valuation 2m.
    std::vector<BiSeries> powers{BiSeries::constant(work, MarkerPoly(1))};
    while (2 * static_cast<int>(powers.size()) <= work)
        powers.push_back(powers.back() * block);
    const int max_m = static_cast<int>(powers.size()) - 1;

    std::vector<BiSeries> raised;  // z^2 P_m at order `work`
    raised.reserve(powers.size());
    for (const auto& p : powers) {
        if (work >= 2)
            raised.push_back(z_shift(z_shift(p.truncated(work - 2), 1), 1));
        else
            raised.emplace_back(work);
    }

    BiSeries even_sum(order);
    BiSeries odd_sum(work);
    for (int mo = 0; mo <= max_m; ++mo) {
        for (int me = 0; me <= max_m; ++me) {
            const BigInt weight = factorial(mo + me);
            even_sum = even_sum + series_scale(hadamard(powers[mo], powers[me]).truncated(order), weight);
            // P_0 = 1 never meets z^2 P_me, whose valuation is at least 2.
            if (mo > 0)
                odd_sum = odd_sum + series_scale(hadamard(powers[mo], raised[me]), weight);
        }
    }
    return even_sum + z_shift(odd_sum, -1);
}

BiSeries vertical_sep_gf(int order)
{
    return substitute_marker(vertical_marked_gf(order), -1);
}

}  // namespace sepstat
