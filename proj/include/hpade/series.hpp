#pragma once

#include "hpade/poly.hpp"
#include "hpade/potential.hpp"

#include <vector>

namespace hpade {

struct SeriesParams {
    Rational a;  // Gaussian width parameter
    int s = 0;   // parity index, 0 even / 1 odd
    int J = 1;   // highest coefficient index generated
};

// Energy-polynomial coefficients c_0..c_J of psi = exp(-a x^2) sum c_j x^(2j+s).
struct SeriesTable {
    SeriesParams params;
    PotentialSpec potential;
    std::vector<EPoly> c;
};

// Core recurrence, generic in the coefficient ring R so the width parameter
// can be a number (R = Rational) or left symbolic (R = APoly):
//   c_{j+1} = [ (2a(4j+2s+1) - E) c_j - 4a^2 c_{j-1} + sum_{k=1..j} v_k c_{j-k} ]
//             / ((2j+2+s)(2j+1+s)),   c_0 given, c_{-1} = 0.
template <class R>
std::vector<Poly<R>> generate_series_coeffs(const PotentialSpec& potential, const R& a,
                                            int s, int J, const R& c0) {
    if (s != 0 && s != 1) throw std::invalid_argument("parity index s must be 0 or 1");
    if (J < 1) throw std::invalid_argument("series length J must be >= 1");
    std::vector<Poly<R>> c;
    c.reserve(static_cast<std::size_t>(J) + 1);
    c.push_back(Poly<R>::constant(c0));
    R four_a_sq = a * a;
    if constexpr (is_poly<R>::value)
        four_a_sq = four_a_sq.scaled_q(Rational(4));
    else
        four_a_sq = four_a_sq * 4;
    for (int j = 0; j < J; ++j) {
        const Poly<R>& cur = c[static_cast<std::size_t>(j)];
        R drift = a;  // 2a(4j+2s+1)
        Rational factor(2 * (4 * j + 2 * s + 1));
        if constexpr (is_poly<R>::value)
            drift = drift.scaled_q(factor);
        else
            drift = drift * factor;
        Poly<R> next = cur.scaled(drift) - cur.shifted(1);
        if (j >= 1) next = next - c[static_cast<std::size_t>(j - 1)].scaled(four_a_sq);
        for (int k = 1; k <= j; ++k) {
            Rational vk = potential.coefficient(k);
            if (vk == 0) continue;
            next = next + c[static_cast<std::size_t>(j - k)].scaled_q(vk);
        }
        Rational denom(static_cast<long>(2 * j + 2 + s) * (2 * j + 1 + s));
        c.push_back(next.scaled_q(1 / denom));
    }
    return c;
}

SeriesTable generate_series(const PotentialSpec& potential, const SeriesParams& params,
                            const Rational& c0 = Rational(1));

// c_j as polynomials in E whose coefficients are polynomials in a
std::vector<BiPoly> generate_series_symbolic_a(const PotentialSpec& potential, int s, int J);

// Substitutes the truncated series at E into the transformed equation
//   phi'' - 4ax phi' + (4a^2 x^2 - 2a + E - V) phi
// and returns the largest |coefficient| of x^(2j+s) for j <= J-1.  Zero for
// every valid table.
Rational residual_check(const SeriesTable& table, const Rational& E_sample);

}  // namespace hpade
