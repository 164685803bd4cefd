#pragma once

#include "hpade/number.hpp"
#include "hpade/poly.hpp"

#include <vector>

namespace hpade {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Bareiss elimination.  Every division is exact in the
// coefficient ring, so T may be Int, Rational, or Poly<...>.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    if (n == 1) return m[0][0];

    int sign = 1;
    T prev = [] {
        if constexpr (is_poly<T>::value)
            return T::constant_one();
        else
            return T(1);
    }();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && ring_is_zero(m[piv][k])) ++piv;
        if (piv == n) {
            if constexpr (is_poly<T>::value)
                return T();
            else
                return T(0);
        }
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = T(m[k][k] * m[i][j]) - T(m[i][k] * m[k][j]);
                m[i][j] = ring_div_exact(num, prev);
            }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

// Exact determinant of a rational matrix: clears denominators row-wise and
// runs integer Bareiss, which keeps intermediates far smaller than rational
// elimination.
Rational det_exact(const Matrix<Rational>& m);

template <class T>
Poly<T> det_exact(const Matrix<Poly<T>>& m) {
    return bareiss_determinant(m);
}

// Sign of the exact determinant of a rational matrix (same elimination, the
// row scalings are positive so the integer sign is the answer).
int det_sign_exact(const Matrix<Rational>& m);

// LU with partial pivoting in the current Float precision.
Float det_float(Matrix<Float> m);

}  // namespace hpade
