#include "hpade/determinant.hpp"

namespace hpade {

namespace {

// row-wise denominator clearing; returns the integer matrix and the product
// of the (positive) row scalings
std::pair<Matrix<Int>, Int> clear_denominators(const Matrix<Rational>& m) {
    Matrix<Int> zm(m.size());
    Int scale = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int l = 1;
        for (const auto& q : m[i])
            l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(q)));
        zm[i].reserve(m[i].size());
        for (const auto& q : m[i])
            zm[i].push_back(Int(boost::multiprecision::numerator(q) *
                                (l / boost::multiprecision::denominator(q))));
        scale *= l;
    }
    return {std::move(zm), scale};
}

}  // namespace

Rational det_exact(const Matrix<Rational>& m) {
    if (m.size() == 1) return m[0][0];
    auto [zm, scale] = clear_denominators(m);
    Int det = bareiss_determinant(std::move(zm));
    return Rational(det, scale);
}

int det_sign_exact(const Matrix<Rational>& m) {
    auto [zm, scale] = clear_denominators(m);
    (void)scale;
    return bareiss_determinant(std::move(zm)).sign();
}

Float det_float(Matrix<Float> m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    int sign = 1;
    Float det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(m[i][k]) > abs(m[piv][k])) piv = i;
        if (m[piv][k] == 0) return Float(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Float f = m[i][k] / m[k][k];
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return sign < 0 ? Float(-det) : det;
}

}  // namespace hpade
