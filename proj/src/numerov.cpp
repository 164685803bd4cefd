#include "hpade/numerov.hpp"

#include <vector>

namespace hpade {

namespace {

long step_count(const ShootingConfig& config) {
    if (!(config.x_max > 0)) throw std::invalid_argument("numerov: x_max must be positive");
    if (!(config.h > 0) || !(config.h < config.x_max))
        throw std::invalid_argument("numerov: need 0 < h < x_max");
    Rational steps = config.x_max / config.h;
    if (boost::multiprecision::denominator(steps) != 1)
        throw std::invalid_argument("numerov: x_max / h must be an integer");
    return static_cast<long>(Int(boost::multiprecision::numerator(steps)));
}

std::vector<Float> sample_potential(const std::function<Float(const Float&)>& potential,
                                    const ShootingConfig& config, long n) {
    Float h(config.h);
    std::vector<Float> vs(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) vs[static_cast<std::size_t>(i)] = potential(h * i);
    return vs;
}

Float shoot_cached(const std::vector<Float>& vs, const ShootingConfig& config, long n,
                   const Float& E) {
    Float h(config.h);
    Float h2 = h * h;
    Float f0 = vs[0] - E;
    // V''(0) for the series start, from the even symmetry of V
    Float v2 = 2 * (vs[1] - vs[0]) / h2;

    Float y_prev, y_cur;
    if (config.parity == Parity::even) {
        y_prev = 1;
        y_cur = 1 + f0 * h2 / 2 + (f0 * f0 + v2) * h2 * h2 / 24;
    } else {
        y_prev = 0;
        y_cur = h + f0 * h * h2 / 6 + (3 * v2 + f0 * f0) * h * h2 * h2 / 120;
    }

    Float c = h2 / 12;
    Float f_prev = f0;
    Float f_cur = vs[1] - E;
    for (long i = 1; i < n; ++i) {
        Float f_next = vs[static_cast<std::size_t>(i) + 1] - E;
        Float y_next = (2 * (1 + 5 * c * f_cur) * y_cur - (1 - c * f_prev) * y_prev) /
                       (1 - c * f_next);
        y_prev = y_cur;
        y_cur = y_next;
        f_prev = f_cur;
        f_cur = f_next;
    }
    return y_cur;
}

}  // namespace

Float numerov_shoot(const std::function<Float(const Float&)>& potential,
                    const ShootingConfig& config, const Float& E) {
    PrecisionGuard guard(config.precision);
    long n = step_count(config);
    return shoot_cached(sample_potential(potential, config, n), config, n, E);
}

Float numerov_eigenvalue(const std::function<Float(const Float&)>& potential,
                         const ShootingConfig& config, const Float& E_lo,
                         const Float& E_hi, const Float& e_tol) {
    PrecisionGuard guard(config.precision);
    if (!(E_lo < E_hi)) throw std::invalid_argument("numerov: empty energy bracket");
    long n = step_count(config);
    std::vector<Float> vs = sample_potential(potential, config, n);

    Float lo = E_lo, hi = E_hi;
    int slo = shoot_cached(vs, config, n, lo) < 0 ? -1 : 1;
    int shi = shoot_cached(vs, config, n, hi) < 0 ? -1 : 1;
    if (slo == shi) throw std::runtime_error("no eigenvalue isolated in bracket");
    while (hi - lo >= e_tol) {
        Float mid = (lo + hi) / 2;
        Float v = shoot_cached(vs, config, n, mid);
        if (v == 0) return mid;
        if ((v < 0 ? -1 : 1) == slo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace hpade
