#pragma once

#include "hpade/number.hpp"

#include <functional>

namespace hpade {

enum class Parity { even, odd };

struct ShootingConfig {
    Rational x_max = Rational(12);
    Rational h = Rational(1, 512);  // x_max / h must be an integer
    Parity parity = Parity::even;
    unsigned precision = 30;  // decimal digits for the integration
};

// Value of the outward-integrated wavefunction at x_max for trial energy E.
// Bisection on its sign isolates an eigenvalue.
Float numerov_shoot(const std::function<Float(const Float&)>& potential,
                    const ShootingConfig& config, const Float& E);

// Ground-state-style eigenvalue by bisection on the boundary value; the
// bracket must straddle a sign change of the shot.
Float numerov_eigenvalue(const std::function<Float(const Float&)>& potential,
                         const ShootingConfig& config, const Float& E_lo,
                         const Float& E_hi, const Float& e_tol);

}  // namespace hpade
