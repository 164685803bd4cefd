#pragma once

#include "hpade/number.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hpade {

enum class PotentialKind { polynomial, rational_truncated };

// Even-power expansion V(x) = sum_{k>=1} v_k x^{2k}.  For the truncated
// rational potential x^2 + lambda x^2/(1+g x^2) the stored coefficients are
// v_1 = 1+lambda, v_k = lambda(-g)^{k-1}.
struct PotentialSpec {
    std::vector<Rational> v;  // v[k-1] holds v_k
    PotentialKind kind = PotentialKind::polynomial;
    std::optional<Rational> lambda;
    std::optional<Rational> g;
    int truncation_order = 0;  // highest k materialized (rational kind)

    // v_k; 0 beyond the stored list for polynomial potentials, an error for a
    // rational potential truncated too early
    Rational coefficient(int k) const;
};

struct PoleInfo {
    Float radius;
    std::string location_description;
};

PotentialSpec polynomial_potential(std::vector<Rational> coeffs);

PotentialSpec expand_rational(const Rational& lambda, const Rational& g, int J);

PoleInfo pole_radius(const PotentialSpec& spec);

// V(x) in closed form (the true potential, not its truncation)
Float potential_value(const PotentialSpec& spec, const Float& x);

}  // namespace hpade
