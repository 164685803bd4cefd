#include "hpade/potential.hpp"

namespace hpade {

Rational PotentialSpec::coefficient(int k) const {
    if (k < 1) throw std::invalid_argument("potential coefficient index must be >= 1");
    if (k <= static_cast<int>(v.size())) return v[static_cast<std::size_t>(k - 1)];
    if (kind == PotentialKind::rational_truncated)
        throw std::invalid_argument("potential truncated before v_" + std::to_string(k) +
                                    "; raise the truncation order");
    return Rational(0);
}

PotentialSpec polynomial_potential(std::vector<Rational> coeffs) {
    bool any = false;
    for (const Rational& c : coeffs) any = any || c != 0;
    if (coeffs.empty() || !any) throw std::invalid_argument("free particle not supported");
    PotentialSpec spec;
    spec.v = std::move(coeffs);
    spec.kind = PotentialKind::polynomial;
    return spec;
}

PotentialSpec expand_rational(const Rational& lambda, const Rational& g, int J) {
    if (!(g > 0)) throw std::invalid_argument("pole structure undefined for g <= 0");
    if (J < 1) throw std::invalid_argument("truncation order must be >= 1");
    PotentialSpec spec;
    spec.kind = PotentialKind::rational_truncated;
    spec.lambda = lambda;
    spec.g = g;
    spec.truncation_order = J;
    spec.v.reserve(static_cast<std::size_t>(J));
    spec.v.push_back(1 + lambda);
    Rational term = lambda;
    for (int k = 2; k <= J; ++k) {
        term *= -g;
        spec.v.push_back(term);
    }
    return spec;
}

PoleInfo pole_radius(const PotentialSpec& spec) {
    if (spec.kind != PotentialKind::rational_truncated)
        throw std::invalid_argument("entire potential has no finite poles");
    return {1 / sqrt(Float(*spec.g)), "±i/√g on imaginary axis"};
}

Float potential_value(const PotentialSpec& spec, const Float& x) {
    Float x2 = x * x;
    if (spec.kind == PotentialKind::rational_truncated)
        return x2 + Float(*spec.lambda) * x2 / (1 + Float(*spec.g) * x2);
    Float acc = 0;
    for (std::size_t i = spec.v.size(); i-- > 0;) acc = acc * x2 + Float(spec.v[i]);
    return acc * x2;
}

}  // namespace hpade
