#include "hpade/series.hpp"

namespace hpade {

SeriesTable generate_series(const PotentialSpec& potential, const SeriesParams& params,
                            const Rational& c0) {
    SeriesTable table;
    table.params = params;
    table.potential = potential;
    table.c = generate_series_coeffs<Rational>(potential, params.a, params.s, params.J, c0);
    return table;
}

std::vector<BiPoly> generate_series_symbolic_a(const PotentialSpec& potential, int s, int J) {
    APoly a = APoly::variable();
    return generate_series_coeffs<APoly>(potential, a, s, J, APoly::constant_one());
}

Rational residual_check(const SeriesTable& table, const Rational& E_sample) {
    const int J = table.params.J;
    const int s = table.params.s;
    const Rational& a = table.params.a;

    std::vector<Rational> gamma(static_cast<std::size_t>(J) + 1);
    for (int j = 0; j <= J; ++j)
        gamma[static_cast<std::size_t>(j)] =
            table.c[static_cast<std::size_t>(j)].eval_rational(E_sample);
    EPoly phi{std::vector<Rational>(gamma)};  // in y = x^2, the x^s factor stripped

    // phi'' collected on x^(2j+s): (2j+2+s)(2j+1+s) gamma_{j+1} at y^j
    std::vector<Rational> d2(static_cast<std::size_t>(J));
    for (int j = 0; j < J; ++j)
        d2[static_cast<std::size_t>(j)] =
            gamma[static_cast<std::size_t>(j + 1)] *
            Rational(static_cast<long>(2 * j + 2 + s) * (2 * j + 1 + s));
    EPoly second(std::move(d2));

    // -4ax phi': coefficient (2j+s) gamma_j at y^j, scaled by -4a
    std::vector<Rational> xd(static_cast<std::size_t>(J) + 1);
    for (int j = 0; j <= J; ++j)
        xd[static_cast<std::size_t>(j)] =
            gamma[static_cast<std::size_t>(j)] * Rational(2 * j + s);
    EPoly drift = EPoly(std::move(xd)).scaled(-4 * a);

    // (4a^2 y - 2a + E) phi
    EPoly gauss = EPoly({E_sample - 2 * a, 4 * a * a}) * phi;

    // -V phi with the truncated expansion of V
    std::vector<Rational> vy(table.potential.v.size() + 1, Rational(0));
    for (std::size_t k = 0; k < table.potential.v.size(); ++k)
        vy[k + 1] = table.potential.v[k];
    EPoly pot_term = -(EPoly(std::move(vy)) * phi);

    EPoly residual = second + drift + gauss + pot_term;
    Rational worst(0);
    for (int j = 0; j < J; ++j) {
        Rational r = abs(residual.coeff(static_cast<std::size_t>(j)));
        if (r > worst) worst = r;
    }
    return worst;
}

}  // namespace hpade
