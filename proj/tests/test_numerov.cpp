#include "hpade/numerov.hpp"
#include "hpade/potential.hpp"

#include <doctest.h>

using namespace hpade;

namespace {

std::function<Float(const Float&)> closed_form(const PotentialSpec& spec) {
    return [spec](const Float& x) { return potential_value(spec, x); };
}

}  // namespace

TEST_CASE("harmonic ground state to nine digits") {
    PrecisionGuard guard(30);
    ShootingConfig cfg;
    cfg.h = Rational(1, 200);
    Float E = numerov_eigenvalue(closed_form(polynomial_potential({Rational(1)})), cfg,
                                 Float("0.5"), Float("1.5"), Float("1e-14"));
    CHECK((abs(E - 1) < Float("1e-9")));
}

TEST_CASE("quartic ground state to nine digits") {
    PrecisionGuard guard(30);
    ShootingConfig cfg;
    Float E = numerov_eigenvalue(closed_form(polynomial_potential({Rational(0), Rational(1)})),
                                 cfg, Float("0.9"), Float("1.2"), Float("1e-14"));
    CHECK((abs(E - Float("1.0603620904841828996")) < Float("1e-9")));
}

TEST_CASE("rational potential g=1 ground state to nine digits") {
    PrecisionGuard guard(30);
    ShootingConfig cfg;
    Float E = numerov_eigenvalue(closed_form(expand_rational(Rational(1), Rational(1), 1)),
                                 cfg, Float("1.1"), Float("1.3"), Float("1e-14"));
    CHECK((abs(E - Float("1.23235072340605781386206995868")) < Float("1e-9")));
}

TEST_CASE("fourth-order convergence in h on the harmonic case") {
    PrecisionGuard guard(30);
    auto V = closed_form(polynomial_potential({Rational(1)}));
    auto err_at = [&](const Rational& h) {
        ShootingConfig cfg;
        cfg.h = h;
        Float E = numerov_eigenvalue(V, cfg, Float("0.5"), Float("1.5"), Float("1e-20"));
        return Float(abs(E - 1));
    };
    Float e_coarse = err_at(Rational(1, 64));
    Float e_fine = err_at(Rational(1, 128));
    REQUIRE(e_fine > 0);
    Float ratio = e_coarse / e_fine;
    CHECK((ratio > 10));
    CHECK((ratio < 24));
}

TEST_CASE("invalid bracket is rejected") {
    PrecisionGuard guard(30);
    ShootingConfig cfg;
    cfg.h = Rational(1, 100);
    CHECK_THROWS_WITH(numerov_eigenvalue(closed_form(polynomial_potential({Rational(1)})), cfg,
                                         Float("1.5"), Float("2.5"), Float("1e-12")),
                      "no eigenvalue isolated in bracket");
}
