#include "hpade/series.hpp"

#include <doctest.h>

#include <random>

using namespace hpade;

namespace {

PotentialSpec quartic() { return polynomial_potential({Rational(0), Rational(1)}); }
PotentialSpec harmonic() { return polynomial_potential({Rational(1)}); }

}  // namespace

TEST_CASE("symbolic-a coefficients match the quartic table") {
    auto c = generate_series_symbolic_a(quartic(), 0, 3);
    // c_1 = a - E/2
    BiPoly c1({APoly({Rational(0), Rational(1)}), APoly({Rational(-1, 2)})});
    CHECK(c[1] == c1);
    // c_2 = a^2/2 - Ea/2 + E^2/24
    BiPoly c2({APoly({Rational(0), Rational(0), Rational(1, 2)}),
               APoly({Rational(0), Rational(-1, 2)}), APoly({Rational(1, 24)})});
    CHECK(c[2] == c2);
}

TEST_CASE("harmonic series at a=1/2 truncates at E=1") {
    SeriesTable t = generate_series(harmonic(), SeriesParams{Rational(1, 2), 0, 8});
    CHECK(t.c[0] == EPoly::identity());
    CHECK(t.c[1] == EPoly({Rational(1, 2), Rational(-1, 2)}));
    CHECK(t.c[2] == (EPoly({Rational(5), Rational(-1)}) *
                     EPoly({Rational(1), Rational(-1)})).scaled(Rational(1, 24)));
    for (int j = 1; j <= 8; ++j)
        CHECK(t.c[static_cast<std::size_t>(j)].eval_rational(Rational(1)) == 0);
}

TEST_CASE("quartic a=0 third coefficient") {
    SeriesTable t = generate_series(quartic(), SeriesParams{Rational(0), 0, 3});
    // c_3 = (1 - E^3/24)/30
    CHECK(t.c[3] == EPoly({Rational(1, 30), Rational(0), Rational(0), Rational(-1, 720)}));
}

TEST_CASE("degree of c_j equals j") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> v{Rational(coef(rng)), Rational(coef(rng)), Rational(1)};
        PotentialSpec pot = polynomial_potential(v);
        for (int s : {0, 1}) {
            SeriesTable t = generate_series(pot, SeriesParams{Rational(coef(rng), 4), s, 9});
            for (int j = 0; j <= 9; ++j)
                CHECK(t.c[static_cast<std::size_t>(j)].degree() == j);
        }
    }
}

TEST_CASE("residual_check vanishes for valid tables and catches corruption") {
    SeriesTable h = generate_series(harmonic(), SeriesParams{Rational(1, 2), 0, 6});
    CHECK(residual_check(h, Rational(1)) == 0);

    SeriesTable q = generate_series(quartic(), SeriesParams{Rational(1), 0, 10});
    CHECK(residual_check(q, Rational(17, 13)) == 0);

    std::mt19937 rng(29);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Rational> v{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        if (v[0] == 0 && v[1] == 0) v[1] = 1;
        PotentialSpec pot = polynomial_potential(v);
        SeriesParams params{Rational(num(rng), den(rng)), trial % 2, 7};
        SeriesTable t = generate_series(pot, params);
        CHECK(residual_check(t, Rational(num(rng), den(rng))) == 0);
    }

    SeriesTable bad = q;
    bad.c[5] = bad.c[5] + EPoly::constant(Rational(1, 1000));
    CHECK(residual_check(bad, Rational(2)) != 0);
}

TEST_CASE("recurrence is linear in the normalization") {
    SeriesTable base = generate_series(quartic(), SeriesParams{Rational(3, 4), 0, 7});
    SeriesTable scaled = generate_series(quartic(), SeriesParams{Rational(3, 4), 0, 7},
                                         Rational(3));
    for (int j = 0; j <= 7; ++j)
        CHECK(scaled.c[static_cast<std::size_t>(j)] ==
              base.c[static_cast<std::size_t>(j)].scaled(Rational(3)));
}

TEST_CASE("series preconditions") {
    CHECK_THROWS(generate_series(quartic(), SeriesParams{Rational(0), 2, 4}));
    CHECK_THROWS(generate_series(quartic(), SeriesParams{Rational(0), 0, 0}));
    // rational potential truncated shorter than the requested series
    PotentialSpec rat = expand_rational(Rational(1), Rational(1, 10), 3);
    CHECK_THROWS(generate_series(rat, SeriesParams{Rational(1, 2), 0, 6}));
}
