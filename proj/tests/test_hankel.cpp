#include "hpade/hankel.hpp"
#include "hpade/series.hpp"

#include <doctest.h>

#include <random>

using namespace hpade;

namespace {

SeriesTable quartic_table(const Rational& a, int J) {
    return generate_series(polynomial_potential({Rational(0), Rational(1)}),
                           SeriesParams{a, 0, J});
}

SeriesTable harmonic_table(int J) {
    return generate_series(polynomial_potential({Rational(1)}),
                           SeriesParams{Rational(1, 2), 0, J});
}

}  // namespace

TEST_CASE("first quartic Hankel determinant, width parameter symbolic") {
    auto c = generate_series_symbolic_a(polynomial_potential({Rational(0), Rational(1)}), 0, 3);
    BiPoly h = hankel_symbolic_from(c, HankelSpec{2, 0});
    // a/30 - a^4/12 - E/60 + E a^3/6 - E^2 a^2/8 + 7 E^3 a/360 - E^4/960
    BiPoly expect({APoly({Rational(0), Rational(1, 30), Rational(0), Rational(0),
                          Rational(-1, 12)}),
                   APoly({Rational(-1, 60), Rational(0), Rational(0), Rational(1, 6)}),
                   APoly({Rational(0), Rational(0), Rational(-1, 8)}),
                   APoly({Rational(0), Rational(7, 360)}),
                   APoly({Rational(-1, 960)})});
    CHECK(h == expect);
}

TEST_CASE("hankel evaluation agrees with the a=0 specialization of the first determinant") {
    SeriesTable t = quartic_table(Rational(0), 3);
    EPoly h = hankel_symbolic(t, HankelSpec{2, 0});
    CHECK(h == EPoly({Rational(0), Rational(-1, 60), Rational(0), Rational(0),
                      Rational(-1, 960)}));
    CHECK(hankel_eval_exact(t, HankelSpec{2, 0}, Rational(1)) == Rational(-17, 960));
    // independent c_1 c_3 - c_2^2 assembly
    EPoly byhand = t.c[1] * t.c[3] - t.c[2] * t.c[2];
    CHECK(byhand == h);
}

TEST_CASE("harmonic determinants vanish identically at E=1") {
    SeriesTable t = harmonic_table(12);
    for (int D : {2, 3, 4})
        for (int d : {0, 1, 2})
            CHECK(hankel_eval_exact(t, HankelSpec{D, d}, Rational(1)) == 0);
    EPoly h2 = hankel_symbolic(t, HankelSpec{2, 0});
    CHECK(h2.eval_rational(Rational(1)) == 0);  // (E-1) divides it
    CHECK_FALSE(h2.divide_exact(EPoly({Rational(-1), Rational(1)})).is_zero());
}

TEST_CASE("float backend tracks the exact backend") {
    SeriesTable t = quartic_table(Rational(1), 20);
    const unsigned P = 60;
    PrecisionGuard guard(P);
    FloatSeries fs = make_float_series(t, P);
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> dim(2, 8);
    for (int trial = 0; trial < 15; ++trial) {
        Rational E(num(rng), den(rng));
        HankelSpec spec{dim(rng), trial % 3};
        if (spec.min_series_length() > 20) continue;
        Rational exact = hankel_eval_exact(t, spec, E);
        Float approx = hankel_eval_float(fs, spec, Float(E));
        Float scale = max(Float(abs(Float(exact))), Float(1));
        Float diff = abs(approx - Float(exact));
        Float bound = scale * pow(Float(10), 10 - static_cast<int>(P));
        CHECK(diff <= bound);
    }
}

TEST_CASE("normalization invariance: c_0 = kappa scales the determinant by kappa^D") {
    PotentialSpec pot = polynomial_potential({Rational(0), Rational(1)});
    SeriesParams params{Rational(1), 0, 9};
    SeriesTable base = generate_series(pot, params);
    SeriesTable scaled = generate_series(pot, params, Rational(3));
    for (int D = 2; D <= 4; ++D) {
        EPoly hb = hankel_symbolic(base, HankelSpec{D, 0});
        EPoly hs = hankel_symbolic(scaled, HankelSpec{D, 0});
        Rational kD(1);
        for (int i = 0; i < D; ++i) kD *= 3;
        CHECK(hs == hb.scaled(kD));
    }
}

TEST_CASE("hankel_roots on the quartic") {
    Rational tol = parse_rational("1e-20");
    HankelRootOptions opts;
    opts.precision = 80;

    // a=0, D=2: -E/60 - E^4/960 is strictly negative on (0,4)
    SeriesTable t0 = quartic_table(Rational(0), 3);
    HankelResult none = hankel_roots(t0, HankelSpec{2, 0}, Rational(0), Rational(4), 100, tol,
                                     opts);
    CHECK(none.roots.empty());

    // a=1, D=2: E = 2/3 exactly (hand-checked in the symbolic H_2^0 at a=1) plus one
    // root inside (0.7, 0.8)
    SeriesTable t1 = quartic_table(Rational(1), 30);
    HankelResult one = hankel_roots(t1, HankelSpec{2, 0}, Rational(0), Rational(4), 100, tol,
                                    opts);
    REQUIRE(one.roots.size() == 2);
    CHECK((abs(one.roots[0].value - Float(2) / 3) < Float("1e-19")));
    CHECK(one.roots[1].value > Float("0.7"));
    CHECK(one.roots[1].value < Float("0.8"));
    for (const auto& r : one.roots) {
        CHECK(r.exact_confirmed);
        CHECK((r.hi - r.lo <= tol));
    }

    // deep determinants: the root cluster flanks the eigenvalue inside a
    // single grid cell, so these exercise the dip probes
    PrecisionGuard guard(80);
    opts.precision = 128;
    Float ref("1.0603620904841828996");
    auto nearest = [&](int D) {
        HankelResult deep = hankel_roots(t1, HankelSpec{D, 0}, Rational(9, 10),
                                         Rational(6, 5), 100, parse_rational("1e-25"), opts);
        REQUIRE(!deep.roots.empty());
        Float best = deep.roots[0].value;
        for (const auto& r : deep.roots)
            if (abs(r.value - ref) < abs(best - ref)) best = r.value;
        return Float(abs(best - ref));
    };
    CHECK((nearest(13) < Float("1e-10")));
    CHECK((nearest(15) < Float("1e-12")));
}

TEST_CASE("series-too-short errors name the requirement") {
    SeriesTable t = quartic_table(Rational(1), 4);
    CHECK_THROWS(hankel_eval_exact(t, HankelSpec{3, 0}, Rational(1)));
    CHECK_THROWS(hankel_symbolic(t, HankelSpec{3, 1}));
}

TEST_CASE("pade_coefficients") {
    const unsigned P = 60;
    PrecisionGuard guard(P);

    // harmonic at E=1: series is identically the Gaussian, c_j = 0 for j >= 1
    SeriesTable h = harmonic_table(6);
    PadeApproximant ph = pade_coefficients(h, 1, 0, Float(1), P);
    REQUIRE(ph.numerator.size() == 2);
    REQUIRE(ph.denominator.size() == 2);
    CHECK(ph.numerator[0] == 1);
    CHECK((abs(ph.numerator[1]) < Float("1e-50")));
    CHECK(ph.denominator[0] == 1);
    CHECK((abs(ph.denominator[1]) < Float("1e-50")));

    // quartic a=1: at the H_2^0 root the N=1 system is consistent
    SeriesTable q = quartic_table(Rational(1), 10);
    HankelRootOptions opts;
    opts.precision = P;
    HankelResult r = hankel_roots(q, HankelSpec{2, 0}, Rational(0), Rational(4), 100,
                                  parse_rational("1e-45"), opts);
    REQUIRE(r.roots.size() == 2);
    PadeApproximant good = pade_coefficients(q, 1, 0, r.roots.back().value, P);
    CHECK((abs(good.residual) < pow(Float(10), 20 - static_cast<int>(P))));

    // far from a root the matching condition fails
    PadeApproximant bad = pade_coefficients(q, 1, 0, Float(2), P);
    CHECK((abs(bad.residual) > Float("1e-6")));
}
