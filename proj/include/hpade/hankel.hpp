#pragma once

#include "hpade/determinant.hpp"
#include "hpade/roots.hpp"
#include "hpade/series.hpp"

#include <optional>
#include <string>

namespace hpade {

// D x D determinant of entries c_{i+j+d-1}(E); consumes c_{d+1}..c_{2D+d-1}.
struct HankelSpec {
    int D = 2;
    int d = 0;
    int min_series_length() const { return 2 * D + d - 1; }
};

struct HankelRootRecord {
    Float value;
    Rational lo, hi;          // final certified bracket
    std::string backend;      // "float(P)" or "exact"
    bool exact_confirmed = false;
};

struct HankelDegenerateCandidate {
    Float location;
    Float magnitude;  // |H| at the dip
};

struct HankelResult {
    HankelSpec spec;
    std::vector<HankelRootRecord> roots;
    std::vector<HankelDegenerateCandidate> degenerate;
    Rational lo, hi;
};

struct PadeApproximant {
    std::vector<Float> numerator;    // a_0..a_{N+d}
    std::vector<Float> denominator;  // b_0..b_N, b_0 = 1
    Float residual;                  // leftover matching condition at order N+d+1
};

// Per-precision cache of the series coefficients converted to Float.
struct FloatSeries {
    unsigned precision;
    std::vector<std::vector<Float>> coeffs;
};

FloatSeries make_float_series(const SeriesTable& table, unsigned precision);

Rational hankel_eval_exact(const SeriesTable& table, const HankelSpec& spec,
                           const Rational& E);

int hankel_sign_exact(const SeriesTable& table, const HankelSpec& spec, const Rational& E);

Float hankel_eval_float(const FloatSeries& fs, const HankelSpec& spec, const Float& E);

// Exact determinant as a polynomial in E.  Feasible only for small D (the
// degree grows like D^2).
EPoly hankel_symbolic(const SeriesTable& table, const HankelSpec& spec);

// Same construction over an arbitrary coefficient list (e.g. symbolic a).
template <class P>
P hankel_symbolic_from(const std::vector<P>& c, const HankelSpec& spec) {
    if (static_cast<int>(c.size()) <= spec.min_series_length())
        throw std::invalid_argument("hankel: series too short, need J >= " +
                                    std::to_string(spec.min_series_length()));
    Matrix<P> m(static_cast<std::size_t>(spec.D),
                std::vector<P>(static_cast<std::size_t>(spec.D)));
    for (int i = 1; i <= spec.D; ++i)
        for (int j = 1; j <= spec.D; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                c[static_cast<std::size_t>(i + j + spec.d - 1)];
    return bareiss_determinant(std::move(m));
}

struct HankelRootOptions {
    unsigned precision = 256;      // Float digits for grid and bisection
    int grid_n = 200;              // grid cells over [lo, hi]
    // interior bisection signs fall back to exact arithmetic below this
    // relative magnitude; final brackets are always confirmed exactly
    int float_trust_digits = 40;
};

// Grid scan with the float backend, exact confirmation of every bracket,
// then bisection to tol (float signs, exact fallback near zero, exact
// certificate on the final bracket).
HankelResult hankel_roots(const SeriesTable& table, const HankelSpec& spec,
                          const Rational& lo, const Rational& hi, int grid_n,
                          const Rational& tol, const HankelRootOptions& opts = {});

// Pade numerator/denominator at energy E (which should be near a root of
// H_{N+1}^d for the system to be consistent).
PadeApproximant pade_coefficients(const SeriesTable& table, int N, int d, const Float& E,
                                  unsigned precision = 256);

}  // namespace hpade
