#pragma once

#include "hpade/roots.hpp"
#include "hpade/series.hpp"

namespace hpade {

struct HillRoot {
    Rational value;
    Bracket bracket;
    bool exact = false;  // found as an exact rational root
};

struct HillResult {
    int M = 0;
    std::vector<HillRoot> roots;  // sorted ascending
    Rational lo, hi;
};

// All real roots of c_M(E) in (lo, hi), Sturm-isolated and refined to tol.
HillResult hill_roots(const SeriesTable& table, int M, const Rational& lo,
                      const Rational& hi, const Rational& tol);

std::vector<HillResult> hill_sequence(const SeriesTable& table, int M_min, int M_max,
                                      const Rational& lo, const Rational& hi,
                                      const Rational& tol);

}  // namespace hpade
