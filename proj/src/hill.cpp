#include "hpade/hill.hpp"

#include <algorithm>

namespace hpade {

HillResult hill_roots(const SeriesTable& table, int M, const Rational& lo,
                      const Rational& hi, const Rational& tol) {
    if (M > table.params.J) throw std::invalid_argument("series too short");
    if (M < 1) throw std::invalid_argument("hill_roots: M must be >= 1");
    const EPoly& p = table.c[static_cast<std::size_t>(M)];
    HillResult result;
    result.M = M;
    result.lo = lo;
    result.hi = hi;
    auto isolated = isolate_real_roots(p, lo, hi);
    auto sign_at = [&p](const Rational& e) { return p.eval_rational(e).sign(); };
    for (const Bracket& b : isolated.brackets) {
        RefinedRoot r = refine_root(sign_at, b, tol, /*probe_simplest=*/true);
        result.roots.push_back({r.value, r.bracket, r.exact});
    }
    for (const Rational& r : isolated.exact_roots)
        result.roots.push_back({r, Bracket{r, r, 0, 0}, true});
    std::sort(result.roots.begin(), result.roots.end(),
              [](const HillRoot& a, const HillRoot& b) { return a.value < b.value; });
    return result;
}

std::vector<HillResult> hill_sequence(const SeriesTable& table, int M_min, int M_max,
                                      const Rational& lo, const Rational& hi,
                                      const Rational& tol) {
    if (M_max > table.params.J) throw std::invalid_argument("series too short");
    std::vector<HillResult> out;
    out.reserve(static_cast<std::size_t>(std::max(0, M_max - M_min + 1)));
    for (int M = M_min; M <= M_max; ++M) out.push_back(hill_roots(table, M, lo, hi, tol));
    return out;
}

}  // namespace hpade
