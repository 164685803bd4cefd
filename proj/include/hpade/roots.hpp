#pragma once

#include "hpade/number.hpp"
#include "hpade/poly.hpp"

#include <functional>
#include <vector>

namespace hpade {

// A certified sign-change interval: lo < hi, sign_lo != sign_hi, both signs
// established in exact arithmetic.
struct Bracket {
    Rational lo;
    Rational hi;
    int sign_lo = 0;
    int sign_hi = 0;
};

// A real root of even multiplicity (no sign change to bracket).
struct DegeneratePoint {
    Rational lo;
    Rational hi;  // lo == hi when the root is known exactly
    int multiplicity = 0;
};

struct IsolationResult {
    std::vector<Bracket> brackets;       // one per odd-multiplicity real root
    std::vector<Rational> exact_roots;   // roots hit exactly during isolation
    std::vector<DegeneratePoint> degenerate;
};

struct RefinedRoot {
    Rational value;
    Bracket bracket;   // final enclosure (meaningless when exact)
    bool exact = false;
};

// content-normalized integer image of a rational polynomial (sign preserved)
IPoly make_integer_primitive(const EPoly& p);

// Sturm chain of a square-free integer polynomial.
std::vector<IPoly> sturm_chain(const IPoly& p);

int sign_variations_at(const std::vector<IPoly>& chain, const Rational& x);

// number of distinct real roots in (lo, hi]
int sturm_count(const std::vector<IPoly>& chain, const Rational& lo, const Rational& hi);

// gcd over Q[E], returned monic-free as a primitive-content representative
EPoly poly_gcd(EPoly a, EPoly b);

// Yun square-free decomposition: p = prod f_i^{m_i} with the f_i square-free
// and pairwise coprime.  Constant factors are dropped.
std::vector<std::pair<EPoly, int>> squarefree_decomposition(const EPoly& p);

// All distinct real roots of p in the open interval (lo, hi).  Odd
// multiplicity roots come back as certified Brackets (or exact values when a
// bisection point hits them), even multiplicity ones as DegeneratePoints.
IsolationResult isolate_real_roots(const EPoly& p, const Rational& lo, const Rational& hi);

// Exact-sign bisection with dyadic midpoints until hi - lo < tol.  When
// probe_simplest is set, the simplest rational inside the bracket is also
// tested each round, so low-denominator roots are recovered exactly.
RefinedRoot refine_root(const std::function<int(const Rational&)>& sign_at, Bracket b,
                        const Rational& tol, bool probe_simplest = false);

}  // namespace hpade
