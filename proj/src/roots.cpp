#include "hpade/roots.hpp"

#include <algorithm>
#include <optional>

namespace hpade {

namespace {

Int int_content(const IPoly& p) {
    Int g = 0;
    for (const Int& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g;
}

IPoly divide_content(const IPoly& p) {
    if (p.is_zero()) return p;
    Int g = int_content(p);
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) out.push_back(Int(c / g));
    return IPoly(std::move(out));
}

// pseudo-remainder of f by g together with the sign of the implied multiplier
// lc(g)^k
std::pair<IPoly, int> pseudo_rem(IPoly f, const IPoly& g) {
    const Int& lc = g.leading();
    int mult_sign = 1;
    while (!f.is_zero() && f.degree() >= g.degree()) {
        Int top = f.leading();
        std::size_t shift = static_cast<std::size_t>(f.degree() - g.degree());
        f = f.scaled(lc) - g.shifted(shift).scaled(top);
        mult_sign *= lc.sign();
    }
    return {std::move(f), mult_sign};
}

EPoly to_rational_poly(const IPoly& p) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) out.emplace_back(c);
    return EPoly(std::move(out));
}

}  // namespace

IPoly make_integer_primitive(const EPoly& p) {
    if (p.is_zero()) return IPoly();
    Int l = 1;
    for (const Rational& q : p.coeffs())
        l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(q)));
    std::vector<Int> z;
    z.reserve(p.coeffs().size());
    for (const Rational& q : p.coeffs())
        z.push_back(Int(boost::multiprecision::numerator(q) *
                        (l / boost::multiprecision::denominator(q))));
    return divide_content(IPoly(std::move(z)));
}

std::vector<IPoly> sturm_chain(const IPoly& p) {
    std::vector<IPoly> chain;
    chain.push_back(p);
    if (p.degree() < 1) return chain;
    chain.push_back(divide_content(p.derivative()));
    while (chain.back().degree() > 0) {
        const IPoly& a = chain[chain.size() - 2];
        const IPoly& b = chain.back();
        auto [r, mult_sign] = pseudo_rem(a, b);
        if (r.is_zero()) break;
        // next element is -rem(a, b) up to a positive factor
        IPoly next = mult_sign > 0 ? -r : std::move(r);
        chain.push_back(divide_content(std::move(next)));
    }
    return chain;
}

int sign_variations_at(const std::vector<IPoly>& chain, const Rational& x) {
    int vars = 0;
    int last = 0;
    for (const IPoly& p : chain) {
        Rational v(0);
        for (std::size_t i = p.coeffs().size(); i-- > 0;)
            v = v * x + p.coeffs()[i];
        int s = v.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

int sturm_count(const std::vector<IPoly>& chain, const Rational& lo, const Rational& hi) {
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

EPoly poly_gcd(EPoly a, EPoly b) {
    IPoly f = make_integer_primitive(a);
    IPoly g = make_integer_primitive(b);
    if (f.is_zero()) return to_rational_poly(g);
    if (g.is_zero()) return to_rational_poly(f);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        auto [r, mult_sign] = pseudo_rem(f, g);
        (void)mult_sign;
        f = std::move(g);
        g = r.is_zero() ? IPoly() : divide_content(std::move(r));
    }
    if (f.leading() < 0) f = -f;
    return to_rational_poly(f);
}

std::vector<std::pair<EPoly, int>> squarefree_decomposition(const EPoly& p) {
    std::vector<std::pair<EPoly, int>> out;
    if (p.degree() < 1) return out;
    EPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    // Yun's algorithm
    EPoly w = p.divide_exact(g);
    EPoly y = p.derivative().divide_exact(g);
    EPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        EPoly gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = w.divide_exact(gi);
        y = z.divide_exact(gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

namespace {

struct FactorInterval {
    Rational lo, hi;
    int multiplicity;
    const IPoly* factor;  // square-free integer factor owning the root
};

// isolating intervals (and exactly hit roots) of a square-free factor
void isolate_factor(const IPoly& f, const std::vector<IPoly>& chain, int multiplicity,
                    const Rational& lo, const Rational& hi,
                    std::vector<FactorInterval>& intervals,
                    std::vector<std::pair<Rational, int>>& exact) {
    struct Item {
        Rational lo, hi;
        int count;
    };
    std::vector<Item> stack;
    int total = sturm_count(chain, lo, hi);
    if (total > 0) stack.push_back({lo, hi, total});
    auto eval_sign = [&f](const Rational& x) {
        Rational v(0);
        for (std::size_t i = f.coeffs().size(); i-- > 0;) v = v * x + f.coeffs()[i];
        return v.sign();
    };
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.count == 0) continue;
        if (it.count == 1) {
            intervals.push_back({it.lo, it.hi, multiplicity, &f});
            continue;
        }
        Rational m = dyadic_midpoint(it.lo, it.hi);
        if (eval_sign(m) == 0) {
            exact.emplace_back(m, multiplicity);
            // shrink an exclusion zone around m so the Sturm counts on the
            // two sides stay valid
            Rational eps = (it.hi - it.lo) / 16;
            while (eval_sign(m - eps) == 0 || eval_sign(m + eps) == 0 ||
                   sturm_count(chain, m - eps, m + eps) != 1)
                eps /= 2;
            int left = sturm_count(chain, it.lo, m - eps);
            int right = sturm_count(chain, m + eps, it.hi);
            if (left > 0) stack.push_back({it.lo, m - eps, left});
            if (right > 0) stack.push_back({m + eps, it.hi, right});
        } else {
            int left = sturm_count(chain, it.lo, m);
            if (left > 0) stack.push_back({it.lo, m, left});
            if (it.count - left > 0) stack.push_back({m, it.hi, it.count - left});
        }
    }
}

}  // namespace

IsolationResult isolate_real_roots(const EPoly& p_in, const Rational& lo_in,
                                   const Rational& hi_in) {
    if (p_in.is_zero())
        throw std::invalid_argument("zero polynomial has no isolated roots");
    if (!(lo_in < hi_in)) throw std::invalid_argument("isolate_real_roots: empty interval");

    IsolationResult result;
    EPoly p = p_in;
    // roots at the (excluded) endpoints would break Sturm counting: deflate
    for (const Rational& end : {lo_in, hi_in}) {
        EPoly lin({-end, Rational(1)});
        while (!p.is_zero() && p.eval_rational(end) == 0) p = p.divide_exact(lin);
    }
    if (p.degree() < 1) return result;

    auto factors = squarefree_decomposition(p);
    std::vector<IPoly> int_factors;
    int_factors.reserve(factors.size());
    for (auto& [f, m] : factors) int_factors.push_back(make_integer_primitive(f));

    std::vector<FactorInterval> intervals;
    std::vector<std::pair<Rational, int>> exact;  // (root, multiplicity)
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto chain = sturm_chain(int_factors[i]);
        isolate_factor(int_factors[i], chain, factors[i].second, lo_in, hi_in, intervals,
                       exact);
    }

    auto p_sign = [&p](const Rational& x) { return p.eval_rational(x).sign(); };
    auto factor_sign = [](const IPoly& f, const Rational& x) {
        Rational v(0);
        for (std::size_t i = f.coeffs().size(); i-- > 0;) v = v * x + f.coeffs()[i];
        return v.sign();
    };

    // Shrink every interval until (a) endpoints are not roots of p, (b) no
    // exact root lies inside, (c) intervals are pairwise disjoint.  Then each
    // interval encloses exactly one distinct root of p.
    auto bisect_once = [&](FactorInterval& iv) -> std::optional<Rational> {
        Rational m = dyadic_midpoint(iv.lo, iv.hi);
        int sm = factor_sign(*iv.factor, m);
        if (sm == 0) return m;  // hit the root exactly
        if (sm == factor_sign(*iv.factor, iv.lo))
            iv.lo = m;
        else
            iv.hi = m;
        return std::nullopt;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(intervals.begin(), intervals.end(),
                  [](const FactorInterval& a, const FactorInterval& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            auto& iv = intervals[i];
            bool bad = p_sign(iv.lo) == 0 || p_sign(iv.hi) == 0;
            if (!bad)
                for (const auto& [r, m] : exact)
                    if (iv.lo < r && r < iv.hi) { bad = true; break; }
            if (!bad && i + 1 < intervals.size() && intervals[i + 1].lo < iv.hi) bad = true;
            if (!bad && i > 0 && iv.lo < intervals[i - 1].hi) bad = true;
            if (bad) {
                if (auto hit = bisect_once(iv)) {
                    exact.emplace_back(*hit, iv.multiplicity);
                    intervals.erase(intervals.begin() + static_cast<long>(i));
                }
                changed = true;
                break;
            }
        }
    }

    for (const auto& iv : intervals) {
        if (iv.multiplicity % 2 == 1) {
            Bracket b{iv.lo, iv.hi, p_sign(iv.lo), p_sign(iv.hi)};
            // an odd-multiplicity isolated root must flip the sign of p
            if (b.sign_lo == b.sign_hi || b.sign_lo == 0)
                throw std::logic_error("isolate_real_roots: lost sign change");
            result.brackets.push_back(std::move(b));
        } else {
            result.degenerate.push_back({iv.lo, iv.hi, iv.multiplicity});
        }
    }
    for (const auto& [r, m] : exact) {
        if (m % 2 == 1)
            result.exact_roots.push_back(r);
        else
            result.degenerate.push_back({r, r, m});
    }
    std::sort(result.brackets.begin(), result.brackets.end(),
              [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
    std::sort(result.exact_roots.begin(), result.exact_roots.end());
    std::sort(result.degenerate.begin(), result.degenerate.end(),
              [](const DegeneratePoint& a, const DegeneratePoint& b) { return a.lo < b.lo; });
    return result;
}

RefinedRoot refine_root(const std::function<int(const Rational&)>& sign_at, Bracket b,
                        const Rational& tol, bool probe_simplest) {
    if (!(b.lo < b.hi) || b.sign_lo == 0 || b.sign_hi == 0 || b.sign_lo == b.sign_hi)
        throw std::invalid_argument("refine_root: invalid bracket");
    if (!(tol > 0)) throw std::invalid_argument("refine_root: tol must be positive");
    while (b.hi - b.lo >= tol) {
        if (probe_simplest) {
            Rational cand = simplest_rational_between(b.lo, b.hi);
            if (sign_at(cand) == 0) return {cand, b, true};
        }
        Rational m = dyadic_midpoint(b.lo, b.hi);
        int s = sign_at(m);
        if (s == 0) return {m, b, true};
        if (s == b.sign_lo)
            b.lo = m;
        else
            b.hi = m;
    }
    return {(b.lo + b.hi) / 2, b, false};
}

}  // namespace hpade
