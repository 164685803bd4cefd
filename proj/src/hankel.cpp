#include "hpade/hankel.hpp"

#include <algorithm>

namespace hpade {

namespace {

void require_length(const SeriesTable& table, const HankelSpec& spec) {
    if (table.params.J < spec.min_series_length())
        throw std::invalid_argument("hankel: series too short, need J >= " +
                                    std::to_string(spec.min_series_length()));
}

Matrix<Rational> exact_matrix(const SeriesTable& table, const HankelSpec& spec,
                              const Rational& E) {
    std::vector<Rational> vals(static_cast<std::size_t>(spec.min_series_length()) + 1);
    for (int j = spec.d + 1; j <= spec.min_series_length(); ++j)
        vals[static_cast<std::size_t>(j)] =
            table.c[static_cast<std::size_t>(j)].eval_rational(E);
    Matrix<Rational> m(static_cast<std::size_t>(spec.D),
                       std::vector<Rational>(static_cast<std::size_t>(spec.D)));
    for (int i = 1; i <= spec.D; ++i)
        for (int j = 1; j <= spec.D; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                vals[static_cast<std::size_t>(i + j + spec.d - 1)];
    return m;
}

}  // namespace

FloatSeries make_float_series(const SeriesTable& table, unsigned precision) {
    PrecisionGuard guard(precision);
    FloatSeries fs;
    fs.precision = precision;
    fs.coeffs.reserve(table.c.size());
    for (const EPoly& p : table.c) {
        std::vector<Float> row;
        row.reserve(p.coeffs().size());
        for (const Rational& q : p.coeffs()) row.emplace_back(q);
        fs.coeffs.push_back(std::move(row));
    }
    return fs;
}

Rational hankel_eval_exact(const SeriesTable& table, const HankelSpec& spec,
                           const Rational& E) {
    require_length(table, spec);
    return det_exact(exact_matrix(table, spec, E));
}

int hankel_sign_exact(const SeriesTable& table, const HankelSpec& spec, const Rational& E) {
    require_length(table, spec);
    return det_sign_exact(exact_matrix(table, spec, E));
}

Float hankel_eval_float(const FloatSeries& fs, const HankelSpec& spec, const Float& E) {
    PrecisionGuard guard(fs.precision);
    if (static_cast<int>(fs.coeffs.size()) <= spec.min_series_length())
        throw std::invalid_argument("hankel: series too short");
    std::vector<Float> vals(static_cast<std::size_t>(spec.min_series_length()) + 1);
    for (int j = spec.d + 1; j <= spec.min_series_length(); ++j) {
        const auto& cs = fs.coeffs[static_cast<std::size_t>(j)];
        Float acc = 0;
        for (std::size_t i = cs.size(); i-- > 0;) acc = acc * E + cs[i];
        vals[static_cast<std::size_t>(j)] = acc;
    }
    Matrix<Float> m(static_cast<std::size_t>(spec.D),
                    std::vector<Float>(static_cast<std::size_t>(spec.D)));
    for (int i = 1; i <= spec.D; ++i)
        for (int j = 1; j <= spec.D; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                vals[static_cast<std::size_t>(i + j + spec.d - 1)];
    return det_float(std::move(m));
}

EPoly hankel_symbolic(const SeriesTable& table, const HankelSpec& spec) {
    require_length(table, spec);
    return hankel_symbolic_from(table.c, spec);
}

namespace {

// Grid scan plus descent probes.  A pair of roots flanking an eigenvalue
// leaves no net sign change on a uniform grid, only a sharp dip in |H|.
// Every sign-uniform local minimum of the samples (and the leftover
// intervals beside each refined root) is probed by shrinking toward the
// minimum of s*H: a real pair eventually exposes a sign flip, a benign
// minimum stagnates at a positive value, and a dip that survives below
// tol is reported as a degenerate candidate.
class RootScanner {
public:
    RootScanner(const SeriesTable& table, const HankelSpec& spec, const FloatSeries& fs,
                const HankelRootOptions& opts, const Rational& tol, const Rational& lo,
                const Rational& hi)
        : table_(table), spec_(spec), fs_(fs), opts_(opts), tol_(tol), window_lo_(lo),
          window_hi_(hi),
          backend_tag_("float(" + std::to_string(opts.precision) + ")") {}

    void run(int grid_n) {
        // the grid pass fixes the absolute trust floor for every probe
        Rational step = (window_hi_ - window_lo_) / grid_n;
        std::vector<Rational> grid(static_cast<std::size_t>(grid_n) + 1);
        std::vector<Float> val(grid.size());
        Float scale = 0;
        for (int i = 0; i <= grid_n; ++i) {
            grid[static_cast<std::size_t>(i)] = window_lo_ + step * i;
            val[static_cast<std::size_t>(i)] = feval(grid[static_cast<std::size_t>(i)]);
            scale = std::max(scale, Float(abs(val[static_cast<std::size_t>(i)])));
        }
        if (scale == 0) scale = 1;
        trust_floor_ = scale * pow(Float(10), -static_cast<int>(opts_.precision) +
                                                  opts_.float_trust_digits);
        scan(grid, val);
        finish();
    }

    std::vector<HankelRootRecord> roots;
    std::vector<HankelDegenerateCandidate> degenerate;

private:
    Float feval(const Rational& e) { return hankel_eval_float(fs_, spec_, Float(e)); }

    int exact_sign(const Rational& e) { return hankel_sign_exact(table_, spec_, e); }

    int sign_of(const Rational& e, const Float& v) {
        if (abs(v) > trust_floor_) return v < 0 ? -1 : 1;
        return exact_sign(e);
    }

    void record_exact(const Rational& e) {
        if (e == window_lo_ || e == window_hi_) return;  // open window
        roots.push_back({Float(e), e, e, "exact", true});
    }

    void scan(const std::vector<Rational>& grid, const std::vector<Float>& val) {
        const std::size_t n = grid.size();
        std::vector<int> sgn(n);
        for (std::size_t i = 0; i < n; ++i) sgn[i] = sign_of(grid[i], val[i]);

        for (std::size_t i = 0; i < n; ++i) {
            if (sgn[i] == 0) {
                record_exact(grid[i]);
                continue;
            }
            if (i + 1 < n && sgn[i + 1] != 0 && sgn[i] != sgn[i + 1])
                resolve(grid[i], grid[i + 1], sgn[i], sgn[i + 1]);
        }

        // sign-uniform local minima of s * H are where an even number of
        // roots can hide between samples
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (sgn[i - 1] != sgn[i] || sgn[i] != sgn[i + 1] || sgn[i] == 0) continue;
            Float s(sgn[i]);
            if (Float(s * val[i]) < Float(s * val[i - 1]) &&
                Float(s * val[i]) <= Float(s * val[i + 1]))
                probe(grid[i - 1], grid[i + 1], sgn[i]);
        }
    }

    // Bisect out one root of a sign-changing interval, then probe the
    // leftover side intervals: a cell can hold further roots in pairs on
    // either side of the one bisection isolated.
    void resolve(const Rational& lo, const Rational& hi, int slo, int shi,
                 std::vector<Rational> defl = {}) {
        if (slo == shi) {
            probe(lo, hi, slo, std::move(defl));
            return;
        }
        std::size_t before = roots.size();
        refine(Bracket{lo, hi, slo, shi});
        if (roots.size() == before + 1) {
            Rational rlo = roots.back().lo, rhi = roots.back().hi;
            defl.push_back(rlo < rhi ? dyadic_midpoint(rlo, rhi) : rlo);
            probe(lo, rlo, slo, defl);
            probe(rhi, hi, shi, std::move(defl));
        }
    }

    // Shrink [lo, hi] toward the minimum of s * H (both endpoints have sign
    // s).  A real root pair makes the minimum cross zero at some width, at
    // which point the sign flips bracket it; a minimum that stops improving
    // is a benign positive one; one still unresolved below tol is reported
    // as a degenerate candidate.  Known roots at or near the endpoints are
    // deflated out of the descent values (signs are untouched), otherwise
    // the descent would collapse into the endpoint zero instead of finding
    // interior dips.
    void probe(Rational lo, Rational hi, int s, std::vector<Rational> defl = {}) {
        if (!(lo < hi)) return;
        Float vbest;
        bool have_best = false;
        int stall = 0;
        while (hi - lo >= tol_) {
            Rational mid = dyadic_midpoint(lo, hi);
            Rational pts[3] = {dyadic_midpoint(lo, mid), mid, dyadic_midpoint(mid, hi)};
            Float sv[3];
            int sg[3];
            for (int k = 0; k < 3; ++k) {
                Float v = feval(pts[k]);
                sg[k] = sign_of(pts[k], v);
                if (sg[k] == 0) {
                    record_exact(pts[k]);
                    return;
                }
                sv[k] = Float(s) * v;
                for (const Rational& r : defl) {
                    Rational dist = pts[k] - r;
                    Float d = abs(Float(dist));
                    if (d > 0) sv[k] /= d;
                }
            }
            if (sg[0] != s || sg[1] != s || sg[2] != s) {
                // every quarter segment can still hold further pairs
                resolve(lo, pts[0], s, sg[0], defl);
                resolve(pts[0], pts[1], sg[0], sg[1], defl);
                resolve(pts[1], pts[2], sg[1], sg[2], defl);
                resolve(pts[2], hi, sg[2], s, std::move(defl));
                return;
            }
            int j = 0;
            if (sv[1] < sv[j]) j = 1;
            if (sv[2] < sv[j]) j = 2;
            // near a real pair the minimum shrinks at least 4x per halving,
            // so a plateau means the limit is positive
            if (have_best && !(sv[j] < vbest * Float("0.9"))) {
                if (++stall >= 8) return;
            } else {
                stall = 0;
            }
            if (!have_best || sv[j] < vbest) {
                vbest = sv[j];
                have_best = true;
            }
            if (j == 0)
                hi = mid;
            else if (j == 2)
                lo = mid;
            else {
                lo = pts[0];
                hi = pts[2];
            }
        }
        Float mag = have_best ? Float(abs(vbest)) : Float(abs(feval(dyadic_midpoint(lo, hi))));
        degenerate.push_back({Float(dyadic_midpoint(lo, hi)), mag});
    }

    void refine(Bracket b) {
        const Bracket original = b;
        while (b.hi - b.lo >= tol_) {
            Rational m = dyadic_midpoint(b.lo, b.hi);
            Float vm = feval(m);
            int sm = sign_of(m, vm);
            if (sm == 0) {
                record_exact(m);
                return;
            }
            if (sm == b.sign_lo)
                b.lo = m;
            else
                b.hi = m;
        }
        // exact certificate on the final bracket; fall back to exact-sign
        // bisection from the original bracket if the float path drifted
        int flo = exact_sign(b.lo);
        int fhi = exact_sign(b.hi);
        if (flo == 0) {
            record_exact(b.lo);
            return;
        }
        if (fhi == 0) {
            record_exact(b.hi);
            return;
        }
        if (flo == fhi) {
            auto es = [this](const Rational& e) { return exact_sign(e); };
            RefinedRoot r = refine_root(es, original, tol_);
            if (r.exact)
                record_exact(r.value);
            else
                roots.push_back({Float(r.value), r.bracket.lo, r.bracket.hi, "exact", true});
            return;
        }
        b.sign_lo = flo;
        b.sign_hi = fhi;
        Rational center = (b.lo + b.hi) / 2;
        roots.push_back({Float(center), b.lo, b.hi, backend_tag_, true});
    }

    void finish() {
        std::sort(roots.begin(), roots.end(),
                  [](const HankelRootRecord& a, const HankelRootRecord& b) {
                      return a.value < b.value;
                  });
        // overlapping probes can rediscover the same root; certified
        // brackets of distinct roots never overlap
        roots.erase(std::unique(roots.begin(), roots.end(),
                                [](const HankelRootRecord& a, const HankelRootRecord& b) {
                                    return b.lo <= a.hi && a.lo <= b.hi;
                                }),
                    roots.end());
        std::sort(degenerate.begin(), degenerate.end(),
                  [](const HankelDegenerateCandidate& a, const HankelDegenerateCandidate& b) {
                      return a.location < b.location;
                  });
    }

    const SeriesTable& table_;
    const HankelSpec& spec_;
    const FloatSeries& fs_;
    const HankelRootOptions& opts_;
    Rational tol_;
    Rational window_lo_, window_hi_;
    std::string backend_tag_;
    Float trust_floor_;
};

}  // namespace

HankelResult hankel_roots(const SeriesTable& table, const HankelSpec& spec,
                          const Rational& lo, const Rational& hi, int grid_n,
                          const Rational& tol, const HankelRootOptions& opts) {
    require_length(table, spec);
    if (!(lo < hi)) throw std::invalid_argument("hankel_roots: empty interval");
    if (grid_n < 2) throw std::invalid_argument("hankel_roots: grid_n must be >= 2");
    PrecisionGuard guard(opts.precision);
    FloatSeries fs = make_float_series(table, opts.precision);

    HankelResult result;
    result.spec = spec;
    result.lo = lo;
    result.hi = hi;

    RootScanner scanner(table, spec, fs, opts, tol, lo, hi);
    scanner.run(grid_n);
    result.roots = std::move(scanner.roots);
    result.degenerate = std::move(scanner.degenerate);
    return result;
}

PadeApproximant pade_coefficients(const SeriesTable& table, int N, int d, const Float& E,
                                  unsigned precision) {
    if (N < 1 || d < 0) throw std::invalid_argument("pade: need N >= 1, d >= 0");
    if (table.params.J < 2 * N + d + 1)
        throw std::invalid_argument("pade: series too short, need J >= " +
                                    std::to_string(2 * N + d + 1));
    PrecisionGuard guard(precision);

    std::vector<Float> c(static_cast<std::size_t>(2 * N + d + 2));
    for (int j = 0; j <= 2 * N + d + 1; ++j) {
        const EPoly& p = table.c[static_cast<std::size_t>(j)];
        Float acc = 0;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * E + Float(p.coeffs()[i]);
        c[static_cast<std::size_t>(j)] = acc;
    }

    // rows: sum_{m=1..N} c_{t-m} b_m = -c_t  for t = N+d+2 .. 2N+d+1
    Matrix<Float> A(static_cast<std::size_t>(N), std::vector<Float>(static_cast<std::size_t>(N)));
    std::vector<Float> rhs(static_cast<std::size_t>(N));
    Float max_entry = 0;
    for (int r = 0; r < N; ++r) {
        int t = N + d + 2 + r;
        for (int m = 1; m <= N; ++m) {
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(m - 1)] =
                c[static_cast<std::size_t>(t - m)];
            max_entry = std::max(max_entry,
                                 Float(abs(c[static_cast<std::size_t>(t - m)])));
        }
        rhs[static_cast<std::size_t>(r)] = -c[static_cast<std::size_t>(t)];
        max_entry = std::max(max_entry, Float(abs(c[static_cast<std::size_t>(t)])));
    }
    Float pivot_floor =
        std::max(max_entry, Float(1)) * pow(Float(10), -static_cast<int>(precision) + 15);

    // Gaussian elimination with partial pivoting; negligible pivots with
    // negligible right-hand sides become free variables set to zero
    std::vector<Float> b(static_cast<std::size_t>(N) + 1, Float(0));
    b[0] = 1;
    const std::size_t n = static_cast<std::size_t>(N);
    std::vector<std::size_t> col_of_row(n);
    for (std::size_t k = 0; k < n; ++k) col_of_row[k] = k;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(A[i][k]) > abs(A[piv][k])) piv = i;
        if (abs(A[piv][k]) < pivot_floor) {
            if (abs(rhs[piv]) > pivot_floor)
                throw std::runtime_error("Pade system singular at this E");
            continue;  // free variable, stays zero
        }
        std::swap(A[piv], A[k]);
        std::swap(rhs[piv], rhs[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            Float f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        if (abs(A[k][k]) < pivot_floor) continue;
        Float acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= A[k][j] * b[j + 1];
        b[k + 1] = acc / A[k][k];
    }

    PadeApproximant pade;
    pade.denominator = b;
    pade.numerator.resize(static_cast<std::size_t>(N + d) + 1);
    for (int t = 0; t <= N + d; ++t) {
        Float acc = 0;
        for (int m = 0; m <= std::min(t, N); ++m)
            acc += b[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(t - m)];
        pade.numerator[static_cast<std::size_t>(t)] = acc;
    }
    Float res = 0;
    for (int m = 0; m <= std::min(N + d + 1, N); ++m)
        res += b[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(N + d + 1 - m)];
    pade.residual = abs(res);
    return pade;
}

}  // namespace hpade
