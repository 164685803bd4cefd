#include "hpade/sequence.hpp"

#include "hpade/hankel.hpp"
#include "hpade/hill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace hpade {

namespace {

double log10_abs(const Float& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(log10(abs(x)));
}

}  // namespace

std::vector<RootSequence> match_sequences(const std::map<int, std::vector<Float>>& per_index,
                                          Float window, Method method) {
    if (per_index.size() < 2)
        throw std::invalid_argument("match_sequences: need at least two indices");

    if (window <= 0) {
        // default: 10x the median successive-root gap at the first index
        const auto& first = per_index.begin()->second;
        std::vector<Float> sorted = first;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Float> gaps;
        for (std::size_t i = 1; i < sorted.size(); ++i)
            gaps.push_back(sorted[i] - sorted[i - 1]);
        if (gaps.empty()) {
            window = std::numeric_limits<double>::max();
        } else {
            std::sort(gaps.begin(), gaps.end());
            window = 10 * gaps[gaps.size() / 2];
        }
    }

    std::vector<RootSequence> seqs;
    int prev_key = 0;
    bool first_key = true;
    for (const auto& [key, roots_in] : per_index) {
        std::vector<Float> roots = roots_in;
        std::sort(roots.begin(), roots.end());
        if (first_key) {
            for (const Float& r : roots) {
                RootSequence s;
                s.method = method;
                s.label = static_cast<int>(seqs.size());
                s.indices.push_back(key);
                s.values.push_back(r);
                seqs.push_back(std::move(s));
            }
            first_key = false;
            prev_key = key;
            continue;
        }
        // candidate links: roots at this index vs sequences ending at prev_key
        struct Link {
            Float dist;
            Float root;
            std::size_t root_idx;
            std::size_t seq_idx;
        };
        std::vector<Link> links;
        for (std::size_t ri = 0; ri < roots.size(); ++ri)
            for (std::size_t si = 0; si < seqs.size(); ++si) {
                if (seqs[si].indices.back() != prev_key) continue;
                Float d = abs(roots[ri] - seqs[si].values.back());
                if (d <= window) links.push_back({d, roots[ri], ri, si});
            }
        std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
            return std::tie(a.dist, a.root) < std::tie(b.dist, b.root);
        });
        std::vector<bool> root_used(roots.size(), false);
        std::vector<bool> seq_used(seqs.size(), false);
        for (const Link& l : links) {
            if (root_used[l.root_idx] || seq_used[l.seq_idx]) continue;
            root_used[l.root_idx] = true;
            seq_used[l.seq_idx] = true;
            seqs[l.seq_idx].indices.push_back(key);
            seqs[l.seq_idx].values.push_back(roots[l.root_idx]);
        }
        for (std::size_t ri = 0; ri < roots.size(); ++ri) {
            if (root_used[ri]) continue;
            RootSequence s;
            s.method = method;
            s.label = static_cast<int>(seqs.size());
            s.indices.push_back(key);
            s.values.push_back(roots[ri]);
            seqs.push_back(std::move(s));
        }
        prev_key = key;
    }
    return seqs;
}

ConvergenceReport convergence_report(const RootSequence& seq,
                                     const std::optional<Float>& reference) {
    if (seq.values.size() < 3)
        throw std::invalid_argument("convergence_report: sequence length must be >= 3");
    ConvergenceReport rep;
    rep.limit_estimate = seq.values.back();
    for (std::size_t i = 1; i < seq.values.size(); ++i)
        rep.self_diffs.push_back(log10_abs(seq.values[i] - seq.values[i - 1]));

    rep.converged_exactly = true;
    for (double d : rep.self_diffs)
        if (std::isfinite(d)) rep.converged_exactly = false;

    double last_finite = -std::numeric_limits<double>::infinity();
    for (double d : rep.self_diffs)
        if (std::isfinite(d)) last_finite = d;
    if (std::isfinite(rep.self_diffs.back()))
        rep.stable_digits = static_cast<int>(std::floor(-rep.self_diffs.back()));
    else if (rep.converged_exactly || !std::isfinite(last_finite))
        rep.stable_digits = 9999;  // converged exactly
    else
        rep.stable_digits = static_cast<int>(std::floor(-last_finite));

    // least squares of self_diff against the index it was observed at
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < rep.self_diffs.size(); ++i) {
        if (!std::isfinite(rep.self_diffs[i])) continue;
        double x = static_cast<double>(seq.indices[i + 1]);
        double y = rep.self_diffs[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n >= 2 && sxx * n - sx * sx != 0)
        rep.rate_slope = (sxy * n - sx * sy) / (sxx * n - sx * sx);

    if (reference) {
        std::vector<double> err;
        err.reserve(seq.values.size());
        for (const Float& v : seq.values) err.push_back(log10_abs(v - *reference));
        rep.reference_error = std::move(err);
    }
    return rep;
}

std::size_t best_sequence(const std::vector<RootSequence>& seqs) {
    if (seqs.empty()) throw std::invalid_argument("best_sequence: no sequences");
    std::size_t best = seqs.size();
    double best_diff = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        if (seqs[i].values.size() < 3) continue;
        const auto& v = seqs[i].values;
        double d = log10_abs(v[v.size() - 1] - v[v.size() - 2]);
        if (d < best_diff) {
            best_diff = d;
            best = i;
        }
    }
    if (best != seqs.size()) return best;
    // fallback: longest sequence
    best = 0;
    for (std::size_t i = 1; i < seqs.size(); ++i)
        if (seqs[i].values.size() > seqs[best].values.size()) best = i;
    return best;
}

WidthScan scan_width_parameter(Method method, const PotentialSpec& potential, int M,
                               const std::vector<Rational>& a_grid, const Float& reference,
                               const Rational& lo, const Rational& hi, const Rational& tol) {
    if (a_grid.empty()) throw std::invalid_argument("scan_width_parameter: empty a grid");
    if (method == Method::hankel && M % 2 == 0)
        throw std::invalid_argument("scan_width_parameter: hankel budget needs odd M = 2D-1");
    WidthScan scan;
    scan.a_grid = a_grid;
    scan.M = M;
    double best_err = std::numeric_limits<double>::infinity();
    bool have_best = false;
    for (const Rational& a : a_grid) {
        SeriesParams params{a, 0, M};
        SeriesTable table = generate_series(potential, params);
        std::vector<Float> roots;
        if (method == Method::hill) {
            HillResult hr = hill_roots(table, M, lo, hi, tol);
            for (const auto& r : hr.roots) roots.emplace_back(r.value);
        } else {
            HankelSpec spec{(M + 1) / 2, 0};
            HankelResult res = hankel_roots(table, spec, lo, hi, 200, tol);
            for (const auto& r : res.roots) roots.push_back(r.value);
        }
        if (roots.empty()) {
            scan.errors.push_back(std::nullopt);
            continue;
        }
        Float best_root = roots.front();
        for (const Float& r : roots)
            if (abs(r - reference) < abs(best_root - reference)) best_root = r;
        double err = log10_abs(best_root - reference);
        scan.errors.push_back(err);
        if (err < best_err || !have_best) {
            best_err = err;
            scan.best_a = a;
            have_best = true;
        }
    }
    if (!have_best)
        throw std::runtime_error("scan_width_parameter: no roots found on any grid point");
    return scan;
}

}  // namespace hpade
