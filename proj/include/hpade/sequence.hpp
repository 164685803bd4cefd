#pragma once

#include "hpade/number.hpp"
#include "hpade/potential.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hpade {

enum class Method { hill, hankel };

struct RootSequence {
    Method method = Method::hankel;
    std::vector<int> indices;   // strictly increasing M or D values
    std::vector<Float> values;  // aligned with indices
    int label = 0;
};

struct ConvergenceReport {
    Float limit_estimate;
    int stable_digits = 0;
    std::vector<double> self_diffs;  // log10 |E^[k+1] - E^[k]| (-inf when equal)
    double rate_slope = 0.0;         // least-squares digits-per-index
    std::optional<std::vector<double>> reference_error;
    bool converged_exactly = false;
};

struct WidthScan {
    std::vector<Rational> a_grid;
    // log10 |root - reference|; nullopt when no root was found for that a
    std::vector<std::optional<double>> errors;
    int M = 0;
    Rational best_a;
};

// Greedy nearest-neighbor chaining of per-order root lists into labeled
// sequences.  window <= 0 selects the default: 10x the median successive-root
// gap at the first index.
std::vector<RootSequence> match_sequences(const std::map<int, std::vector<Float>>& per_index,
                                          Float window, Method method = Method::hankel);

ConvergenceReport convergence_report(const RootSequence& seq,
                                     const std::optional<Float>& reference = std::nullopt);

// Smallest final self-difference among sequences of length >= 3 (falls back
// to the longest sequence when none qualifies).  Returns index into seqs.
std::size_t best_sequence(const std::vector<RootSequence>& seqs);

WidthScan scan_width_parameter(Method method, const PotentialSpec& potential, int M,
                               const std::vector<Rational>& a_grid, const Float& reference,
                               const Rational& lo, const Rational& hi, const Rational& tol);

}  // namespace hpade
