#include "hpade/sequence.hpp"

#include <doctest.h>

#include <cmath>

using namespace hpade;

TEST_CASE("match_sequences chains nearest neighbors") {
    std::map<int, std::vector<Float>> roots{
        {1, {Float("1.0"), Float("3.0")}},
        {2, {Float("1.1"), Float("2.9")}},
        {3, {Float("1.05"), Float("2.95")}},
    };
    auto seqs = match_sequences(roots, Float("0.5"));
    REQUIRE(seqs.size() == 2);
    for (const auto& s : seqs) {
        CHECK(s.indices == std::vector<int>{1, 2, 3});
        CHECK(s.values.size() == 3);
    }

    // single root per index -> one sequence
    std::map<int, std::vector<Float>> single{{2, {Float(1)}}, {3, {Float("1.01")}},
                                             {4, {Float("1.001")}}};
    auto one = match_sequences(single, Float(0));
    REQUIRE(one.size() == 1);
    CHECK(one[0].indices == std::vector<int>{2, 3, 4});
}

TEST_CASE("match_sequences partitions the input multiset") {
    std::map<int, std::vector<Float>> roots{
        {3, {Float("0.5"), Float("2.0"), Float("4.0")}},
        {4, {Float("0.6"), Float("1.9")}},
        {5, {Float("0.55"), Float("1.95"), Float("3.9"), Float("5.5")}},
    };
    auto seqs = match_sequences(roots, Float(0));
    std::size_t total = 0;
    for (const auto& s : seqs) {
        CHECK(s.indices.size() == s.values.size());
        for (std::size_t i = 1; i < s.indices.size(); ++i)
            CHECK(s.indices[i] > s.indices[i - 1]);
        total += s.values.size();
    }
    CHECK(total == 9);
}

TEST_CASE("convergence_report on a geometric sequence") {
    RootSequence seq;
    seq.method = Method::hill;
    PrecisionGuard guard(40);
    for (int k = 1; k <= 12; ++k) {
        seq.indices.push_back(k);
        seq.values.push_back(Float(1) + pow(Float(2), -k));
    }
    ConvergenceReport rep = convergence_report(seq);
    CHECK(std::abs(rep.rate_slope + std::log10(2.0)) < 1e-6);
    CHECK(rep.limit_estimate == seq.values.back());
    CHECK_FALSE(rep.converged_exactly);
    CHECK(rep.self_diffs.size() == 11);

    ConvergenceReport with_ref = convergence_report(seq, Float(1));
    REQUIRE(with_ref.reference_error.has_value());
    CHECK(with_ref.reference_error->size() == 12);
    CHECK(std::abs(with_ref.reference_error->front() + std::log10(2.0)) < 1e-10);
}

TEST_CASE("constant sequences converge exactly") {
    RootSequence seq;
    seq.indices = {2, 3, 4, 5};
    seq.values = {Float(1), Float(1), Float(1), Float(1)};
    ConvergenceReport rep = convergence_report(seq);
    CHECK(rep.converged_exactly);
    CHECK(rep.limit_estimate == 1);
}

TEST_CASE("best_sequence prefers the smallest final self-difference") {
    RootSequence fast;
    fast.label = 0;
    fast.indices = {1, 2, 3, 4};
    fast.values = {Float("1.1"), Float("1.01"), Float("1.001"), Float("1.0001")};
    RootSequence slow;
    slow.label = 1;
    slow.indices = {1, 2, 3, 4};
    slow.values = {Float("3.5"), Float("3.1"), Float("2.9"), Float("2.8")};
    RootSequence tiny;  // too short to qualify
    tiny.label = 2;
    tiny.indices = {1, 2};
    tiny.values = {Float(7), Float(7)};
    std::vector<RootSequence> seqs{slow, tiny, fast};
    CHECK(best_sequence(seqs) == 2);
}

TEST_CASE("scan_width_parameter hits the exact harmonic root at a=1/2") {
    PrecisionGuard guard(40);
    PotentialSpec pot = polynomial_potential({Rational(1)});
    std::vector<Rational> grid{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    WidthScan scan = scan_width_parameter(Method::hill, pot, 4, grid, Float(1), Rational(0),
                                          Rational(2), parse_rational("1e-25"));
    CHECK(scan.M == 4);
    REQUIRE(scan.errors.size() == 3);
    REQUIRE(scan.errors[1].has_value());
    CHECK(*scan.errors[1] == -std::numeric_limits<double>::infinity());
    CHECK(scan.best_a == Rational(1, 2));
}
