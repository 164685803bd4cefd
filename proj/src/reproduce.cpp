#include "hpade/reproduce.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>

namespace hpade {

namespace {

std::map<std::string, std::map<int, std::string>> parse_table(const nlohmann::json& j) {
    std::map<std::string, std::map<int, std::string>> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::map<int, std::string> col;
        for (auto r = it.value().begin(); r != it.value().end(); ++r)
            col[std::stoi(r.key())] = r.value().get<std::string>();
        out[it.key()] = std::move(col);
    }
    return out;
}

int printed_places(const std::string& printed) {
    auto dot = printed.find('.');
    if (dot == std::string::npos) return 0;
    return static_cast<int>(printed.size() - dot - 1);
}

}  // namespace

ReferenceData load_reference_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference data file: " + path);
    nlohmann::json j;
    in >> j;
    ReferenceData ref;
    ref.quartic_ground_state = j.at("quartic_ground_state").get<std::string>();
    for (auto it = j.at("rational_anchors").begin(); it != j.at("rational_anchors").end(); ++it)
        ref.rational_anchors[it.key()] = it.value().get<std::string>();
    ref.hill_g01_reference = j.at("hill_g01_reference").get<std::string>();
    ref.table1 = parse_table(j.at("table1"));
    ref.table2 = parse_table(j.at("table2"));
    return ref;
}

bool matches_printed(const Float& computed, const Float& printed_value, int places) {
    Float ulp = pow(Float(10), -places);
    return abs(computed - printed_value) <= ulp * Float("1.000001");
}

bool matches_printed(const Float& computed, const std::string& printed) {
    return matches_printed(computed, Float(parse_rational(printed)), printed_places(printed));
}

Table1Column reproduce_table1_column(const ReferenceData& ref, const std::string& g_key,
                                     unsigned precision) {
    PrecisionGuard guard(precision);
    const auto& column = ref.table1.at(g_key);
    Table1Column out;
    out.g_key = g_key;
    out.D_max = column.rbegin()->first;

    Rational g = parse_rational(g_key);
    int J = 2 * out.D_max - 1;
    PotentialSpec pot = expand_rational(Rational(1), g, J);
    SeriesParams params{Rational(1, 2), 0, J};
    SeriesTable table = generate_series(pot, params);

    Rational lo(1), hi(7, 4);
    Rational tol = parse_rational("1e-24");
    HankelRootOptions opts;
    opts.precision = precision;
    out.all_pass = true;
    for (const auto& [D, printed] : column) {
        HankelResult res = hankel_roots(table, HankelSpec{D, 0}, lo, hi, 600, tol, opts);
        if (res.roots.empty()) {
            out.rows.push_back({D, printed, "(no root)", false});
            out.all_pass = false;
            continue;
        }
        Float target(parse_rational(printed));
        Float best = res.roots.front().value;
        for (const auto& r : res.roots)
            if (abs(r.value - target) < abs(best - target)) best = r.value;
        out.selected_root[D] = best;
        bool pass = matches_printed(best, printed);
        out.rows.push_back({D, printed, best.str(printed_places(printed), std::ios_base::fixed),
                            pass});
        out.all_pass = out.all_pass && pass;
    }
    return out;
}

Table2Column reproduce_table2_column(const ReferenceData& ref, const std::string& g_key) {
    PrecisionGuard guard(64);
    const auto& column = ref.table2.at(g_key);
    Table2Column out;
    out.g_key = g_key;

    Rational g = parse_rational(g_key);
    const int M_max = 21;
    PotentialSpec pot = expand_rational(Rational(1), g, M_max);
    SeriesParams params{Rational(1, 2), 0, M_max};
    SeriesTable table = generate_series(pot, params);

    // The reference column holds entries like 1.59 and 1.82 although its
    // stated window is 0.5 < E < 1.5; rows are matched inside a padded
    // window while the "no root" statements are checked against the strict
    // one.
    Rational strict_lo(1, 2), strict_hi(3, 2);
    Rational pad_lo(9, 20), pad_hi(41, 20);
    Rational tol = parse_rational("1e-15");

    out.all_pass = true;
    for (int M = 2; M <= M_max; ++M) {
        HillResult padded = hill_roots(table, M, pad_lo, pad_hi, tol);
        std::vector<Float>& strict = out.strict_roots[M];
        for (const auto& r : padded.roots)
            if (strict_lo < r.value && r.value < strict_hi) strict.emplace_back(r.value);

        auto printed_it = column.find(M);
        if (printed_it == column.end()) continue;
        const std::string& printed = printed_it->second;
        if (padded.roots.empty()) {
            out.rows.push_back({M, printed, "(no root)", false});
            out.all_pass = false;
            continue;
        }
        Float target(parse_rational(printed));
        Float best(padded.roots.front().value);
        for (const auto& r : padded.roots)
            if (abs(Float(r.value) - target) < abs(best - target)) best = Float(r.value);
        out.selected_root[M] = best;
        bool pass = matches_printed(best, printed);
        out.rows.push_back({M, printed, best.str(printed_places(printed), std::ios_base::fixed),
                            pass});
        out.all_pass = out.all_pass && pass;
    }
    return out;
}

Fig1Data reproduce_fig1() {
    PrecisionGuard guard(64);
    const int D_max = 12;
    int J = 2 * D_max - 1;
    PotentialSpec pot = polynomial_potential({Rational(0), Rational(1)});
    SeriesParams params{Rational(0), 0, J};
    SeriesTable table = generate_series(pot, params);

    Fig1Data out;
    Rational tol = parse_rational("1e-12");
    HankelRootOptions opts;
    opts.precision = 64;
    for (int D = 3; D <= D_max; ++D) {
        HankelResult res =
            hankel_roots(table, HankelSpec{D, 0}, Rational(0), Rational(6), 300, tol, opts);
        auto& list = out.roots_by_D[D];
        for (const auto& r : res.roots) list.push_back(r.value);
    }
    out.sequences = match_sequences(out.roots_by_D, Float(0), Method::hankel);
    return out;
}

Fig2Data reproduce_fig2(const ReferenceData& ref) {
    PrecisionGuard guard(128);
    Float reference(parse_rational(ref.quartic_ground_state));
    PotentialSpec pot = polynomial_potential({Rational(0), Rational(1)});
    const int M_max = 29;
    SeriesParams params{Rational(1), 0, M_max};
    SeriesTable table = generate_series(pot, params);
    Rational tol = parse_rational("1e-18");

    Fig2Data out;
    for (int M = 3; M <= M_max; M += 2) {
        HillResult hr = hill_roots(table, M, Rational(0), Rational(3), tol);
        if (hr.roots.empty()) continue;
        Float best(hr.roots.front().value);
        for (const auto& r : hr.roots)
            if (abs(Float(r.value) - reference) < abs(best - reference)) best = Float(r.value);
        Float err = abs(best - reference);
        out.hill_log_error.emplace_back(
            M, err == 0 ? -std::numeric_limits<double>::infinity()
                        : static_cast<double>(log10(err)));
    }
    HankelRootOptions opts;
    opts.precision = 128;
    for (int D = 2; D <= 15; ++D) {
        HankelResult res = hankel_roots(table, HankelSpec{D, 0}, Rational(1, 2),
                                        Rational(3, 2), 150, tol, opts);
        if (res.roots.empty()) continue;
        Float best = res.roots.front().value;
        for (const auto& r : res.roots)
            if (abs(r.value - reference) < abs(best - reference)) best = r.value;
        out.hankel_root_by_D[D] = best;
        Float err = abs(best - reference);
        out.hankel_log_error.emplace_back(
            2 * D - 1, err == 0 ? -std::numeric_limits<double>::infinity()
                                : static_cast<double>(log10(err)));
    }
    return out;
}

Fig3Data reproduce_fig3(const ReferenceData& ref) {
    PrecisionGuard guard(64);
    Float reference(parse_rational(ref.quartic_ground_state));
    PotentialSpec pot = polynomial_potential({Rational(0), Rational(1)});
    Fig3Data out;
    for (Rational a(1, 2); a <= 4; a += Rational(1, 10)) out.a_grid.push_back(a);
    Rational tol = parse_rational("1e-15");
    for (int M : {9, 19, 29})
        out.scans_by_M.emplace(M, scan_width_parameter(Method::hill, pot, M, out.a_grid,
                                                       reference, Rational(0), Rational(3),
                                                       tol));
    return out;
}

}  // namespace hpade
