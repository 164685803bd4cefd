#pragma once

#include "hpade/hankel.hpp"
#include "hpade/hill.hpp"
#include "hpade/sequence.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hpade {

// Published reference digits, kept in one data file.
struct ReferenceData {
    std::string quartic_ground_state;
    std::map<std::string, std::string> rational_anchors;  // keyed "1/10", "1"
    std::string hill_g01_reference;
    std::map<std::string, std::map<int, std::string>> table1;  // g key -> D -> digits
    std::map<std::string, std::map<int, std::string>> table2;  // g key -> M -> digits
};

ReferenceData load_reference_data(const std::string& path = HPADE_DATA_FILE);

// true when |computed - printed| <= one unit in the last printed digit
bool matches_printed(const Float& computed, const std::string& printed);

struct CompareRow {
    int order = 0;
    std::string printed;
    std::string computed;
    bool pass = false;
};

struct Table1Column {
    std::string g_key;
    int D_max = 0;
    std::map<int, Float> selected_root;  // per D, the root nearest the previous pick
    std::vector<CompareRow> rows;
    bool all_pass = false;
};

struct Table2Column {
    std::string g_key;
    std::map<int, std::vector<Float>> strict_roots;  // roots inside (0.5, 1.5)
    std::map<int, Float> selected_root;              // nearest padded-window root per row
    std::vector<CompareRow> rows;
    bool all_pass = false;
};

struct Fig1Data {
    std::map<int, std::vector<Float>> roots_by_D;
    std::vector<RootSequence> sequences;
};

struct Fig2Data {
    std::vector<std::pair<int, double>> hill_log_error;    // (M, log10 err)
    std::vector<std::pair<int, double>> hankel_log_error;  // (M = 2D-1, log10 err)
    std::map<int, Float> hankel_root_by_D;
};

struct Fig3Data {
    std::vector<Rational> a_grid;
    std::map<int, WidthScan> scans_by_M;
};

Table1Column reproduce_table1_column(const ReferenceData& ref, const std::string& g_key,
                                     unsigned precision = 256);
Table2Column reproduce_table2_column(const ReferenceData& ref, const std::string& g_key);
Fig1Data reproduce_fig1();
Fig2Data reproduce_fig2(const ReferenceData& ref);
Fig3Data reproduce_fig3(const ReferenceData& ref);

}  // namespace hpade
