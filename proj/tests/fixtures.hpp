#pragma once

// Shared numeric fixtures for the unit and acceptance suites. The published
// reference vectors carry four decimals; distributions built from them are
// renormalized. All index sets are stored 0-based (the reference prints them
// 1-based).

#include <cstddef>
#include <vector>

#include "voi/core.hpp"

namespace fixtures {

inline const std::vector<double> kPhi40 = {
    0.0304, 0.0333, 0.0153, 0.0335, 0.0253, 0.0148, 0.0178, 0.0232,  //
    0.0350, 0.0353, 0.0157, 0.0355, 0.0350, 0.0219, 0.0299, 0.0155,  //
    0.0205, 0.0336, 0.0297, 0.0351, 0.0259, 0.0139, 0.0314, 0.0342,  //
    0.0265, 0.0287, 0.0283, 0.0199, 0.0259, 0.0160, 0.0273, 0.0139,  //
    0.0177, 0.0141, 0.0148, 0.0307, 0.0270, 0.0185, 0.0348, 0.0139};

inline const std::vector<double> kPsi10 = {0.1241, 0.1205, 0.1192, 0.1139, 0.1069,
                                           0.0914, 0.0875, 0.0869, 0.0821, 0.0675};

// Round-2 inputs of the 40x10 run, as published.
inline const std::vector<double> kRound2Phi = {0.1237, 0.0721, 0.0183, 0.0825, 0.1934,
                                               0.0793, 0.0639, 0.1856, 0.0521, 0.1291};
inline const std::vector<double> kRound2Psi = {0.3317, 0.2917, 0.3766};

// Round-3 inputs and their exact solution.
inline const std::vector<double> kRound3Phi = {0.2103, 0.4037, 0.3860};
inline const std::vector<double> kRound3Psi = {0.5898, 0.4102};
inline const std::vector<std::vector<double>> kRound3P = {{0.9691, 0.0309}, {0.0, 1.0}, {1.0, 0.0}};
inline const std::vector<std::vector<double>> kRound3Q = {{0.3456, 0.0, 0.6544},
                                                          {0.0158, 0.9842, 0.0}};

// Published round-1 index sets of the 40x10 run (0-based).
inline const std::vector<std::vector<std::size_t>> kPublishedRound1Sets = {
    {0, 6, 15, 19, 31}, {1, 10, 16, 24, 32}, {2, 5, 8, 21, 27}, {3, 14, 25, 33},
    {4, 13, 20, 29},    {7, 17, 30},         {9, 22, 34, 37},   {11, 23},
    {12, 26, 39},       {18, 28}};
inline const std::vector<std::size_t> kPublishedOverflow1 = {35, 36, 38};

// What best fit actually produces on the four-decimal fixture: items 29, 30
// and 37 land elsewhere (bins 5/6 hold residuals 0.0338/0.0346 when item 29
// is placed, and bin 2 holds 0.0203 against bin 6's 0.0060 when item 37 is
// placed), so the run has two rounds, not three.
inline const std::vector<std::vector<std::size_t>> kComputedRound1Sets = {
    {0, 6, 15, 19, 31}, {1, 10, 16, 24, 32}, {2, 5, 8, 21, 27, 37}, {3, 14, 25, 33},
    {4, 13, 20, 30},    {7, 17, 29},         {9, 22, 34},           {11, 23},
    {12, 26, 39},       {18, 28}};

// Published round-2 index sets (for the 10x3 subproblem) and overflow.
inline const std::vector<std::vector<std::size_t>> kPublishedRound2Sets = {
    {1, 4}, {2, 3, 6}, {0, 5, 8}};
inline const std::vector<std::size_t> kPublishedOverflow2 = {7, 9};

// 5x2 packing fixture.
inline const std::vector<double> kPackPhi = {0.50, 0.24, 0.12, 0.071, 0.069};
inline const std::vector<double> kPackPsi = {0.4, 0.6};

// Published aggregation of the 40-vector into ten uniform bins, unsorted
// order (0-based sets and the aggregated vector).
inline const std::vector<std::vector<std::size_t>> kAggUnsortedSets = {
    {0, 15, 22, 32}, {1, 17, 30},        {2, 11, 23, 39}, {3, 18, 29, 35}, {4, 14, 26, 37},
    {5, 10, 16, 24, 33}, {6, 12, 25, 36}, {7, 13, 21, 27, 34}, {8, 19, 31, 38}, {9, 20, 28}};
inline const std::vector<double> kAggUnsortedPsiA = {0.0951, 0.0942, 0.0989, 0.1099, 0.1020,
                                                     0.0917, 0.1085, 0.0938, 0.1188, 0.0871};

// Published aggregation after sorting descending (sets index sorted
// positions, 0-based).
inline const std::vector<std::vector<std::size_t>> kAggSortedSetsPublished = {
    {0, 19, 20, 38}, {1, 18, 21, 39}, {2, 17, 22, 37}, {3, 16, 23, 36}, {4, 15, 24, 35},
    {5, 14, 28, 30}, {6, 13, 26, 33}, {7, 12, 25, 34}, {8, 11, 27, 32}, {9, 10, 29, 31}};
inline const std::vector<double> kAggSortedPsiA = {0.1019, 0.1021, 0.1016, 0.1007, 0.1004,
                                                   0.0982, 0.0994, 0.0993, 0.0982, 0.0982};

// What best fit produces on the four-decimal fixture: sorted positions 3 and
// 4 both hold 0.0350, so bins 3 and 4 tie exactly when position 15 is placed
// and the tie goes to bin 3; the published run had them split the other way.
inline const std::vector<std::vector<std::size_t>> kAggSortedSetsComputed = {
    {0, 19, 20, 38}, {1, 18, 21, 39}, {2, 17, 22, 37}, {3, 15, 24, 35}, {4, 16, 23, 36},
    {5, 14, 28, 30}, {6, 13, 26, 33}, {7, 12, 25, 34}, {8, 11, 27, 32}, {9, 10, 29, 31}};

inline voi::Distribution renormalized(std::vector<double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  for (double& x : v) x /= sum;
  return voi::Distribution(std::move(v));
}

inline voi::Distribution phi40() { return renormalized(kPhi40); }
inline voi::Distribution psi10() { return renormalized(kPsi10); }
inline voi::Distribution round2_phi() { return renormalized(kRound2Phi); }
inline voi::Distribution round2_psi() { return renormalized(kRound2Psi); }
inline voi::Distribution round3_phi() { return renormalized(kRound3Phi); }
inline voi::Distribution round3_psi() { return renormalized(kRound3Psi); }
inline voi::Distribution pack_phi() { return renormalized(kPackPhi); }
inline voi::Distribution pack_psi() { return renormalized(kPackPsi); }

}  // namespace fixtures
