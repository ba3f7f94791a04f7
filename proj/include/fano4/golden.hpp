#pragma once

// Published reference values, transcribed once and used only for
// verification. Nothing in the computation path reads this file.

#include <array>
#include <string_view>
#include <vector>

namespace fano4 {

struct GoldenThreefoldRow {
  int id;
  int index;
  int degree;
  int minus_K_cubed;
  int h12;
  int h0_tangent;
  int h1_tangent;
  std::string_view base_locus;  // "{P_0}" or "∅"
  bool rational;
};

struct GoldenInvariantRow {
  std::string_view label;
  long long K4;
  long long K2c2;
  long long h0_antiK;
  int h12;
  int h13;
  int h22;
  std::string_view base_locus;   // "{Q_0}", "{Q_1, Q_2}" or "∅"
  std::string_view rationality;  // as printed in the rationality column
};

/// A "<= n" entry has is_exact = false.
struct GoldenTangentRow {
  std::string_view label;
  long long h0;
  bool h0_is_exact;
  long long h1;
  bool h1_is_exact;
  long long chi;
};

inline constexpr std::string_view kNotRationalText = "the very general is not rational";

inline constexpr std::array<GoldenThreefoldRow, 7> kGoldenTable1{{
    {1, 2, 1, 8, 21, 0, 34, "{P_0}", false},
    {2, 2, 2, 16, 10, 0, 19, "∅", false},
    {3, 2, 3, 24, 5, 0, 10, "∅", false},
    {4, 2, 4, 32, 2, 0, 3, "∅", true},
    {5, 2, 5, 40, 0, 3, 0, "∅", true},
    {6, 3, 2, 54, 0, 10, 0, "∅", true},
    {7, 4, 1, 64, 0, 15, 0, "∅", true},
}};

inline constexpr std::array<GoldenInvariantRow, 28> kGoldenTable2{{
    {"X^1_{0,1}", 47, 98, 17, 21, 0, 11, "{Q_0}", kNotRationalText},
    {"X^1_{1,2}", 30, 84, 13, 21, 1, 22, "{Q_1, Q_2}", kNotRationalText},
    {"X^2_{0,1}", 94, 112, 26, 10, 0, 10, "∅", kNotRationalText},
    {"X^2_{1,2}", 60, 96, 19, 10, 1, 22, "∅", kNotRationalText},
    {"X^3_{0,1}", 141, 126, 35, 5, 0, 9, "∅", "?"},
    {"X^3_{1,2}", 90, 108, 25, 5, 1, 22, "∅", "?"},
    {"X^4_{0,1}", 188, 140, 44, 2, 0, 8, "∅", "rational"},
    {"X^4_{1,2}", 120, 120, 31, 2, 1, 22, "∅", "rational"},
    {"X^5_{0,1}", 235, 154, 53, 0, 0, 7, "∅", "rational"},
    {"X^5_{1,2}", 150, 132, 37, 0, 1, 22, "∅", "rational"},
    {"X^6_{0,1}", 346, 184, 74, 0, 0, 4, "∅", "rational"},
    {"X^6_{0,2}", 296, 176, 65, 0, 0, 8, "∅", "rational"},
    {"X^6_{1,2}", 260, 164, 58, 0, 0, 8, "∅", "rational"},
    {"X^6_{1,3}", 210, 156, 49, 0, 1, 22, "∅", "rational"},
    {"X^6_{2,1}", 430, 208, 90, 0, 0, 4, "∅", "rational"},
    {"X^6_{2,4}", 160, 148, 40, 0, 5, 54, "∅", "rational"},
    {"X^7_{0,1}", 431, 206, 90, 0, 0, 3, "∅", "toric"},
    {"X^7_{0,2}", 376, 196, 80, 0, 0, 4, "∅", "rational"},
    {"X^7_{0,3}", 341, 194, 74, 0, 0, 9, "∅", "rational"},
    {"X^7_{1,2}", 350, 188, 75, 0, 0, 4, "∅", "rational"},
    {"X^7_{1,3}", 295, 178, 65, 0, 0, 9, "∅", "rational"},
    {"X^7_{1,4}", 260, 176, 59, 0, 1, 22, "∅", "rational"},
    {"X^7_{2,1}", 489, 222, 101, 0, 0, 3, "∅", "toric"},
    {"X^7_{2,4}", 240, 168, 55, 0, 1, 22, "∅", "rational"},
    {"X^7_{2,5}", 205, 166, 49, 0, 4, 47, "∅", "rational"},
    {"X^7_{3,1}", 605, 254, 123, 0, 0, 3, "∅", "toric"},
    {"X^7_{3,2}", 454, 220, 95, 0, 0, 4, "∅", "rational"},
    {"X^7_{3,6}", 170, 164, 43, 0, 10, 88, "∅", "rational"},
}};

inline constexpr std::array<GoldenTangentRow, 28> kGoldenTable3{{
    {"X^1_{0,1}", 2, true, 36, true, -34},
    {"X^1_{1,2}", 1, true, 40, true, -39},
    {"X^2_{0,1}", 2, true, 22, true, -20},
    {"X^2_{1,2}", 1, true, 29, true, -28},
    {"X^3_{0,1}", 2, true, 14, true, -12},
    {"X^3_{1,2}", 1, true, 24, true, -23},
    {"X^4_{0,1}", 2, true, 8, true, -6},
    {"X^4_{1,2}", 1, true, 21, true, -20},
    {"X^5_{0,1}", 5, false, 6, false, -1},
    {"X^5_{1,2}", 4, false, 22, false, -18},
    {"X^6_{0,1}", 12, false, 4, false, 8},
    {"X^6_{0,2}", 12, false, 13, false, -1},
    {"X^6_{1,2}", 11, false, 13, false, -2},
    {"X^6_{1,3}", 11, false, 29, false, -18},
    {"X^6_{2,1}", 16, false, 4, false, 12},
    {"X^6_{2,4}", 11, false, 54, false, -43},
    {"X^7_{0,1}", 14, true, 0, true, 14},
    {"X^7_{0,2}", 8, true, 0, true, 8},
    {"X^7_{0,3}", 17, false, 19, false, -2},
    {"X^7_{1,2}", 7, true, 0, true, 7},
    {"X^7_{1,3}", 16, false, 19, false, -3},
    {"X^7_{1,4}", 16, false, 34, false, -18},
    {"X^7_{2,1}", 17, true, 0, true, 17},
    {"X^7_{2,4}", 16, false, 34, false, -18},
    {"X^7_{2,5}", 16, false, 55, false, -39},
    {"X^7_{3,1}", 23, true, 0, true, 23},
    {"X^7_{3,2}", 11, true, 0, true, 11},
    {"X^7_{3,6}", 16, false, 83, false, -67},
}};

/// Mutable copy of the reference tables, so callers can inject faults.
struct GoldenTables {
  std::vector<GoldenThreefoldRow> table1;
  std::vector<GoldenInvariantRow> table2;
  std::vector<GoldenTangentRow> table3;
};

inline GoldenTables golden_tables() {
  return {{kGoldenTable1.begin(), kGoldenTable1.end()},
          {kGoldenTable2.begin(), kGoldenTable2.end()},
          {kGoldenTable3.begin(), kGoldenTable3.end()}};
}

}  // namespace fano4
