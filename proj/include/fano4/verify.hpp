#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fano4/catalog.hpp"
#include "fano4/classify.hpp"
#include "fano4/golden.hpp"
#include "fano4/record.hpp"

namespace fano4 {

struct Mismatch {
  std::string family;
  std::string field;
  std::string expected;
  std::string computed;
};

struct VerificationReport {
  std::size_t rows_checked = 0;
  std::size_t rows_passed = 0;
  std::size_t rows_failed = 0;
  std::vector<Mismatch> mismatches;

  bool all_pass() const { return mismatches.empty(); }
};

/// Text used in the rationality column of the invariants table.
inline std::string rationality_table_text(Rationality r) {
  switch (r) {
    case Rationality::Rational: return "rational";
    case Rationality::VeryGeneralNotRational: return std::string(kNotRationalText);
    case Rationality::Unknown: return "?";
    case Rationality::Toric: return "toric";
  }
  return "";
}

/// "{Q_0}", "{Q_1, Q_2}" or "∅".
inline std::string base_locus_table_text(BaseLocusKind k) {
  return k == BaseLocusKind::Empty ? "∅" : base_locus_points(k);
}

namespace detail {

class RowChecker {
 public:
  RowChecker(std::string family, std::vector<Mismatch>& out) : family_(std::move(family)), out_(out) {}

  template <typename A, typename B>
  void check(const char* field, const A& expected, const B& computed) {
    if (expected == computed) return;
    out_.push_back({family_, field, str(expected), str(computed)});
    ok_ = false;
  }

  bool ok() const { return ok_; }

 private:
  static std::string str(const std::string& s) { return s; }
  static std::string str(std::string_view s) { return std::string(s); }
  static std::string str(bool b) { return b ? "true" : "false"; }
  template <typename T>
  static std::string str(const T& v) {
    return std::to_string(v);
  }

  std::string family_;
  std::vector<Mismatch>& out_;
  bool ok_ = true;
};

inline void verify_catalog(const GoldenTables& golden, std::vector<Mismatch>& out) {
  const auto rows = catalog();
  if (rows.size() != golden.table1.size()) {
    out.push_back({"catalog", "row count", std::to_string(golden.table1.size()),
                   std::to_string(rows.size())});
    return;
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& z = rows[k];
    const auto& g = golden.table1[k];
    RowChecker c("Z_" + std::to_string(g.id), out);
    c.check("id", g.id, z.id);
    c.check("index", g.index, z.index);
    c.check("degree", g.degree, z.degree);
    c.check("-K^3", g.minus_K_cubed, z.anticanonical_degree());
    c.check("h12", g.h12, z.h12);
    c.check("h0_tangent", g.h0_tangent, z.h0_tangent);
    c.check("h1_tangent", g.h1_tangent, z.h1_tangent);
    c.check("base_locus_H", g.base_locus,
            std::string_view(z.base_locus_H == BaseLocusH::OneSimplePoint ? "{P_0}" : "∅"));
    c.check("rational", g.rational, z.rational == Rationality3::Rational);
  }
}

}  // namespace detail

/// Diffs `records` (in enumeration order) field by field against the
/// reference tables. Mismatches are collected, never thrown.
inline VerificationReport verify_records(const std::vector<FamilyRecord>& records,
                                         const GoldenTables& golden) {
  VerificationReport report;
  detail::verify_catalog(golden, report.mismatches);

  const std::size_t n = std::max({records.size(), golden.table2.size(), golden.table3.size()});
  if (records.size() != golden.table2.size() || records.size() != golden.table3.size()) {
    report.mismatches.push_back({"all", "row count", std::to_string(golden.table2.size()),
                                 std::to_string(records.size())});
  }
  for (std::size_t k = 0; k < n; ++k) {
    ++report.rows_checked;
    if (k >= records.size() || k >= golden.table2.size() || k >= golden.table3.size()) {
      ++report.rows_failed;
      continue;
    }
    const auto& r = records[k];
    const auto& g2 = golden.table2[k];
    const auto& g3 = golden.table3[k];
    detail::RowChecker c(r.label, report.mismatches);

    c.check("label", g2.label, std::string_view(r.label));
    c.check("label (tangent table)", g3.label, std::string_view(r.label));
    c.check("K4", g2.K4, static_cast<long long>(r.K4));
    c.check("K2c2", g2.K2c2, static_cast<long long>(r.K2c2));
    c.check("h0_antiK", g2.h0_antiK, static_cast<long long>(r.h0_antiK));
    c.check("h12", g2.h12, r.h12);
    c.check("h13", g2.h13, r.h13);
    c.check("h22", g2.h22, r.h22);
    c.check("base_locus", g2.base_locus, base_locus_table_text(r.base_locus.kind));
    c.check("rationality", g2.rationality, rationality_table_text(r.rationality));

    const auto& t = r.tangent;
    c.check("chi_T", g3.chi, static_cast<long long>(t.chi));
    c.check("h0_T_is_exact", g3.h0_is_exact, t.h0_exact.has_value());
    c.check("h1_T_is_exact", g3.h1_is_exact, t.h1_exact.has_value());
    c.check("h0_T", g3.h0, static_cast<long long>(t.h0_exact.value_or(t.h0_upper)));
    c.check("h1_T", g3.h1, static_cast<long long>(t.h1_exact.value_or(t.h1_upper)));

    if (c.ok()) {
      ++report.rows_passed;
    } else {
      ++report.rows_failed;
    }
  }
  return report;
}

/// Builds every record with `build` (default: build_record) and verifies it.
/// Consistency and integrity errors from building propagate.
template <typename Builder>
VerificationReport verify_all(Builder&& build, const GoldenTables& golden) {
  std::vector<FamilyRecord> records;
  for (const auto& p : enumerate_families()) records.push_back(build(p));
  return verify_records(records, golden);
}

inline VerificationReport verify_all() {
  return verify_all([](const FamilyParams& p) { return build_record(p); }, golden_tables());
}

}  // namespace fano4
