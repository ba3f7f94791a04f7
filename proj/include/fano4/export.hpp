#pragma once

// Machine- and human-readable exports of family records.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fano4/errors.hpp"
#include "fano4/record.hpp"
#include "fano4/verify.hpp"

namespace fano4 {

enum class ExportFormat { Json, Csv, Markdown };

inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "json") return ExportFormat::Json;
  if (s == "csv") return ExportFormat::Csv;
  if (s == "markdown") return ExportFormat::Markdown;
  throw FormatError("unsupported export format: " + std::string(s));
}

/// The flat, exported view of a FamilyRecord. h0_T / h1_T hold the exact
/// value when known and the best upper bound otherwise.
struct ExportRow {
  int z_id = 0;
  int a = 0;
  int d = 0;
  std::string label;
  std::int64_t K4 = 0;
  std::int64_t K2c2 = 0;
  std::int64_t h0_antiK = 0;
  int h12 = 0;
  int h13 = 0;
  int h22 = 0;
  std::string base_locus;
  std::string rationality;
  std::optional<std::string> toric_label;
  std::string fibre_like;
  std::int64_t chi_T = 0;
  std::int64_t h0_T = 0;
  std::int64_t h1_T = 0;
  bool h0_T_is_exact = false;
  bool h1_T_is_exact = false;

  friend bool operator==(const ExportRow&, const ExportRow&) = default;
};

inline constexpr std::array<std::string_view, 19> kExportColumns{
    "z_id",       "a",           "d",       "label",          "K4",
    "K2c2",       "h0_antiK",    "h12",     "h13",            "h22",
    "base_locus", "rationality", "toric_label", "fibre_like", "chi_T",
    "h0_T",       "h1_T",        "h0_T_is_exact", "h1_T_is_exact"};

inline ExportRow to_export_row(const FamilyRecord& r) {
  ExportRow e;
  e.z_id = r.params.z_id;
  e.a = r.params.a;
  e.d = r.params.d;
  e.label = r.label;
  e.K4 = r.K4;
  e.K2c2 = r.K2c2;
  e.h0_antiK = r.h0_antiK;
  e.h12 = r.h12;
  e.h13 = r.h13;
  e.h22 = r.h22;
  e.base_locus = to_string(r.base_locus.kind);
  e.rationality = to_string(r.rationality);
  if (r.toric_label) e.toric_label = to_string(*r.toric_label);
  e.fibre_like = to_string(r.fibre_like);
  e.chi_T = r.tangent.chi;
  e.h0_T = r.tangent.h0_exact.value_or(r.tangent.h0_upper);
  e.h1_T = r.tangent.h1_exact.value_or(r.tangent.h1_upper);
  e.h0_T_is_exact = r.tangent.h0_exact.has_value();
  e.h1_T_is_exact = r.tangent.h1_exact.has_value();
  return e;
}

inline nlohmann::ordered_json to_json(const ExportRow& e) {
  nlohmann::ordered_json j;
  j["z_id"] = e.z_id;
  j["a"] = e.a;
  j["d"] = e.d;
  j["label"] = e.label;
  j["K4"] = e.K4;
  j["K2c2"] = e.K2c2;
  j["h0_antiK"] = e.h0_antiK;
  j["h12"] = e.h12;
  j["h13"] = e.h13;
  j["h22"] = e.h22;
  j["base_locus"] = e.base_locus;
  j["rationality"] = e.rationality;
  j["toric_label"] = e.toric_label ? nlohmann::ordered_json(*e.toric_label) : nullptr;
  j["fibre_like"] = e.fibre_like;
  j["chi_T"] = e.chi_T;
  j["h0_T"] = e.h0_T;
  j["h1_T"] = e.h1_T;
  j["h0_T_is_exact"] = e.h0_T_is_exact;
  j["h1_T_is_exact"] = e.h1_T_is_exact;
  return j;
}

inline ExportRow export_row_from_json(const nlohmann::json& j) {
  ExportRow e;
  try {
    e.z_id = j.at("z_id").get<int>();
    e.a = j.at("a").get<int>();
    e.d = j.at("d").get<int>();
    e.label = j.at("label").get<std::string>();
    e.K4 = j.at("K4").get<std::int64_t>();
    e.K2c2 = j.at("K2c2").get<std::int64_t>();
    e.h0_antiK = j.at("h0_antiK").get<std::int64_t>();
    e.h12 = j.at("h12").get<int>();
    e.h13 = j.at("h13").get<int>();
    e.h22 = j.at("h22").get<int>();
    e.base_locus = j.at("base_locus").get<std::string>();
    e.rationality = j.at("rationality").get<std::string>();
    if (!j.at("toric_label").is_null()) e.toric_label = j.at("toric_label").get<std::string>();
    e.fibre_like = j.at("fibre_like").get<std::string>();
    e.chi_T = j.at("chi_T").get<std::int64_t>();
    e.h0_T = j.at("h0_T").get<std::int64_t>();
    e.h1_T = j.at("h1_T").get<std::int64_t>();
    e.h0_T_is_exact = j.at("h0_T_is_exact").get<bool>();
    e.h1_T_is_exact = j.at("h1_T_is_exact").get<bool>();
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed export row: ") + ex.what());
  }
  return e;
}

/// Parses the output of a JSON export.
inline std::vector<ExportRow> parse_json_export(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_array()) throw FormatError("JSON export must be an array");
  std::vector<ExportRow> rows;
  for (const auto& j : doc) rows.push_back(export_row_from_json(j));
  return rows;
}

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string export_json(const std::vector<FamilyRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(to_export_row(r)));
  return arr.dump(2) + "\n";
}

inline std::string export_csv(const std::vector<FamilyRecord>& records) {
  std::ostringstream os;
  for (std::size_t k = 0; k < kExportColumns.size(); ++k) {
    os << (k ? "," : "") << kExportColumns[k];
  }
  os << '\n';
  for (const auto& r : records) {
    const auto e = to_export_row(r);
    const auto b = [](bool v) { return v ? "true" : "false"; };
    os << e.z_id << ',' << e.a << ',' << e.d << ',' << csv_field(e.label) << ',' << e.K4 << ','
       << e.K2c2 << ',' << e.h0_antiK << ',' << e.h12 << ',' << e.h13 << ',' << e.h22 << ','
       << e.base_locus << ',' << e.rationality << ',' << e.toric_label.value_or("") << ','
       << e.fibre_like << ',' << e.chi_T << ',' << e.h0_T << ',' << e.h1_T << ','
       << b(e.h0_T_is_exact) << ',' << b(e.h1_T_is_exact) << '\n';
  }
  return os.str();
}

inline std::string export_markdown(const std::vector<FamilyRecord>& records) {
  std::ostringstream os;
  os << "| X^i_{a,d} | K_X^4 | K_X^2·c_2(X) | h^0(-K_X) | h^{1,2} | h^{1,3} | h^{2,2} "
        "| Bs(\\|-K_X\\|) | rationality |\n";
  os << "|---|---:|---:|---:|---:|---:|---:|---|---|\n";
  for (const auto& r : records) {
    os << "| " << r.label << " | " << r.K4 << " | " << r.K2c2 << " | " << r.h0_antiK << " | "
       << r.h12 << " | " << r.h13 << " | " << r.h22 << " | "
       << base_locus_table_text(r.base_locus.kind) << " | "
       << rationality_table_text(r.rationality) << " |\n";
  }
  return os.str();
}

}  // namespace detail

/// Serialises `records`. Output is deterministic; line endings are LF.
inline std::string export_records(const std::vector<FamilyRecord>& records, ExportFormat fmt) {
  if (records.empty()) throw DomainError("export requires at least one record");
  switch (fmt) {
    case ExportFormat::Json: return detail::export_json(records);
    case ExportFormat::Csv: return detail::export_csv(records);
    case ExportFormat::Markdown: return detail::export_markdown(records);
  }
  throw FormatError("unsupported export format");
}

}  // namespace fano4
