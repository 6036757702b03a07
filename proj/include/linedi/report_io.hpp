#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "linedi/bigint.hpp"
#include "linedi/metrics.hpp"
#include "linedi/sequences.hpp"

namespace linedi {

inline nlohmann::json to_json(const MetricReport& r) {
  nlohmann::json j;
  j["inner_diameter"] = r.inner_diameter;
  j["inner_out_radius"] = r.inner_out_radius;
  j["inner_in_radius"] = r.inner_in_radius;
  j["mean_inner_distance"] = to_fraction_string(r.mean_inner_distance);
  j["strongly_connected"] = r.strongly_connected;
  j["is_directed_cycle"] = r.is_directed_cycle;
  j["standard_diameter"] = r.standard_diameter ? nlohmann::json(*r.standard_diameter) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const oeis::OeisMatch& m) {
  return {{"id", m.id}, {"offset", m.offset}, {"matched_length", m.matched_length}};
}

inline nlohmann::json to_json(const SequenceReport& r) {
  nlohmann::json j;
  j["source"] = r.source;
  j["terms"] = to_decimal(r.terms);
  nlohmann::json methods = nlohmann::json::object();
  for (const auto& m : r.methods) methods[m.name] = m.terms;
  j["methods"] = methods;
  j["methods_agree"] = r.methods_agree;
  if (r.recurrence) {
    std::vector<std::string> coeffs;
    for (const auto& c : r.recurrence->coeffs) {
      coeffs.push_back(boost::multiprecision::denominator(c) == 1 ? boost::multiprecision::numerator(c).str()
                                                                  : to_fraction_string(c));
    }
    j["recurrence"] = {{"order", r.recurrence->order}, {"coeffs", coeffs}, {"start", r.recurrence->start}};
  } else {
    j["recurrence"] = nullptr;
  }
  j["minimal_polynomial"] = r.polynomial ? nlohmann::json(r.polynomial->to_string()) : nlohmann::json(nullptr);
  j["classification"] = to_string(r.behavior);
  j["period"] = r.period ? nlohmann::json{{"length", r.period->length}, {"start", r.period->start}, {"empirical", true}}
                         : nlohmann::json(nullptr);
  j["empty_at"] = r.empty_at ? nlohmann::json(*r.empty_at) : nlohmann::json(nullptr);
  nlohmann::json matches = nlohmann::json::array();
  for (const auto& m : r.oeis_matches) matches.push_back(to_json(m));
  j["oeis_matches"] = matches;
  return j;
}

inline std::string join(const std::vector<BigInt>& terms, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += sep;
    out += terms[i].str();
  }
  return out;
}

/// One line of a forbidden-subword table.
struct TableRow {
  std::vector<std::string> forbidden;
  std::vector<BigInt> terms;
  std::vector<std::string> oeis_ids;  // empty prints "not in OEIS"
};

inline TableRow table_row(const ForbiddenWordSpec& spec, const SequenceReport& rep) {
  TableRow row{spec.forbidden, rep.terms, {}};
  for (const auto& m : rep.oeis_matches) row.oeis_ids.push_back(m.id);
  return row;
}

inline std::string oeis_cell(const TableRow& row) {
  if (row.oeis_ids.empty()) return "not in OEIS";
  std::string out;
  for (std::size_t i = 0; i < row.oeis_ids.size(); ++i) out += (i ? " " : "") + row.oeis_ids[i];
  return out;
}

inline std::string markdown_table(const std::vector<TableRow>& rows) {
  std::string out = "| Forbidden subwords | Sequence | OEIS |\n|---|---|---|\n";
  for (const auto& row : rows) {
    std::string words;
    for (std::size_t i = 0; i < row.forbidden.size(); ++i) words += (i ? ", " : "") + row.forbidden[i];
    out += "| " + words + " | " + join(row.terms, ", ") + " | " + oeis_cell(row) + " |\n";
  }
  return out;
}

inline std::string csv_table(const std::vector<TableRow>& rows) {
  std::string out = "forbidden_subwords,sequence,oeis\n";
  for (const auto& row : rows) {
    std::string words;
    for (std::size_t i = 0; i < row.forbidden.size(); ++i) words += (i ? " " : "") + row.forbidden[i];
    out += "\"" + words + "\",\"" + join(row.terms, " ") + "\",\"" + oeis_cell(row) + "\"\n";
  }
  return out;
}

}  // namespace linedi
