#pragma once

// Report documents emitted by pbrcheck and their three renderings.
//
// JSON is the canonical form: every real is written with at most 12
// significant digits, fields appear in a fixed order, and
// to_json(from_json(to_json(doc))) is byte-identical to to_json(doc).

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pbr/scenarios.hpp"

namespace pbrcheck {

enum class Format { Text, Json, Csv };

struct NamedTable {
  std::string name;
  pbr::ProbabilityTable table;
};

struct VerdictSummary {
  std::string subject;
  std::string status;
  std::string detail;
};

struct Quantity {
  std::string name;
  double value;
};

struct NamedVector {
  std::string name;
  std::vector<std::complex<double>> amplitudes;
};

struct Metadata {
  std::string tool = "pbrcheck";
  std::string version = PBRCHECK_VERSION;
  std::optional<std::uint64_t> seed;
  double display_tolerance = pbr::tol::kProb;
  std::vector<std::pair<std::string, std::string>> parameters;
};

struct ReportDocument {
  std::string scenario;
  Metadata metadata;
  std::vector<Quantity> quantities;
  std::vector<NamedVector> vectors;
  std::vector<NamedTable> tables;
  std::vector<VerdictSummary> verdicts;

  const NamedTable* find_table(const std::string& name) const;
  const Quantity* find_quantity(const std::string& name) const;
  const VerdictSummary* find_verdict(const std::string& subject) const;
};

/// v rounded to 12 significant digits (round-trip through its decimal form).
double round12(double v);

/// Shortest decimal for v with at most 12 significant digits, independent
/// of the global locale.
std::string format_number(double v);

nlohmann::ordered_json to_json(const ReportDocument& doc);

/// Rebuilds a document, re-running every ProbabilityTable check. Throws
/// nlohmann::json exceptions on malformed input, pbr::Error on invariant
/// violations (including zero flags that disagree with the values).
ReportDocument from_json(const nlohmann::ordered_json& j);

/// from_json() of the parsed text; key order is preserved.
ReportDocument parse_report(const std::string& text);

std::string render_json(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);
std::string render_csv(const ReportDocument& doc);
std::string render(const ReportDocument& doc, Format format);

}  // namespace pbrcheck
