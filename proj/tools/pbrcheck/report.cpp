#include "pbrcheck/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include "pbr/errors.hpp"

namespace pbrcheck {

using nlohmann::ordered_json;

const NamedTable* ReportDocument::find_table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const Quantity* ReportDocument::find_quantity(const std::string& name) const {
  for (const auto& q : quantities) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

const VerdictSummary* ReportDocument::find_verdict(const std::string& subject) const {
  for (const auto& v : verdicts) {
    if (v.subject == subject) return &v;
  }
  return nullptr;
}

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc{}) throw pbr::Error("number formatting failed");
  return std::string(buf, end);
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  const auto text = format_number(v);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

namespace {

ordered_json table_to_json(const NamedTable& nt) {
  const auto& t = nt.table;
  ordered_json probs = ordered_json::array();
  ordered_json flags = ordered_json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    ordered_json prow = ordered_json::array();
    ordered_json frow = ordered_json::array();
    for (std::size_t c = 0; c < t.columns(); ++c) {
      prow.push_back(round12(t.at(r, c)));
      frow.push_back(t.is_zero(r, c));
    }
    probs.push_back(std::move(prow));
    flags.push_back(std::move(frow));
  }
  ordered_json j;
  j["name"] = nt.name;
  j["rows"] = std::vector<std::string>(t.row_labels().begin(), t.row_labels().end());
  j["columns"] = std::vector<std::string>(t.column_labels().begin(), t.column_labels().end());
  j["zero_threshold"] = round12(t.zero_threshold());
  j["probabilities"] = std::move(probs);
  j["zero_flags"] = std::move(flags);
  return j;
}

NamedTable table_from_json(const ordered_json& j) {
  auto rows = j.at("rows").get<std::vector<std::string>>();
  auto columns = j.at("columns").get<std::vector<std::string>>();
  const auto& probs = j.at("probabilities");
  const auto& flags = j.at("zero_flags");
  if (probs.size() != rows.size() || flags.size() != rows.size()) {
    throw pbr::DimensionError("table row count mismatch");
  }
  std::vector<double> values;
  for (const auto& prow : probs) {
    if (prow.size() != columns.size()) throw pbr::DimensionError("table column count mismatch");
    for (const auto& v : prow) values.push_back(v.get<double>());
  }
  pbr::ProbabilityTable table(std::move(rows), std::move(columns), std::move(values),
                              j.at("zero_threshold").get<double>());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    if (flags[r].size() != table.columns()) throw pbr::DimensionError("zero flag shape mismatch");
    for (std::size_t c = 0; c < table.columns(); ++c) {
      if (flags[r][c].get<bool>() != table.is_zero(r, c)) {
        throw pbr::DomainError("zero flag disagrees with the probability value");
      }
    }
  }
  return NamedTable{j.at("name").get<std::string>(), std::move(table)};
}

}  // namespace

ordered_json to_json(const ReportDocument& doc) {
  ordered_json j;
  j["scenario"] = doc.scenario;

  ordered_json meta;
  meta["tool"] = doc.metadata.tool;
  meta["version"] = doc.metadata.version;
  meta["seed"] = doc.metadata.seed ? ordered_json(*doc.metadata.seed) : ordered_json(nullptr);
  ordered_json tolerances;
  tolerances["norm"] = pbr::tol::kNorm;
  tolerances["prob"] = pbr::tol::kProb;
  tolerances["zero"] = pbr::tol::kZero;
  tolerances["lp"] = pbr::tol::kLp;
  tolerances["display"] = round12(doc.metadata.display_tolerance);
  meta["tolerances"] = std::move(tolerances);
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : doc.metadata.parameters) params[k] = v;
  meta["parameters"] = std::move(params);
  j["metadata"] = std::move(meta);

  ordered_json quantities = ordered_json::array();
  for (const auto& q : doc.quantities) {
    quantities.push_back({{"name", q.name}, {"value", round12(q.value)}});
  }
  j["quantities"] = std::move(quantities);

  ordered_json vectors = ordered_json::array();
  for (const auto& v : doc.vectors) {
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    for (const auto& a : v.amplitudes) {
      re.push_back(round12(a.real()));
      im.push_back(round12(a.imag()));
    }
    vectors.push_back({{"name", v.name}, {"re", std::move(re)}, {"im", std::move(im)}});
  }
  j["vectors"] = std::move(vectors);

  ordered_json tables = ordered_json::array();
  for (const auto& t : doc.tables) tables.push_back(table_to_json(t));
  j["tables"] = std::move(tables);

  ordered_json verdicts = ordered_json::array();
  for (const auto& v : doc.verdicts) {
    verdicts.push_back({{"subject", v.subject}, {"status", v.status}, {"detail", v.detail}});
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

ReportDocument from_json(const ordered_json& j) {
  ReportDocument doc;
  doc.scenario = j.at("scenario").get<std::string>();

  const auto& meta = j.at("metadata");
  doc.metadata.tool = meta.at("tool").get<std::string>();
  doc.metadata.version = meta.at("version").get<std::string>();
  if (!meta.at("seed").is_null()) doc.metadata.seed = meta.at("seed").get<std::uint64_t>();
  doc.metadata.display_tolerance = meta.at("tolerances").at("display").get<double>();
  for (const auto& [k, v] : meta.at("parameters").items()) {
    doc.metadata.parameters.emplace_back(k, v.get<std::string>());
  }

  for (const auto& q : j.at("quantities")) {
    doc.quantities.push_back({q.at("name").get<std::string>(), q.at("value").get<double>()});
  }
  for (const auto& v : j.at("vectors")) {
    const auto re = v.at("re").get<std::vector<double>>();
    const auto im = v.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw pbr::DimensionError("vector component count mismatch");
    NamedVector nv{v.at("name").get<std::string>(), {}};
    for (std::size_t i = 0; i < re.size(); ++i) nv.amplitudes.emplace_back(re[i], im[i]);
    doc.vectors.push_back(std::move(nv));
  }
  for (const auto& t : j.at("tables")) doc.tables.push_back(table_from_json(t));
  for (const auto& v : j.at("verdicts")) {
    doc.verdicts.push_back({v.at("subject").get<std::string>(), v.at("status").get<std::string>(),
                            v.at("detail").get<std::string>()});
  }
  return doc;
}

ReportDocument parse_report(const std::string& text) { return from_json(ordered_json::parse(text)); }

std::string render_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace {

std::string cell_text(const pbr::ProbabilityTable& t, std::size_t r, std::size_t c, bool bracket) {
  if (t.is_zero(r, c)) return bracket ? "[0]" : "0";
  return format_number(t.at(r, c));
}

std::string complex_text(std::complex<double> a) {
  if (a.imag() == 0.0) return format_number(a.real());
  return format_number(a.real()) + (a.imag() < 0 ? "-" : "+") + format_number(std::abs(a.imag())) + "i";
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "scenario: " << doc.scenario << "\n";
  os << doc.metadata.tool << " " << doc.metadata.version;
  if (doc.metadata.seed) os << "  seed " << *doc.metadata.seed;
  os << "\n";
  for (const auto& [k, v] : doc.metadata.parameters) os << "  " << k << " = " << v << "\n";

  if (!doc.quantities.empty()) os << "\n";
  for (const auto& q : doc.quantities) os << q.name << " = " << format_number(q.value) << "\n";

  for (const auto& v : doc.vectors) {
    os << "\n" << v.name << " =";
    for (const auto& a : v.amplitudes) os << " " << complex_text(a);
    os << "\n";
  }

  for (const auto& nt : doc.tables) {
    const auto& t = nt.table;
    std::size_t label_width = 4;
    for (const auto& r : t.row_labels()) label_width = std::max(label_width, r.size());
    std::size_t cell_width = 8;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (std::size_t c = 0; c < t.columns(); ++c) {
        cell_width = std::max(cell_width, cell_text(t, r, c, true).size());
      }
    }
    for (const auto& c : t.column_labels()) cell_width = std::max(cell_width, c.size());

    os << "\ntable " << nt.name << " (bracketed cells are <= " << format_number(t.zero_threshold())
       << ")\n";
    os << std::string(label_width, ' ');
    for (const auto& c : t.column_labels()) {
      os << "  " << std::string(cell_width - c.size(), ' ') << c;
    }
    os << "\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const auto& label = t.row_labels()[r];
      os << label << std::string(label_width - label.size(), ' ');
      for (std::size_t c = 0; c < t.columns(); ++c) {
        const auto cell = cell_text(t, r, c, true);
        os << "  " << std::string(cell_width - cell.size(), ' ') << cell;
      }
      os << "\n";
    }
  }

  if (!doc.verdicts.empty()) os << "\n";
  for (const auto& v : doc.verdicts) {
    os << "verdict " << v.subject << ": " << v.status;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const ReportDocument& doc) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  bool first = true;
  for (const auto& nt : doc.tables) {
    const auto& t = nt.table;
    if (!first) os << "\n";
    first = false;
    os << "table,row";
    for (const auto& c : t.column_labels()) os << "," << c;
    os << "\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
      os << nt.name << "," << t.row_labels()[r];
      for (std::size_t c = 0; c < t.columns(); ++c) os << "," << cell_text(t, r, c, false);
      os << "\n";
    }
  }
  return os.str();
}

std::string render(const ReportDocument& doc, Format format) {
  switch (format) {
    case Format::Json:
      return render_json(doc);
    case Format::Csv:
      return render_csv(doc);
    case Format::Text:
      break;
  }
  return render_text(doc);
}

}  // namespace pbrcheck
