#include "pbrcheck/report.hpp"

#include <locale>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "pbr/errors.hpp"
#include "pbrcheck/commands.hpp"

namespace pbrcheck {
namespace {

std::vector<CommandResult> every_command() {
  std::vector<CommandResult> out;
  out.push_back(cmd_pbr_table(pbr::tol::kProb));
  out.push_back(cmd_mz(pbr::tol::kProb));
  out.push_back(cmd_theta(std::numbers::pi / 3, pbr::tol::kProb));
  out.push_back(cmd_feasibility({Scenario::Pbr, 4, 0.3, 1}, pbr::tol::kProb));
  out.push_back(cmd_feasibility({Scenario::Pbr, 3, 0.0, 1}, pbr::tol::kProb));
  out.push_back(cmd_feasibility({Scenario::Mz, 5, 0.6, 1}, pbr::tol::kProb));
  out.push_back(cmd_montecarlo({2000, 4, SamplingModel::PsiOntic, 1}, pbr::tol::kProb));
  out.push_back(cmd_montecarlo({2000, 4, SamplingModel::MzConstant, 1}, 0.3));
  return out;
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(FormatNumberTest, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.25), "0.25");
  EXPECT_EQ(format_number(std::numbers::sqrt2 / (2 * std::numbers::sqrt2 + 2)), "0.292893218813");
  EXPECT_EQ(format_number(1e-9), "1e-09");
  EXPECT_DOUBLE_EQ(round12(0.24999999999999989), 0.25);
}

TEST(ReportJsonTest, ReparsesToIdenticalBytes) {
  for (const auto& result : every_command()) {
    const auto first = render_json(result.document);
    const auto doc = parse_report(first);
    EXPECT_EQ(render_json(doc), first) << result.document.scenario;
    EXPECT_EQ(doc.tables.size(), result.document.tables.size());
    for (const auto& t : doc.tables) {
      for (std::size_t r = 0; r < t.table.rows(); ++r) EXPECT_NEAR(t.table.row_sum(r), 1.0, 1e-9);
    }
  }
}

TEST(ReportJsonTest, RejectsInconsistentZeroFlags) {
  auto j = nlohmann::ordered_json::parse(render_json(cmd_pbr_table(pbr::tol::kProb).document));
  j["tables"][0]["zero_flags"][0][1] = true;
  EXPECT_THROW(from_json(j), pbr::DomainError);
}

TEST(ReportJsonTest, RejectsBrokenRowSum) {
  auto j = nlohmann::ordered_json::parse(render_json(cmd_pbr_table(pbr::tol::kProb).document));
  j["tables"][0]["probabilities"][2][1] = 0.6;
  EXPECT_THROW(from_json(j), pbr::DomainError);
}

TEST(ReportJsonTest, RejectsMissingField) {
  auto j = nlohmann::ordered_json::parse(render_json(cmd_mz(pbr::tol::kProb).document));
  j.erase("tables");
  EXPECT_THROW(from_json(j), nlohmann::json::exception);
}

TEST(ReportTextTest, PbrTableHasFourZeroCells) {
  const auto text = render_text(cmd_pbr_table(pbr::tol::kProb).document);
  EXPECT_EQ(count_substr(text, "[0]"), 4u);
  EXPECT_NE(text.find("verdict zero-pattern: matches"), std::string::npos);
}

TEST(ReportTextTest, DisplayToleranceOnlyMovesFlags) {
  const auto coarse = cmd_pbr_table(0.3);
  EXPECT_EQ(coarse.exit_code, kExitOk);
  EXPECT_EQ(count_substr(render_text(coarse.document), "[0]"), 12u);
}

TEST(ReportCsvTest, PbrTableShape) {
  const auto csv = render_csv(cmd_pbr_table(pbr::tol::kProb).document);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "table,row,xi1,xi2,xi3,xi4");
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_EQ(count_substr(lines[i], ","), 5u);
  EXPECT_EQ(lines[1], "born,|00>,0,0.25,0.25,0.5");
}

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

TEST(ReportLocaleTest, OutputIgnoresGlobalLocale) {
  const auto reference_text = render_text(cmd_mz(pbr::tol::kProb).document);
  const auto reference_json = render_json(cmd_mz(pbr::tol::kProb).document);
  const auto previous = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  const auto text = render_text(cmd_mz(pbr::tol::kProb).document);
  const auto json = render_json(cmd_mz(pbr::tol::kProb).document);
  const auto feas = render_text(cmd_feasibility({Scenario::Pbr, 4, 0.3, 0}, pbr::tol::kProb).document);
  std::locale::global(previous);
  EXPECT_EQ(text, reference_text);
  EXPECT_EQ(json, reference_json);
  EXPECT_EQ(feas.find("0,25"), std::string::npos);
}

TEST(CommandTest, MachZehnder) {
  const auto r = cmd_mz(pbr::tol::kProb);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NEAR(r.document.find_quantity("N2")->value, 0.292893218813, 1e-12);
  const auto& t = r.document.find_table("compatibility")->table;
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(t.at(0, k), 0.25, 1e-12);
  EXPECT_EQ(r.document.find_verdict("compatibility")->status, "compatible");
}

TEST(CommandTest, Theta) {
  const auto right = cmd_theta(std::numbers::pi / 2, pbr::tol::kProb);
  EXPECT_NEAR(right.document.find_quantity("overlap")->value, 0.0, 1e-15);
  const auto& t = right.document.find_table("theta-products")->table;
  for (std::size_t r = 0; r < t.rows(); ++r) EXPECT_NEAR(t.row_sum(r), 1.0, 1e-12);
  EXPECT_NEAR(cmd_theta(std::numbers::pi / 3, pbr::tol::kProb).document.find_quantity("overlap")->value,
              0.5, 1e-15);
  EXPECT_THROW(cmd_theta(0.0, pbr::tol::kProb), UsageError);
  EXPECT_THROW(cmd_theta(4.0, pbr::tol::kProb), UsageError);
}

TEST(CommandTest, FeasibilityExitCodes) {
  EXPECT_EQ(cmd_feasibility({Scenario::Pbr, 4, 0.0, 0}, pbr::tol::kProb).exit_code, kExitOk);
  EXPECT_EQ(cmd_feasibility({Scenario::Pbr, 4, 0.3, 0}, pbr::tol::kProb).exit_code, kExitNegative);
  EXPECT_EQ(cmd_feasibility({Scenario::Mz, 4, 0.3, 0}, pbr::tol::kProb).exit_code, kExitOk);
  EXPECT_EQ(cmd_feasibility({Scenario::Pbr, 1, 1.0, 0}, pbr::tol::kProb).exit_code, kExitNegative);
  EXPECT_EQ(cmd_feasibility({Scenario::Mz, 8, 1.0, 0}, pbr::tol::kProb).exit_code, kExitOk);
  const auto r = cmd_feasibility({Scenario::Pbr, 6, 0.5, 0}, pbr::tol::kProb);
  EXPECT_EQ(r.document.find_verdict("agreement")->status, "agree");
}

TEST(CommandTest, FeasibilityParameterErrors) {
  EXPECT_THROW(cmd_feasibility({Scenario::Pbr, 0, 0.3, 0}, pbr::tol::kProb), UsageError);
  EXPECT_THROW(cmd_feasibility({Scenario::Pbr, 9, 0.3, 0}, pbr::tol::kProb), UsageError);
  EXPECT_THROW(cmd_feasibility({Scenario::Pbr, 4, -0.1, 0}, pbr::tol::kProb), UsageError);
  EXPECT_THROW(cmd_feasibility({Scenario::Pbr, 4, 1.1, 0}, pbr::tol::kProb), UsageError);
  EXPECT_THROW(cmd_feasibility({Scenario::Pbr, 1, 0.5, 0}, pbr::tol::kProb), UsageError);
}

TEST(CommandTest, MonteCarloDeterministicAndDegenerate) {
  const MonteCarloParams params{100000, 42, SamplingModel::PsiOntic, 0};
  const auto a = cmd_montecarlo(params, pbr::tol::kProb);
  auto serial = params;
  serial.lanes = 1;
  const auto b = cmd_montecarlo(serial, pbr::tol::kProb);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(render_json(a.document), render_json(b.document));

  const auto one = cmd_montecarlo({1, 42, SamplingModel::PsiOntic, 1}, pbr::tol::kProb);
  const auto& t = one.document.find_table("empirical")->table;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::size_t ones = 0;
    for (std::size_t c = 0; c < t.columns(); ++c) ones += t.at(r, c) == 1.0 ? 1 : 0;
    EXPECT_EQ(ones, 1u);
  }
  EXPECT_NO_THROW(parse_report(render_json(one.document)));
  EXPECT_THROW(cmd_montecarlo({0, 1, SamplingModel::PsiOntic, 1}, pbr::tol::kProb), UsageError);
}

}  // namespace
}  // namespace pbrcheck
