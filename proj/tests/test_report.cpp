#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "steklov/report.hpp"

using namespace steklov;

namespace {
struct PrecisionGuard {
  PrecisionGuard() { set_precision_dps(60); }
};
PrecisionGuard guard;

SigmaEnclosure sample_enclosure() {
  SigmaEnclosure enc;
  enc.n_sides = 7;
  enc.sigma = Interval::from_string("0.986501698990249543") +
              Interval::from_endpoints(0.0, 4.5e-4);
  enc.argmax_block = 1;
  return enc;
}
}  // namespace

TEST_CASE("config validation") {
  RunConfig c;
  c.command = "table";
  validate_config(c);  // defaults are fine
  c.command = "bogus";
  CHECK_THROWS_AS(validate_config(c), domain_violation);
  c.command = "enclose";
  c.n = 0;
  CHECK_THROWS_AS(validate_config(c), domain_violation);
  c.n = 2;
  CHECK_THROWS_AS(validate_config(c), domain_violation);
  c.n = 8;
  c.half_width = 0;
  CHECK_THROWS_AS(validate_config(c), domain_violation);
  c.half_width = 320;
  c.dps = 10;
  CHECK_THROWS_AS(validate_config(c), domain_violation);
  c.dps = 140;
  c.command = "table";
  c.n = 0;
  c.n_from = 5;
  c.n_to = 4;
  CHECK_THROWS_AS(validate_config(c), domain_violation);
  c.n_to = 9;
  validate_config(c);
}

TEST_CASE("json rendering is deterministic and round-trips") {
  SigmaEnclosure enc = sample_enclosure();
  std::vector<ReportRecord> rows = {sigma_row(enc)};
  std::string a = json_report(rows);
  std::string b = json_report(rows);
  CHECK(a == b);

  nlohmann::json doc = nlohmann::json::parse(a);
  REQUIRE(doc.contains("rows"));
  REQUIRE(doc["rows"].size() == 1u);
  const auto& row = doc["rows"][0];
  CHECK(row["kind"] == "sigma_row");
  CHECK(row["n"] == "7");
  CHECK(row["argmax_block"] == "1");
  // parsed endpoints must straddle the stored interval
  double lo = std::stod(row["sigma_lo"].get<std::string>());
  double hi = std::stod(row["sigma_hi"].get<std::string>());
  CHECK(lo <= enc.sigma.lo_d() + 1e-15);
  CHECK(hi >= enc.sigma.hi_d() - 1e-15);
  CHECK(lo < hi);
}

TEST_CASE("csv rendering") {
  SigmaEnclosure enc = sample_enclosure();
  std::vector<ReportRecord> rows = {sigma_row(enc), sigma_row(enc)};
  std::string csv = csv_report(rows);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "n,sigma_lo,sigma_hi,width,argmax_block");
  int data_lines = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++data_lines;
  CHECK(data_lines == 2);
}

TEST_CASE("text rendering rounds endpoints outward") {
  SigmaEnclosure enc = sample_enclosure();
  std::string text = text_report({sigma_row(enc)});
  // pull the sigma_lo=... token
  auto pos = text.find("sigma_lo=");
  REQUIRE(pos != std::string::npos);
  auto end = text.find(' ', pos);
  std::string val = text.substr(pos + 9, end - pos - 9);
  double rendered_lo = std::stod(val);
  CHECK(rendered_lo <= enc.sigma.lo_d());
}

TEST_CASE("constant rows carry verdicts") {
  AuditRow row;
  row.name = "E0";
  row.value = Interval::from_string("507.61355685");
  row.bound = 508.0;
  row.has_bound = true;
  row.pass = true;
  ReportRecord rec = constant_row(row);
  CHECK(rec.kind == "constant_row");
  CHECK(rec.fields.back().text == "pass");
  row.has_bound = false;
  CHECK(constant_row(row).fields.back().text == "-");
}

TEST_CASE("plot data emission") {
  const std::string path = "test_report_plot.csv";
  emit_plot_data({}, path);
  {
    std::ifstream in(path);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "n,sigma_lo,sigma_hi,expansion_center,band_lo,band_hi");
    std::string extra;
    CHECK_FALSE(std::getline(in, extra));
  }
  std::remove(path.c_str());

  SigmaEnclosure enc = sample_enclosure();
  GapRow gap;
  gap.n_sides = 7;
  gap.gap = Interval::from_endpoints(0.0, 1.0);
  CHECK_THROWS_AS(emit_plot_data({sigma_row(enc), gap_row(gap)}, path),
                  domain_violation);
}
