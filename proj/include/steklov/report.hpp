#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steklov/certify.hpp"
#include "steklov/ledger.hpp"

namespace steklov {

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::string command;  // enclose|table|gaps|constants|expand|verify-monotonicity|schur-check
  int n = 0;            // single-N commands
  int n_from = 0;       // range commands; 0 = command default
  int n_to = 0;
  long half_width = 320;
  int dps = 140;
  OutputFormat format = OutputFormat::text;
  std::string out_path;  // empty = stdout
  bool per_block = false;
};

// Throws domain_violation naming the offending field.
void validate_config(const RunConfig& config);

// One rendered field: `text` is the 18-decimal outward presentation used by
// CSV/text, `full` the full-precision decimal string used by JSON (empty =
// same as text).
struct ReportField {
  std::string key;
  std::string text;
  std::string full;
};

// A report row: ordered fields, deterministic order.
struct ReportRecord {
  std::string kind;  // sigma_row|gap_row|constant_row|expansion_row|block_row|verdict
  std::vector<ReportField> fields;
};

ReportRecord sigma_row(const SigmaEnclosure& enc);
ReportRecord block_row(int n, const BlockEnclosure& be);
ReportRecord gap_row(const GapRow& row);
ReportRecord constant_row(const AuditRow& row);
ReportRecord expansion_row(int n, const ExpansionValue& ev,
                           const SigmaEnclosure* overlay);

// Deterministic renderings: fixed key order (field insertion order), interval
// endpoints as decimal strings (full precision in JSON, 18 outward-rounded
// decimals in CSV/text).
std::string json_report(const std::vector<ReportRecord>& rows);
std::string csv_report(const std::vector<ReportRecord>& rows);
std::string text_report(const std::vector<ReportRecord>& rows);

// CSV to file; rows must share a kind (header from the first row).
void emit_plot_data(const std::vector<ReportRecord>& rows,
                    const std::string& path);

// Exit status: 0 pass, 2 certification/ledger/gap violation, 3 bad config.
int run(const RunConfig& config);

}  // namespace steklov
