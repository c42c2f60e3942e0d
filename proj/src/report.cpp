#include "steklov/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "steklov/schur.hpp"

namespace steklov {

namespace {

ReportField plain(const std::string& key, const std::string& value) {
  return ReportField{key, value, ""};
}

ReportField interval_lo(const std::string& key, const Interval& x) {
  return ReportField{key, x.lo_str(18), x.lo_str_full()};
}

ReportField interval_hi(const std::string& key, const Interval& x) {
  return ReportField{key, x.hi_str(18), x.hi_str_full()};
}

std::string short_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void validate_config(const RunConfig& config) {
  static const std::set<std::string> commands = {
      "enclose", "table",  "gaps",       "constants",
      "expand",  "verify-monotonicity",  "schur-check"};
  if (!commands.count(config.command))
    throw domain_violation("config: unknown command " + config.command);
  if (config.half_width < 1) throw domain_violation("config: --m must be >= 1");
  if (config.dps < 30) throw domain_violation("config: --dps must be >= 30");
  bool needs_n = config.command == "enclose" || config.command == "schur-check";
  if (needs_n && config.n < 3)
    throw domain_violation("config: --n must be >= 3 for " + config.command);
  if (config.n != 0 && config.n < 3)
    throw domain_violation("config: --n must be >= 3");
  if (config.n_from != 0 && config.n_from < 3)
    throw domain_violation("config: --from must be >= 3");
  if (config.n_from != 0 && config.n_to != 0 && config.n_to < config.n_from)
    throw domain_violation("config: --to must be >= --from");
}

ReportRecord sigma_row(const SigmaEnclosure& enc) {
  ReportRecord rec;
  rec.kind = "sigma_row";
  rec.fields.push_back(plain("n", std::to_string(enc.n_sides)));
  rec.fields.push_back(interval_lo("sigma_lo", enc.sigma));
  rec.fields.push_back(interval_hi("sigma_hi", enc.sigma));
  rec.fields.push_back(plain("width", short_double(enc.sigma.width_d())));
  rec.fields.push_back(plain("argmax_block", std::to_string(enc.argmax_block)));
  return rec;
}

ReportRecord block_row(int n, const BlockEnclosure& be) {
  ReportRecord rec;
  rec.kind = "block_row";
  rec.fields.push_back(plain("n", std::to_string(n)));
  rec.fields.push_back(plain("r", std::to_string(be.block.residue)));
  rec.fields.push_back(interval_lo("lambda_lo", be.lambda));
  rec.fields.push_back(interval_hi("lambda_hi", be.lambda));
  rec.fields.push_back(plain("section_m", std::to_string(be.section_half_width)));
  rec.fields.push_back(plain("e_norm", short_double(be.tail.e_norm.hi_d())));
  rec.fields.push_back(plain("c_norm", short_double(be.tail.c_norm.hi_d())));
  return rec;
}

ReportRecord gap_row(const GapRow& row) {
  ReportRecord rec;
  rec.kind = "gap_row";
  rec.fields.push_back(plain("n", std::to_string(row.n_sides)));
  rec.fields.push_back(interval_lo("gap_lo", row.gap));
  return rec;
}

ReportRecord constant_row(const AuditRow& row) {
  ReportRecord rec;
  rec.kind = "constant_row";
  rec.fields.push_back(plain("name", row.name));
  rec.fields.push_back(interval_lo("lo", row.value));
  rec.fields.push_back(interval_hi("hi", row.value));
  rec.fields.push_back(
      plain("bound", row.has_bound ? short_double(row.bound) : ""));
  rec.fields.push_back(
      plain("pass", row.has_bound ? (row.pass ? "pass" : "fail") : "-"));
  return rec;
}

ReportRecord expansion_row(int n, const ExpansionValue& ev,
                           const SigmaEnclosure* overlay) {
  ReportRecord rec;
  rec.kind = "expansion_row";
  rec.fields.push_back(plain("n", std::to_string(n)));
  rec.fields.push_back(interval_lo("center_lo", ev.center));
  rec.fields.push_back(interval_hi("center_hi", ev.center));
  rec.fields.push_back(interval_lo("band_lo", ev.band));
  rec.fields.push_back(interval_hi("band_hi", ev.band));
  if (overlay) {
    rec.fields.push_back(interval_lo("sigma_lo", overlay->sigma));
    rec.fields.push_back(interval_hi("sigma_hi", overlay->sigma));
  } else {
    rec.fields.push_back(plain("sigma_lo", ""));
    rec.fields.push_back(plain("sigma_hi", ""));
  }
  return rec;
}

std::string json_report(const std::vector<ReportRecord>& rows) {
  std::ostringstream os;
  os << "{\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << "{\"kind\":\"" << json_escape(rows[i].kind) << "\"";
    for (const ReportField& f : rows[i].fields)
      os << ",\"" << json_escape(f.key) << "\":\""
         << json_escape(f.full.empty() ? f.text : f.full) << "\"";
    os << "}";
  }
  os << "]}\n";
  return os.str();
}

std::string csv_report(const std::vector<ReportRecord>& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  for (size_t j = 0; j < rows[0].fields.size(); ++j)
    os << (j ? "," : "") << rows[0].fields[j].key;
  os << "\n";
  for (const ReportRecord& rec : rows) {
    for (size_t j = 0; j < rec.fields.size(); ++j)
      os << (j ? "," : "") << rec.fields[j].text;
    os << "\n";
  }
  return os.str();
}

std::string text_report(const std::vector<ReportRecord>& rows) {
  std::ostringstream os;
  for (const ReportRecord& rec : rows) {
    os << rec.kind;
    for (const ReportField& f : rec.fields) os << "  " << f.key << "=" << f.text;
    os << "\n";
  }
  return os.str();
}

void emit_plot_data(const std::vector<ReportRecord>& rows,
                    const std::string& path) {
  for (const ReportRecord& rec : rows)
    if (rec.kind != rows[0].kind)
      throw domain_violation("emit_plot_data: rows must share a kind");
  std::ofstream out(path);
  if (!out) throw domain_violation("emit_plot_data: cannot open " + path);
  if (rows.empty()) {
    out << "n,sigma_lo,sigma_hi,expansion_center,band_lo,band_hi\n";
    return;
  }
  out << csv_report(rows);
  if (!out) throw domain_violation("emit_plot_data: write failed on " + path);
}

namespace {

std::vector<SigmaEnclosure> enclose_range(int from, int to, long M) {
  std::vector<SigmaEnclosure> out;
  for (int n = from; n <= to; ++n) out.push_back(sigma_enclosure(n, M));
  return out;
}

void append_per_block(std::vector<ReportRecord>& rows,
                      const SigmaEnclosure& enc) {
  for (const BlockEnclosure& be : enc.per_block)
    rows.push_back(block_row(enc.n_sides, be));
}

}  // namespace

int run(const RunConfig& config) {
  try {
    validate_config(config);
  } catch (const domain_violation& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }

  set_precision_dps(config.dps);
  const long M = config.half_width;
  std::vector<ReportRecord> rows;
  bool violation = false;

  try {
    if (config.command == "enclose") {
      SigmaEnclosure enc = sigma_enclosure(config.n, M);
      rows.push_back(sigma_row(enc));
      if (config.per_block) append_per_block(rows, enc);
    } else if (config.command == "table") {
      int from = config.n_from ? config.n_from : 3;
      int to = config.n_to ? config.n_to : 20;
      for (const SigmaEnclosure& enc : enclose_range(from, to, M)) {
        rows.push_back(sigma_row(enc));
        if (config.per_block) append_per_block(rows, enc);
      }
    } else if (config.command == "gaps") {
      int from = config.n_from ? config.n_from : 3;
      int to = config.n_to ? config.n_to : 20;
      std::vector<SigmaEnclosure> encs = enclose_range(from, to, M);
      try {
        for (const GapRow& g : gap_verification(from, to, encs))
          rows.push_back(gap_row(g));
      } catch (const domain_violation& e) {
        violation = true;
        ReportRecord rec;
        rec.kind = "verdict";
        rec.fields.push_back(plain("status", "FAIL"));
        rec.fields.push_back(plain("reason", e.what()));
        rows.push_back(rec);
      }
    } else if (config.command == "constants") {
      const RemainderConstants& lg = constant_closure();
      for (const AuditRow& row : lg.audit) rows.push_back(constant_row(row));
      violation = !lg.all_bounds_hold;
    } else if (config.command == "expand") {
      int from = config.n ? config.n : (config.n_from ? config.n_from : 20);
      int to = config.n ? config.n : (config.n_to ? config.n_to : from);
      const int overlay_cap = 48;  // certified enclosure only while cheap
      for (int n = from; n <= to; ++n) {
        ExpansionValue ev = expansion_value(n);
        if (n <= overlay_cap) {
          SigmaEnclosure enc = sigma_enclosure(n, M);
          rows.push_back(expansion_row(n, ev, &enc));
          bool inside = ev.band.lo_d() <= enc.sigma.lo_d() &&
                        enc.sigma.hi_d() <= ev.band.hi_d();
          if (!inside) violation = true;
        } else {
          rows.push_back(expansion_row(n, ev, nullptr));
        }
      }
    } else if (config.command == "verify-monotonicity") {
      std::vector<SigmaEnclosure> encs = enclose_range(3, 20, M);
      std::string reason;
      Interval min_gap;
      bool gaps_ok = true, margin_ok = true;
      try {
        std::vector<GapRow> gaps = gap_verification(3, 20, encs);
        min_gap = gaps[0].gap;
        for (const GapRow& g : gaps)
          if (g.gap.lo_d() < min_gap.lo_d()) min_gap = g.gap;
      } catch (const domain_violation& e) {
        gaps_ok = false;
        reason = e.what();
      }
      Interval margin;
      try {
        margin = monotonicity_margin();
      } catch (const domain_violation& e) {
        margin_ok = false;
        if (!reason.empty()) reason += "; ";
        reason += e.what();
      }
      violation = !(gaps_ok && margin_ok);
      ReportRecord rec;
      rec.kind = "verdict";
      rec.fields.push_back(plain("status", violation ? "FAIL" : "PASS"));
      rec.fields.push_back(plain("gaps_3_20", gaps_ok ? "pass" : "fail"));
      rec.fields.push_back(
          plain("min_gap_lo", gaps_ok ? min_gap.lo_str(18) : ""));
      rec.fields.push_back(plain("margin_n_ge_20", margin_ok ? "pass" : "fail"));
      rec.fields.push_back(
          plain("margin_lo", margin_ok ? margin.lo_str(18) : ""));
      rec.fields.push_back(plain("reason", reason));
      rows.push_back(rec);
    } else if (config.command == "schur-check") {
      Alpha a = Alpha::for_sides(config.n);
      WeightCoefficients coeffs = coefficient_v_recursive(2 * M + 2, a);
      BlockEnclosure be = block_enclosure(config.n, 1, M, coeffs);
      ReportRecord rec;
      rec.kind = "verdict";
      rec.fields.push_back(plain("n", std::to_string(config.n)));
      try {
        SchurState st = beta_and_kappa(config.n, M, coeffs);
        SchurRoot root = schur_root(st);
        bool ok = intersects(root.lambda_star, be.lambda);
        violation = !ok;
        rec.fields.push_back(plain("status", ok ? "PASS" : "FAIL"));
        rec.fields.push_back(interval_lo("lambda_star_lo", root.lambda_star));
        rec.fields.push_back(interval_hi("lambda_star_hi", root.lambda_star));
        rec.fields.push_back(interval_lo("block_lambda_lo", be.lambda));
        rec.fields.push_back(interval_hi("block_lambda_hi", be.lambda));
      } catch (const domain_violation& e) {
        violation = true;
        rec.fields.push_back(plain("status", "FAIL"));
        rec.fields.push_back(plain("reason", e.what()));
      }
      rows.push_back(rec);
    }
  } catch (const domain_violation& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  std::string rendered;
  if (config.format == OutputFormat::json) rendered = json_report(rows);
  else if (config.format == OutputFormat::csv) rendered = csv_report(rows);
  else rendered = text_report(rows);

  if (config.out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(config.out_path);
    if (!out) {
      std::cerr << "cannot open " << config.out_path << "\n";
      return 3;
    }
    out << rendered;
  }
  return violation ? 2 : 0;
}

}  // namespace steklov
