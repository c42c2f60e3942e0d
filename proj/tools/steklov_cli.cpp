#include <CLI11.hpp>

#include "steklov/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Certified Steklov eigenvalue enclosures for regular polygons"};
  app.require_subcommand(1);

  steklov::RunConfig config;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--m", config.half_width, "section half-width")
        ->default_val(320);
    cmd->add_option("--dps", config.dps, "working precision, decimal digits")
        ->default_val(140);
    cmd->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", config.out_path, "output path (default stdout)");
  };

  CLI::App* enclose = app.add_subcommand("enclose", "certify sigma_1 for one N");
  enclose->add_option("--n", config.n, "number of sides")->required();
  enclose->add_flag("--per-block", config.per_block, "emit per-residue rows");
  add_common(enclose);

  CLI::App* table = app.add_subcommand("table", "certify a range of N");
  table->add_option("--from", config.n_from, "first N")->default_val(3);
  table->add_option("--to", config.n_to, "last N")->default_val(20);
  table->add_flag("--per-block", config.per_block, "emit per-residue rows");
  add_common(table);

  CLI::App* gaps = app.add_subcommand("gaps", "certified gaps sigma(N+1)-sigma(N)");
  gaps->add_option("--from", config.n_from)->default_val(3);
  gaps->add_option("--to", config.n_to)->default_val(20);
  add_common(gaps);

  CLI::App* constants = app.add_subcommand("constants", "remainder-constant audit ledger");
  add_common(constants);

  CLI::App* expand = app.add_subcommand("expand", "five-term expansion with remainder band");
  expand->add_option("--n", config.n, "single N");
  expand->add_option("--from", config.n_from, "first N");
  expand->add_option("--to", config.n_to, "last N");
  add_common(expand);

  CLI::App* mono = app.add_subcommand("verify-monotonicity",
                                      "gaps on 3..20 plus the N>=20 margin");
  add_common(mono);

  CLI::App* schur = app.add_subcommand("schur-check",
                                       "cross-check the Schur root against the r=1 block");
  schur->add_option("--n", config.n, "number of sides")->required();
  add_common(schur);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (format == "json") config.format = steklov::OutputFormat::json;
  else if (format == "csv") config.format = steklov::OutputFormat::csv;
  else config.format = steklov::OutputFormat::text;

  return steklov::run(config);
}
