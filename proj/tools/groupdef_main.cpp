// groupdef command-line interface: construct finite p-groups of prescribed
// deficiency and certify them with coset enumeration + homology oracles.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupdef/coset_enum.hpp"
#include "groupdef/deficiency.hpp"
#include "groupdef/errors.hpp"
#include "groupdef/homology.hpp"
#include "groupdef/json_io.hpp"
#include "groupdef/presentation.hpp"
#include "groupdef/version.hpp"

namespace {

using groupdef::BlockCounts;
using groupdef::CertifyMode;
using groupdef::CertifyOptions;
using groupdef::EnumerationOptions;
using groupdef::EnumerationStrategy;
using groupdef::FinAbGroup;
using groupdef::Presentation;
using groupdef::PresentationFormat;
using nlohmann::json;

// Exit codes, one per error class.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitCosetLimit = 3;
constexpr int kExitCeiling = 4;
constexpr int kExitCertGap = 5;
constexpr int kExitUsage = 64;

struct GlobalOptions {
  bool json = false;
  bool no_timings = false;
};

class Report {
 public:
  Report(const GlobalOptions& opts, std::string command)
      : opts_(opts), start_(std::chrono::steady_clock::now()) {
    j_["schema_version"] = groupdef::kReportSchemaVersion;
    j_["tool"] = "groupdef";
    j_["version"] = groupdef::kVersion;
    j_["command"] = std::move(command);
    j_["params"] = json::object();
    j_["result"] = json::object();
  }

  json& params() { return j_["params"]; }
  json& result() { return j_["result"]; }

  void text_line(const std::string& line) { text_ += line + "\n"; }

  void emit() {
    if (opts_.json) {
      if (!opts_.no_timings) {
        const double ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start_)
                .count();
        j_["timings_ms"] = {{"total", ms}};
      }
      std::cout << j_.dump(2) << "\n";
    } else {
      std::cout << text_;
    }
  }

 private:
  const GlobalOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  json j_;
  std::string text_;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-" || path == "--") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw groupdef::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("GROUPDEF_MAX_COSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid GROUPDEF_MAX_COSETS='" << env
              << "'\n";
  }
  return groupdef::kDefaultMaxCosets;
}

json counts_to_json(const BlockCounts& bc) {
  json j{{"r", bc.r}, {"s", bc.s}, {"t", bc.t},
         {"m", bc.trace_m}, {"d", bc.trace_d}};
  if (bc.p != 0) j["p"] = bc.p;
  return j;
}

json group_to_json(const FinAbGroup& g) {
  json factors = json::array();
  for (const mpz_class& f : g.invariant_factors()) factors.push_back(f.get_str());
  return {{"torsion_free_rank", g.torsion_free_rank()},
          {"invariant_factors", std::move(factors)},
          {"display", g.to_string()}};
}

json certificate_to_json(const groupdef::DeficiencyCertificate& cert) {
  json j;
  j["lower_bound"] = cert.lower_bound;
  j["upper_bound"] = cert.upper_bound ? json(*cert.upper_bound) : json();
  j["certified"] = cert.certified();
  j["certified_value"] =
      cert.certified_value ? json(*cert.certified_value) : json();
  j["provenance"] = cert.provenance;
  if (!cert.error.empty()) j["error"] = cert.error;
  return j;
}

void print_certificate(Report& report,
                       const groupdef::DeficiencyCertificate& cert) {
  report.result()["certificate"] = certificate_to_json(cert);
  report.text_line("certificate: " + cert.to_string());
}

PresentationFormat parse_format(const std::string& name) {
  if (name == "text") return PresentationFormat::Text;
  if (name == "json") return PresentationFormat::Json;
  if (name == "gap") return PresentationFormat::Gap;
  throw groupdef::InvalidArgument("unknown format '" + name + "'");
}

int cmd_solve(const GlobalOptions& gopts, long n) {
  Report report(gopts, "solve");
  report.params()["n"] = n;
  BlockCounts bc = groupdef::solve(n);
  const std::string label = groupdef::block_product_label(bc);
  report.result()["counts"] = counts_to_json(bc);
  report.result()["label"] = label;
  report.result()["deficiency"] = groupdef::deficiency_of_counts(bc);
  report.text_line("n: " + std::to_string(n));
  report.text_line("m: " + std::to_string(bc.trace_m));
  report.text_line("d: " + std::to_string(bc.trace_d));
  report.text_line("(r, s, t): (" + std::to_string(bc.r) + ", " +
                   std::to_string(bc.s) + ", " + std::to_string(bc.t) + ")");
  report.text_line("group: " + label);
  report.text_line("deficiency: " +
                   std::to_string(groupdef::deficiency_of_counts(bc)));
  report.emit();
  return kExitOk;
}

int cmd_construct(const GlobalOptions& gopts, unsigned long p, long n,
                  const std::string& format, const std::string& verify,
                  const CertifyOptions& copts) {
  Report report(gopts, "construct");
  report.params()["p"] = p;
  report.params()["n"] = n;
  report.params()["format"] = format;
  if (!verify.empty()) report.params()["verify"] = verify;

  Presentation pres = groupdef::construct(p, n);
  const PresentationFormat fmt = parse_format(format);
  if (fmt == PresentationFormat::Json) {
    report.result()["presentation"] =
        json::parse(groupdef::presentation_to_json(pres));
    report.text_line(groupdef::presentation_to_json(pres));
  } else {
    const std::string rendered = groupdef::render_presentation(pres, fmt);
    report.result()["presentation"] = rendered;
    report.text_line("presentation: " + rendered);
  }
  report.result()["counts"] = counts_to_json(*pres.pedigree());
  report.result()["label"] = groupdef::block_product_label(*pres.pedigree());
  report.result()["generators"] = pres.generator_count();
  report.result()["relators"] = pres.relator_count();
  report.result()["deficiency"] = groupdef::presentation_deficiency(pres);
  if (fmt != PresentationFormat::Json) {
    report.text_line("group: " +
                     groupdef::block_product_label(*pres.pedigree()));
    report.text_line("generators: " + std::to_string(pres.generator_count()));
    report.text_line("relators: " + std::to_string(pres.relator_count()));
    report.text_line("deficiency: " +
                     std::to_string(groupdef::presentation_deficiency(pres)));
  }

  int exit_code = kExitOk;
  if (!verify.empty()) {
    const CertifyMode mode =
        verify == "table" ? CertifyMode::Table : CertifyMode::Kunneth;
    groupdef::DeficiencyCertificate cert = groupdef::certify(pres, mode, copts);
    print_certificate(report, cert);
    if (!cert.certified()) exit_code = kExitCertGap;
  }
  report.emit();
  return exit_code;
}

int cmd_order(const GlobalOptions& gopts, const std::string& file,
              const EnumerationOptions& eopts, bool emit_table) {
  Report report(gopts, "order");
  report.params()["file"] = file.empty() ? "-" : file;
  report.params()["max_cosets"] = eopts.max_cosets;
  report.params()["strategy"] =
      eopts.strategy == EnumerationStrategy::Hlt ? "hlt" : "felsch";
  Presentation pres = groupdef::read_presentation(read_input(file));
  groupdef::CosetTable table = groupdef::enumerate(pres, eopts);
  report.result()["order"] = table.coset_count();
  report.text_line("order: " + std::to_string(table.coset_count()));
  if (emit_table) {
    const std::string gt_json = groupdef::group_table_to_json(
        groupdef::multiplication_table(table), pres.generator_names());
    report.result()["group_table"] = json::parse(gt_json);
    report.text_line(gt_json);
  }
  report.emit();
  return kExitOk;
}

int cmd_homology(const GlobalOptions& gopts, int degree,
                 const std::string& file, std::string via,
                 const EnumerationOptions& eopts, std::size_t ceiling) {
  Report report(gopts, "homology");
  report.params()["degree"] = degree;
  report.params()["file"] = file.empty() ? "-" : file;
  Presentation pres = groupdef::read_presentation(read_input(file));

  if (via.empty()) via = degree == 1 ? "presentation" : "table";
  report.params()["via"] = via;

  FinAbGroup result;
  if (degree == 1) {
    if (via == "presentation") {
      result = groupdef::h1_from_presentation(pres);
    } else if (via == "table") {
      result = groupdef::h1_from_table(
          groupdef::multiplication_table(groupdef::enumerate(pres, eopts)));
    } else if (via == "kunneth") {
      // H1 of a direct product is the direct sum of the factors' H1, which
      // the abelianization matrix already computes.
      if (!pres.pedigree())
        throw groupdef::MissingPedigree("kunneth pipeline needs a pedigree");
      result = groupdef::h1_from_presentation(pres);
    } else {
      throw groupdef::InvalidArgument("unknown pipeline '" + via + "'");
    }
  } else {
    if (via == "table") {
      result = groupdef::h2_from_table(
          groupdef::multiplication_table(groupdef::enumerate(pres, eopts)),
          ceiling);
    } else if (via == "kunneth") {
      if (!pres.pedigree())
        throw groupdef::MissingPedigree("kunneth pipeline needs a pedigree");
      const BlockCounts& bc = *pres.pedigree();
      result = groupdef::h2_of_block_product(bc.p, bc.r, bc.s, bc.t);
    } else {
      throw groupdef::InvalidArgument(
          "degree-2 homology supports --via table|kunneth");
    }
  }
  report.result()["homology"] = group_to_json(result);
  report.text_line("H" + std::to_string(degree) + ": " + result.to_string());
  report.emit();
  return kExitOk;
}

int cmd_certify(const GlobalOptions& gopts, const std::string& file,
                const std::string& mode_name, const CertifyOptions& copts) {
  Report report(gopts, "certify");
  report.params()["file"] = file.empty() ? "-" : file;
  report.params()["mode"] = mode_name;
  Presentation pres = groupdef::read_presentation(read_input(file));
  const CertifyMode mode =
      mode_name == "table" ? CertifyMode::Table : CertifyMode::Kunneth;
  groupdef::DeficiencyCertificate cert = groupdef::certify(pres, mode, copts);
  print_certificate(report, cert);
  report.emit();
  return cert.certified() ? kExitOk : kExitCertGap;
}

int cmd_table(const GlobalOptions& gopts, unsigned long p, long max_n) {
  Report report(gopts, "table");
  report.params()["p"] = p;
  report.params()["max_n"] = max_n;
  json rows = json::array();
  report.text_line("  n  r  s  t  group");
  for (const groupdef::FigureRow& row : groupdef::figure_one_table(p, max_n)) {
    json jr = counts_to_json(row.counts);
    jr["n"] = row.n;
    jr["label"] = row.label;
    jr["deficiency"] = -row.n;
    rows.push_back(std::move(jr));
    char line[64];
    std::snprintf(line, sizeof line, "%3ld %2ld %2ld %2ld  ", row.n,
                  row.counts.r, row.counts.s, row.counts.t);
    report.text_line(line + row.label);
  }
  report.result()["rows"] = std::move(rows);
  report.emit();
  return kExitOk;
}

int cmd_gs_check(const GlobalOptions& gopts, long rank_d, long def_value) {
  Report report(gopts, "gs-check");
  report.params()["d"] = rank_d;
  report.params()["def"] = def_value;
  const bool ok = groupdef::golod_shafarevich_consistent(rank_d, def_value);
  const std::string bound = groupdef::golod_shafarevich_bound_string(rank_d);
  report.result()["bound"] = bound;
  report.result()["consistent"] = ok;
  report.result()["verdict"] = ok ? "consistent" : "violation";
  report.text_line("rank: " + std::to_string(rank_d));
  report.text_line("deficiency: " + std::to_string(def_value));
  report.text_line("bound: deficiency < " + bound);
  report.text_line(std::string("verdict: ") + (ok ? "consistent" : "violation"));
  report.emit();
  return kExitOk;
}

int cmd_parse(const GlobalOptions& gopts, const std::string& file,
              const std::string& format) {
  Report report(gopts, "parse");
  report.params()["file"] = file.empty() ? "-" : file;
  report.params()["format"] = format;
  Presentation pres = groupdef::read_presentation(read_input(file));
  const PresentationFormat fmt = parse_format(format);
  const std::string rendered = groupdef::render_presentation(pres, fmt);
  if (fmt == PresentationFormat::Json)
    report.result()["presentation"] = json::parse(rendered);
  else
    report.result()["presentation"] = rendered;
  report.result()["generators"] = pres.generator_count();
  report.result()["relators"] = pres.relator_count();
  report.result()["deficiency"] = groupdef::presentation_deficiency(pres);
  report.text_line(rendered);
  report.emit();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite p-groups of prescribed deficiency: construction, "
               "coset enumeration, homology, certification"};
  app.set_version_flag("--version", std::string("groupdef ") + groupdef::kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  GlobalOptions gopts;
  app.add_flag("--json", gopts.json, "emit a JSON report instead of text");
  app.add_flag("--no-timings", gopts.no_timings,
               "omit the timings field from JSON reports");

  const std::size_t env_max_cosets = default_max_cosets();

  // solve
  long solve_n = 0;
  auto* solve = app.add_subcommand("solve", "block counts (r, s, t) for deficiency -n");
  solve->add_option("-n", solve_n, "deficiency target (non-negative)")->required();

  // construct
  unsigned long construct_p = 0;
  long construct_n = 0;
  std::string construct_format = "text";
  std::string construct_verify;
  CertifyOptions construct_copts;
  construct_copts.max_cosets = env_max_cosets;
  auto* construct = app.add_subcommand(
      "construct", "presentation of a p-group with deficiency -n");
  construct->add_option("-p", construct_p, "prime")->required();
  construct->add_option("-n", construct_n, "deficiency target")->required();
  construct->add_option("--format", construct_format, "text|json|gap")
      ->check(CLI::IsMember({"text", "json", "gap"}));
  construct->add_option("--verify", construct_verify,
                        "certify the deficiency via table|kunneth")
      ->check(CLI::IsMember({"table", "kunneth"}));
  construct->add_option("--max-cosets", construct_copts.max_cosets,
                        "coset limit for table verification");
  construct->add_option("--h2-ceiling", construct_copts.h2_order_ceiling,
                        "order ceiling for table-based H2");

  // order
  std::string order_file;
  EnumerationOptions order_opts;
  order_opts.max_cosets = env_max_cosets;
  std::string order_strategy = "hlt";
  bool order_emit_table = false;
  auto* order_cmd = app.add_subcommand("order", "group order by coset enumeration");
  order_cmd->add_option("file", order_file, "presentation file (default: stdin)");
  order_cmd->add_option("--max-cosets", order_opts.max_cosets, "coset limit");
  order_cmd->add_option("--strategy", order_strategy, "hlt|felsch")
      ->check(CLI::IsMember({"hlt", "felsch"}));
  order_cmd->add_flag("--emit-table", order_emit_table,
                      "also emit the multiplication table as JSON");

  // homology
  int homology_degree = 0;
  std::string homology_file, homology_via;
  EnumerationOptions homology_eopts;
  homology_eopts.max_cosets = env_max_cosets;
  std::size_t homology_ceiling = groupdef::kDefaultH2OrderCeiling;
  auto* homology = app.add_subcommand("homology", "H1 or H2 of the presented group");
  homology->add_option("--degree", homology_degree, "1|2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  homology->add_option("file", homology_file, "presentation file (default: stdin)");
  homology->add_option("--via", homology_via, "table|kunneth|presentation")
      ->check(CLI::IsMember({"table", "kunneth", "presentation"}));
  homology->add_option("--max-cosets", homology_eopts.max_cosets, "coset limit");
  homology->add_option("--h2-ceiling", homology_ceiling,
                       "order ceiling for table-based H2");

  // certify
  std::string certify_file, certify_mode = "table";
  CertifyOptions certify_copts;
  certify_copts.max_cosets = env_max_cosets;
  auto* certify = app.add_subcommand("certify", "deficiency certificate for a presentation");
  certify->add_option("file", certify_file, "presentation file (default: stdin)");
  certify->add_option("--mode", certify_mode, "table|kunneth")
      ->check(CLI::IsMember({"table", "kunneth"}));
  certify->add_option("--max-cosets", certify_copts.max_cosets, "coset limit");
  certify->add_option("--h2-ceiling", certify_copts.h2_order_ceiling,
                      "order ceiling for table-based H2");

  // table
  unsigned long table_p = 0;
  long table_max_n = 0;
  auto* table = app.add_subcommand("table", "solver table for n = 0..max-n");
  table->add_option("-p", table_p, "prime")->required();
  table->add_option("--max-n", table_max_n, "largest deficiency target")->required();

  // gs-check
  long gs_d = 0, gs_def = 0;
  auto* gs = app.add_subcommand("gs-check", "Golod-Shafarevich consistency screen");
  gs->add_option("-d", gs_d, "rank of the p-group")->required();
  gs->add_option("--def", gs_def, "claimed deficiency")->required();

  // parse
  std::string parse_file, parse_fmt = "text";
  auto* parse = app.add_subcommand("parse", "validate and re-render a presentation");
  parse->add_option("file", parse_file, "presentation file (default: stdin)");
  parse->add_option("--format", parse_fmt, "text|json|gap")
      ->check(CLI::IsMember({"text", "json", "gap"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(gopts, solve_n);
    if (construct->parsed())
      return cmd_construct(gopts, construct_p, construct_n, construct_format,
                           construct_verify, construct_copts);
    if (order_cmd->parsed()) {
      order_opts.strategy = order_strategy == "felsch"
                                ? EnumerationStrategy::Felsch
                                : EnumerationStrategy::Hlt;
      return cmd_order(gopts, order_file, order_opts, order_emit_table);
    }
    if (homology->parsed())
      return cmd_homology(gopts, homology_degree, homology_file, homology_via,
                          homology_eopts, homology_ceiling);
    if (certify->parsed())
      return cmd_certify(gopts, certify_file, certify_mode, certify_copts);
    if (table->parsed()) return cmd_table(gopts, table_p, table_max_n);
    if (gs->parsed()) return cmd_gs_check(gopts, gs_d, gs_def);
    if (parse->parsed()) return cmd_parse(gopts, parse_file, parse_fmt);
  } catch (const groupdef::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const groupdef::CosetLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCosetLimit;
  } catch (const groupdef::OrderCeilingExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCeiling;
  } catch (const groupdef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
