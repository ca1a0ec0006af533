#include "charforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "charforge/constructions.hpp"
#include "charforge/error.hpp"
#include "charforge/harness.hpp"
#include "charforge/numeric.hpp"
#include "charforge/report.hpp"

namespace charforge::cli {

namespace {

struct CliConfig {
  std::string command;
  std::string group;
  std::string format = "json";
  std::string output;
  bool stretch = false;
  std::optional<std::size_t> cap;
  unsigned jobs = 1;
  std::optional<std::uint64_t> p;
  std::optional<std::size_t> chi;
  std::optional<std::size_t> psi;
  std::optional<std::size_t> row;
  std::string values;
  std::string corpus;
};

/// One rendered document: JSON and markdown forms plus the verdict.
struct Output {
  Json json;
  std::string markdown;
  bool pass = true;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string trim(std::string s) {
  const auto* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

/// A --group argument is a file holding a spec when such a file exists.
std::string resolve_group(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return trim(read_file(arg));
  return arg;
}

std::size_t closure_cap(const CliConfig& cfg) {
  if (cfg.cap) return *cfg.cap;
  if (const char* env = std::getenv("CHARFORGE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw UsageError(std::string("CHARFORGE_CAP must be a positive integer, got '") + env + "'");
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultClosureCap;
}

BuildOptions build_options(const CliConfig& cfg) {
  BuildOptions o;
  o.cap = closure_cap(cfg);
  o.stretch = cfg.stretch;
  return o;
}

std::string require_group(const CliConfig& cfg) {
  if (cfg.group.empty()) throw UsageError("--group is required");
  return resolve_group(cfg.group);
}

std::uint64_t require_prime(const CliConfig& cfg) {
  if (!cfg.p) throw UsageError("--p is required");
  if (!is_prime(*cfg.p)) throw UsageError("--p must be prime");
  return *cfg.p;
}

struct Computed {
  std::string spec;
  BuiltGroup built;
  CharacterTable table;
};

Computed compute(const std::string& text, const CliConfig& cfg) {
  BuiltGroup built = build_group(text, build_options(cfg));
  CharacterTable table = character_table(built);
  return {built.spec.to_string(), std::move(built), std::move(table)};
}

Output cmd_table(const CliConfig& cfg) {
  Computed c = compute(require_group(cfg), cfg);
  TableDocument doc = table_document(c.table);
  return {doc, to_markdown(doc), true};
}

Output cmd_product(const CliConfig& cfg) {
  if (!cfg.chi || !cfg.psi) throw UsageError("product needs --chi and --psi");
  Computed c = compute(require_group(cfg), cfg);
  const auto& t = c.table;
  ProductContext ctx(t);
  ProductDocument doc;
  doc.group = c.spec;
  doc.decomposition = ctx.decompose_product(*cfg.chi, *cfg.psi);
  doc.chi = *cfg.chi;
  doc.psi = *cfg.psi;
  doc.chi_degree = t.degree(doc.chi);
  doc.psi_degree = t.degree(doc.psi);
  doc.chi_fingerprint = row_fingerprint(t, doc.chi);
  doc.psi_fingerprint = row_fingerprint(t, doc.psi);
  for (const auto& k : doc.decomposition.constituents) doc.constituent_degrees.push_back(t.degree(k.row));
  bool pass = true;
  if (ctx.nilpotent() && is_prime(doc.chi_degree) && is_prime(doc.psi_degree)) {
    try {
      doc.theorem_case = classify_product(ctx, doc.chi, doc.psi, doc.chi_degree);
    } catch (const TheoremViolation&) {
      pass = false;
    }
  }
  doc.linear_shift = verify_linear_shift_lemma(ctx, doc.chi, doc.psi);
  pass = pass && doc.linear_shift->pass;
  return {doc, to_markdown(doc), pass};
}

Output cmd_decompose(const CliConfig& cfg) {
  if (cfg.row.has_value() == !cfg.values.empty()) {
    throw UsageError("decompose needs exactly one of --row and --values");
  }
  Computed c = compute(require_group(cfg), cfg);
  const auto& t = c.table;
  std::optional<ClassFunction> f;
  if (cfg.row) {
    f = ClassFunction::from_row(t, *cfg.row);
  } else {
    std::error_code ec;
    std::string text =
        std::filesystem::is_regular_file(cfg.values, ec) ? read_file(cfg.values) : cfg.values;
    auto values = Json::parse(text).get<std::vector<Cyclotomic>>();
    f = ClassFunction(t.group(), std::move(values));
  }
  Decomposition d = decompose(*f, t);
  std::vector<std::uint64_t> degrees;
  for (const auto& k : d.constituents) degrees.push_back(t.degree(k.row));
  Json j{{"group", c.spec}, {"eta", d.eta()}, {"constituents", d}, {"constituent_degrees", degrees}};
  std::ostringstream md;
  md << "# Decomposition\n\n- group: `" << c.spec << "`\n- eta: " << d.eta()
     << "\n\n| row | degree | multiplicity | fingerprint |\n|---|---|---|---|\n";
  for (const auto& k : d.constituents) {
    md << "| " << k.row << " | " << t.degree(k.row) << " | " << k.multiplicity << " | "
       << row_fingerprint(t, k.row) << " |\n";
  }
  return {j, md.str(), true};
}

VerificationReport sweep(const std::string& text, std::uint64_t p, const CliConfig& cfg) {
  Computed c = compute(text, cfg);
  ProductContext ctx(c.table);
  return verify_theorem_A(ctx, p, c.spec, cfg.jobs);
}

Output cmd_verify(const CliConfig& cfg) {
  if (cfg.corpus.empty()) {
    VerificationReport r = sweep(require_group(cfg), require_prime(cfg), cfg);
    return {r, to_markdown(r), r.pass()};
  }
  const Json manifest = Json::parse(read_file(cfg.corpus));
  Output out;
  out.json = Json{{"manifest_version", manifest.at("version")}, {"reports", Json::array()}};
  auto run_entries = [&](const Json& entries) {
    for (const auto& e : entries) {
      VerificationReport r =
          sweep(e.at("group").get<std::string>(), e.at("p").get<std::uint64_t>(), cfg);
      out.pass = out.pass && r.pass();
      Json j = r;
      out.json["reports"].push_back(Json{{"name", e.at("name")}, {"report", std::move(j)}});
      out.markdown += to_markdown(r) + "\n";
    }
  };
  run_entries(manifest.at("groups"));
  if (cfg.stretch && manifest.contains("stretch")) run_entries(manifest.at("stretch"));
  out.json["status"] = out.pass ? "PASS" : "FAIL";
  return out;
}

Output cmd_self_product(const CliConfig& cfg) {
  const std::uint64_t p = require_prime(cfg);
  Computed c = compute(require_group(cfg), cfg);
  ProductContext ctx(c.table);
  SelfProductDocument doc{c.spec, p, {}};
  for (std::size_t i = 0; i < c.table.size(); ++i) {
    if (c.table.degree(i) != p || (cfg.chi && *cfg.chi != i)) continue;
    try {
      doc.entries.push_back({i, std::string(shape_name(verify_self_product_lemma(ctx, i))), {}});
    } catch (const TheoremViolation& e) {
      doc.entries.push_back({i, {}, e.what()});
    }
  }
  if (cfg.chi && doc.entries.empty()) {
    throw HypothesisViolation("row " + std::to_string(*cfg.chi) + " does not have degree " +
                              std::to_string(p));
  }
  return {doc, to_markdown(doc), doc.pass()};
}

Output cmd_spectrum(const CliConfig& cfg) {
  const std::uint64_t p = require_prime(cfg);
  Computed c = compute(require_group(cfg), cfg);
  ProductContext ctx(c.table);
  SpectrumDocument doc{c.spec, p, eta_spectrum(ctx, p)};
  return {doc, to_markdown(doc), true};
}

Output cmd_examples(const CliConfig& cfg) {
  ExamplesReport r = reproduce_examples(cfg.p.value_or(3), cfg.stretch);
  return {r, to_markdown(r), r.pass()};
}

void add_common(CLI::App* sub, CliConfig& cfg, bool with_group) {
  if (with_group) sub->add_option("--group", cfg.group, "Group spec or file holding one");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "markdown"}));
  sub->add_option("--output", cfg.output, "Write the document to this file");
  sub->add_flag("--stretch", cfg.stretch, "Allow the large stretch targets");
  sub->add_option("--cap", cfg.cap, "Closure cap on group orders")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", cfg.jobs, "Worker threads for pair sweeps")->check(CLI::PositiveNumber);
}

int dispatch(CliConfig& cfg, std::ostream& out) {
  Output o;
  if (cfg.command == "table") o = cmd_table(cfg);
  else if (cfg.command == "product") o = cmd_product(cfg);
  else if (cfg.command == "decompose") o = cmd_decompose(cfg);
  else if (cfg.command == "verify") o = cmd_verify(cfg);
  else if (cfg.command == "self-product") o = cmd_self_product(cfg);
  else if (cfg.command == "spectrum") o = cmd_spectrum(cfg);
  else o = cmd_examples(cfg);
  const std::string text = cfg.format == "json" ? o.json.dump(2) + "\n" : o.markdown;
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output);
    if (!(file << text)) throw UsageError("cannot write " + cfg.output);
  }
  return o.pass ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact character tables and product decompositions for finite groups", "charforge"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Character table of a group");
  add_common(table, cfg, true);

  auto* product = app.add_subcommand("product", "Decompose the product of two rows");
  add_common(product, cfg, true);
  product->add_option("--chi", cfg.chi, "First row")->required();
  product->add_option("--psi", cfg.psi, "Second row")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a class function");
  add_common(decompose_cmd, cfg, true);
  decompose_cmd->add_option("--row", cfg.row, "Row of the table");
  decompose_cmd->add_option("--values", cfg.values, "JSON list of class values, or a file");

  auto* verify = app.add_subcommand("verify", "Sweep products chi*psi with chi(1) = p");
  add_common(verify, cfg, true);
  verify->add_option("--p", cfg.p, "Prime degree of chi");
  verify->add_option("--corpus", cfg.corpus, "Corpus manifest");

  auto* self = app.add_subcommand("self-product", "Shapes of chi*conj(chi) for degree-p rows");
  add_common(self, cfg, true);
  self->add_option("--p", cfg.p, "Prime degree")->required();
  self->add_option("--chi", cfg.chi, "Restrict to one row");

  auto* spectrum = app.add_subcommand("spectrum", "Distinct constituent counts over degree-p pairs");
  add_common(spectrum, cfg, true);
  spectrum->add_option("--p", cfg.p, "Prime degree")->required();

  auto* examples = app.add_subcommand("examples", "Reproduce the worked examples");
  add_common(examples, cfg, false);
  examples->add_option("--p", cfg.p, "Prime (3, or 5 with --stretch)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace charforge::cli
