#include "cli.hpp"

#include <algorithm>
#include <CLI11.hpp>

#include "hpcoh/catalog.hpp"
#include "hpcoh/cohomology.hpp"
#include "hpcoh/errors.hpp"
#include "hpcoh/expression.hpp"
#include "hpcoh/report.hpp"
#include "hpcoh/spec_io.hpp"

namespace hpcoh {

namespace {

AlgebraSpec load_target(const std::string& target) {
  if (is_catalog_name(target)) return lookup_catalog(target).spec;
  return load_spec_file(target);
}

GradedElement parse_option(const std::string& option, const std::string& text, const Labels& labels) {
  try {
    return parse_expression(text, labels);
  } catch (const Error& e) {
    std::string what = e.what();
    auto colon = what.find(": ");
    throw Error(e.kind(), option + ": " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

struct Options {
  std::string target;
  std::string poisson = "0";
  std::string omega;
  std::string t;
  std::string catalog_action;
  std::string catalog_name;
  int max_degree = -1;
  bool json = false;
};

int run_validate(const Options& o, std::ostream& out) {
  SchoutenComplex cx(load_target(o.target));
  Labels labels(cx.spec(), cx.structure().single_center_index());
  if (o.json) {
    Json j;
    j["algebra"] = cx.spec().name();
    j["n"] = cx.n();
    j["structure"] = structure_json(cx, labels);
    out << j.dump(2) << "\n";
  } else {
    out << structure_text(cx, labels);
  }
  return 0;
}

int run_catalog(const Options& o, std::ostream& out) {
  if (o.catalog_action == "list") {
    for (const auto& f : families()) {
      std::string sig = f.signature;
      sig.resize(std::max<std::size_t>(sig.size(), 24), ' ');
      out << sig << f.description << "\n";
    }
    return 0;
  }
  if (o.catalog_action == "emit") {
    if (o.catalog_name.empty()) throw Error(ErrorKind::invalid_parameters, "catalog emit needs a NAME");
    out << emit_spec(lookup_catalog(o.catalog_name).spec);
    return 0;
  }
  throw Error(ErrorKind::invalid_parameters, "catalog action must be 'list' or 'emit'");
}

int default_degree(const CohomologyEngine& engine, int requested) {
  return requested < 0 ? std::min(engine.complex().dim_L(), 6) : requested;
}

int run_analyze(const Options& o, std::ostream& out) {
  CohomologyEngine engine(load_target(o.target));
  const auto& cx = engine.complex();
  Labels labels(cx.spec(), cx.structure().single_center_index());
  GradedElement lambda = parse_option("--poisson", o.poisson, labels);
  cx.require_poisson(lambda);
  auto rep = engine.analyze(lambda, default_degree(engine, o.max_degree));
  rep.poisson = labels.format(lambda);
  if (o.json)
    out << report_json(rep, cx, labels).dump(2) << "\n";
  else
    out << report_text(rep, cx, labels);
  return 0;
}

int run_obstruction(const Options& o, std::ostream& out) {
  CohomologyEngine engine(load_target(o.target));
  const auto& cx = engine.complex();
  Labels labels(cx.spec(), cx.structure().single_center_index());
  auto res = engine.obstruction(parse_option("--t", o.t, labels));
  // Cross-check against the first page in the degrees that carry the witness.
  auto page = engine.first_page(res.lambda, std::min(2, cx.dim_L()));
  if (page.degenerate != (res.kind != ObstructionKind::unsolvable))
    throw ConsistencyError("obstruction verdict disagrees with the first page");
  if (o.json)
    out << obstruction_json(res, labels).dump(2) << "\n";
  else
    out << obstruction_summary(res, labels) << "\n";
  return 0;
}

int run_deform(const Options& o, std::ostream& out) {
  CohomologyEngine engine(load_target(o.target));
  const auto& cx = engine.complex();
  Labels labels(cx.spec(), cx.structure().single_center_index());
  auto lambda = parse_option("--poisson", o.poisson, labels);
  auto omega = parse_option("--omega", o.omega, labels);
  auto res = engine.deformed_complex(lambda, omega, default_degree(engine, o.max_degree));
  if (o.json)
    out << deformed_json(res, labels).dump(2) << "\n";
  else
    out << deformed_text(res, labels);
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holomorphic Poisson cohomology of nilpotent Lie algebras with abelian complex structure", "hpcoh"};
  app.require_subcommand(1);
  Options o;
  const std::string target_help = "spec file or catalog name (e.g. w4n6:0)";

  auto* validate_cmd = app.add_subcommand("validate", "check a spec and print its structure");
  validate_cmd->add_option("TARGET", o.target, target_help)->required();
  validate_cmd->add_flag("--json", o.json, "machine-readable output");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in families or emit one as a spec file");
  catalog_cmd->add_option("ACTION", o.catalog_action, "list | emit")->required();
  catalog_cmd->add_option("NAME", o.catalog_name, "catalog name for emit");

  auto* analyze_cmd = app.add_subcommand("analyze", "full cohomology report");
  analyze_cmd->add_option("TARGET", o.target, target_help)->required();
  analyze_cmd->add_option("--poisson", o.poisson, "holomorphic Poisson bivector, e.g. \"V^T2\"");
  analyze_cmd->add_option("--max-degree", o.max_degree, "highest total degree (default min(dim L, 6))");
  analyze_cmd->add_flag("--json", o.json, "machine-readable output");

  auto* obstruction_cmd = app.add_subcommand("obstruction", "degeneracy obstruction for Lambda = V^T");
  obstruction_cmd->add_option("TARGET", o.target, target_help)->required();
  obstruction_cmd->add_option("--t", o.t, "the vector T")->required();
  obstruction_cmd->add_flag("--json", o.json, "machine-readable output");

  auto* deform_cmd = app.add_subcommand("deform", "cohomology of dbar_Lambda + [Omega_bar, -]");
  deform_cmd->add_option("TARGET", o.target, target_help)->required();
  deform_cmd->add_option("--poisson", o.poisson, "holomorphic Poisson bivector")->required();
  deform_cmd->add_option("--omega", o.omega, "(0,2)-form Omega_bar, e.g. \"rho_bar^w1_bar\"")->required();
  deform_cmd->add_option("--max-degree", o.max_degree, "highest total degree (default min(dim L, 6))");
  deform_cmd->add_flag("--json", o.json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(o, out);
    if (catalog_cmd->parsed()) return run_catalog(o, out);
    if (analyze_cmd->parsed()) return run_analyze(o, out);
    if (obstruction_cmd->parsed()) return run_obstruction(o, out);
    if (deform_cmd->parsed()) return run_deform(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace hpcoh
