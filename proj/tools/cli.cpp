#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "transfun/checker.hpp"
#include "transfun/error.hpp"
#include "transfun/inference.hpp"
#include "transfun/io.hpp"

namespace transfun::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const Error& e) {
    fail(Errc::parse_error, path + ": " + e.what());
  }
}

SpecDocument read_spec(const std::string& path) { return spec_document_from_json(read_json(path)); }

void write(const std::string& target, const std::string& text, std::ostream& out) {
  if (target.empty() || target == "-") {
    out << text;
    return;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) fail(Errc::parse_error, "cannot write '" + target + "'");
  f << text;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::invalid_config:
      return kParseError;
    case Errc::internal_inconsistency:
      return kInconsistent;
    default:
      return kSpecError;
  }
}

std::vector<Axiom> selected_axioms(const std::string& name) {
  if (name == "all") return {kAllAxioms.begin(), kAllAxioms.end()};
  auto a = axiom_from_string(name);
  if (!a) fail(Errc::invalid_config, "unknown axiom '" + name + "'");
  return {*a};
}

Measure load_input_measure(const Json& j, const Space& domain) {
  if (!j.is_object() || !j.contains("space") || !j["space"].is_string())
    fail(Errc::parse_error, "measure document needs a string field 'space'");
  const auto id = j["space"].get<std::string>();
  if (id != domain.id())
    fail(Errc::space_mismatch,
         "measure is on space '" + id + "' but the spec domain is space '" + domain.id() + "'");
  SpaceRegistry reg;
  reg.add(domain);
  return measure_from_json(j, reg);
}

void print_info(const Json& j, std::ostream& out) {
  if (j.is_object() && j.contains("spec") && j.contains("spaces")) {
    SpecDocument doc = spec_document_from_json(j);
    out << "document: spec\n";
    for (const auto& s : doc.spaces) out << "space " << s.id() << ": " << s.size() << " atoms\n";
    out << "root: " << to_string(doc.spec.kind()) << "\n";
    out << "domain: " << doc.spec.domain().id() << "\n";
    out << "codomain: " << doc.spec.codomain().id() << "\n";
    out << "nodes: " << node_count(doc.spec) << "\n";
    out << "depth: " << depth(doc.spec) << "\n";
    out << "linear: " << (is_linear(doc.spec) ? "yes" : "no") << "\n";
  } else if (j.is_object() && j.contains("masses")) {
    if (!j["masses"].is_object()) fail(Errc::parse_error, "'masses' must be an object");
    std::vector<std::string> labels;
    for (const auto& [label, v] : j["masses"].items()) labels.push_back(label);
    if (labels.empty()) {
      out << "document: measure\nspace: " << j.value("space", std::string("?"))
          << "\natoms: 0\nsupport: 0\ntotal_mass: 0\n";
      return;
    }
    const Space space(j.value("space", std::string("?")), labels);
    Measure mu = measure_from_json(j, SpaceRegistry({space}));
    out << "document: measure\n";
    out << "space: " << space.id() << "\n";
    out << "atoms: " << space.size() << "\n";
    out << "support: " << support(mu).size() << "\n";
    out << "total_mass: " << std::setprecision(17) << total_mass(mu) << "\n";
  } else if (j.is_object() && j.contains("atoms")) {
    Space s = space_from_json(j);
    out << "document: space\n" << "space: " << s.id() << "\n" << "atoms: " << s.size() << "\n";
  } else if (j.is_object() && j.contains("verdicts")) {
    out << "document: report\n";
    out << "spec_digest: " << j.value("spec_digest", std::string()) << "\n";
    for (const auto& v : j["verdicts"])
      out << v.value("axiom", std::string("?")) << ": " << v.value("status", std::string("?"))
          << "\n";
  } else {
    fail(Errc::parse_error, "unrecognized document");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transfunctions between spaces of finite discrete measures", "transfun"};
  app.require_subcommand(1);
  std::string output = "-";

  std::string spec_file, measure_file, outer_file, inner_file, info_file;
  std::string axiom_name = "all";
  CheckConfig cfg;

  auto* apply_cmd = app.add_subcommand("apply", "Apply a spec to a measure");
  apply_cmd->add_option("spec", spec_file, "Spec document")->required();
  apply_cmd->add_option("measure", measure_file, "Measure document")->required();
  apply_cmd->add_option("--output", output, "Output path ('-' for stdout)");

  auto* check_cmd = app.add_subcommand("check", "Randomized axiom checks merged with inference");
  check_cmd->add_option("spec", spec_file, "Spec document")->required();
  check_cmd->add_option("--trials", cfg.trials, "Trials per axiom");
  check_cmd->add_option("--tolerance", cfg.tolerance, "Absolute comparison tolerance");
  check_cmd->add_option("--seed", cfg.seed, "Generator seed");
  check_cmd->add_option("--axiom", axiom_name, "Axiom name or 'all'");
  check_cmd->add_option("--max-mass", cfg.max_mass, "Largest atom mass drawn");
  check_cmd->add_option("--sequence-length", cfg.sequence_length, "Continuity sequence length");
  check_cmd->add_option("--output", output, "Output path ('-' for stdout)");

  auto* infer_cmd = app.add_subcommand("infer", "Static property inference");
  infer_cmd->add_option("spec", spec_file, "Spec document")->required();
  infer_cmd->add_option("--tolerance", cfg.tolerance, "Tolerance for constructive witnesses");
  infer_cmd->add_option("--output", output, "Output path ('-' for stdout)");

  auto* compose_cmd = app.add_subcommand("compose", "Compose two specs (outer after inner)");
  compose_cmd->add_option("outer", outer_file, "Outer spec document")->required();
  compose_cmd->add_option("inner", inner_file, "Inner spec document")->required();
  compose_cmd->add_option("--output", output, "Output path ('-' for stdout)");

  auto* info_cmd = app.add_subcommand("info", "Summarize any document");
  info_cmd->add_option("file", info_file, "Document")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (apply_cmd->parsed()) {
      SpecDocument doc = read_spec(spec_file);
      Measure mu = load_input_measure(read_json(measure_file), doc.spec.domain());
      write(output, dump(to_json(apply(doc.spec, mu))), out);
    } else if (check_cmd->parsed()) {
      cfg.validate();
      auto axioms = selected_axioms(axiom_name);
      SpecDocument doc = read_spec(spec_file);
      write(output, dump(to_json(check_properties(doc.spec, axioms, cfg))), out);
    } else if (infer_cmd->parsed()) {
      cfg.validate();
      SpecDocument doc = read_spec(spec_file);
      write(output, dump(to_json(infer_properties(doc.spec, cfg.tolerance))), out);
    } else if (compose_cmd->parsed()) {
      SpecDocument outer = read_spec(outer_file);
      SpecDocument inner = read_spec(inner_file);
      write(output, dump(to_json(make_document(compose(outer.spec, inner.spec)))), out);
    } else if (info_cmd->parsed()) {
      print_info(read_json(info_file), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace transfun::cli
