#include "transfun/io.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <type_traits>

#include "transfun/error.hpp"

namespace transfun {

namespace {

std::string where(const std::string& path) { return path.empty() ? "/" : path; }

std::string child_path(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

[[noreturn]] void bad(const std::string& path, const std::string& message) {
  fail(Errc::parse_error, "at " + where(path) + ": " + message);
}

[[noreturn]] void unknown_label(const std::string& path, const std::string& message) {
  fail(Errc::unknown_atom, "at " + where(path) + ": " + message);
}

void require_object(const Json& j, const std::string& path, std::string_view what) {
  if (!j.is_object()) bad(path, std::string(what) + " must be a JSON object");
}

/// Strict field check: every required key present, nothing unexpected.
void expect_keys(const Json& j, const std::string& path,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  for (auto key : required)
    if (!j.contains(key)) bad(path, "missing field '" + std::string(key) + "'");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || k == key;
    for (auto k : optional) known = known || k == key;
    if (!known) bad(path, "unknown field '" + key + "'");
  }
}

const std::string& get_string(const Json& j, std::string_view key, const std::string& path) {
  const Json& v = j.at(key);
  if (!v.is_string()) bad(path, "field '" + std::string(key) + "' must be a string");
  return v.get_ref<const std::string&>();
}

double as_number(const Json& v, const std::string& path, const std::string& what) {
  if (!v.is_number()) bad(path, what + " must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) bad(path, what + " must be finite");
  return d;
}

std::uint64_t as_unsigned(const Json& v, const std::string& path, const std::string& what) {
  if (!v.is_number_unsigned()) bad(path, what + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

// Label-keyed number object -> dense vector over `space`; absent labels are 0.
std::vector<double> dense_masses(const Json& j, const Space& space, const std::string& path,
                                 std::string_view what) {
  require_object(j, path, what);
  std::vector<double> out(space.size(), 0.0);
  for (const auto& [label, value] : j.items()) {
    auto i = space.find(label);
    if (!i) unknown_label(path, std::string(what) + " names atom '" + label + "' not in space '" +
                          space.id() + "'");
    out[*i] = as_number(value, path, std::string(what) + " entry '" + label + "'");
  }
  return out;
}

Json masses_json(const Space& space, std::span<const double> values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i) out[space.label(i)] = values[i];
  return out;
}

Json labels_json(const LabelSet& labels, const Space& space) {
  // Atom order, not lexicographic.
  Json out = Json::array();
  for (const auto& a : space.atoms())
    if (labels.contains(a)) out.push_back(a);
  return out;
}

LabelSet labels_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "'labels' must be an array of strings");
  LabelSet out;
  for (const auto& v : j) {
    if (!v.is_string()) bad(path, "'labels' must be an array of strings");
    out.insert(v.get<std::string>());
  }
  return out;
}

// "u,v" keys: the split must be the unique comma at which both sides are
// atoms of the space.
std::pair<std::string, std::string> split_pair_key(const std::string& key, const Space& space,
                                                   const std::string& path) {
  std::optional<std::pair<std::string, std::string>> found;
  for (std::size_t pos = key.find(','); pos != std::string::npos; pos = key.find(',', pos + 1)) {
    std::string u = key.substr(0, pos);
    std::string v = key.substr(pos + 1);
    if (space.contains(u) && space.contains(v)) {
      if (found) bad(path, "operation key '" + key + "' splits ambiguously");
      found.emplace(std::move(u), std::move(v));
    }
  }
  if (!found) bad(path, "operation key '" + key + "' is not 'u,v' over space '" + space.id() + "'");
  return *found;
}

Transfunction parse_node(const Json& j, const SpaceRegistry& reg, const std::string& path);

template <class Build>
Transfunction build_at(const std::string& path, Build&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    throw Error(e.code(), "at node " + where(path) + ": " + e.what());
  }
}

const Space& space_field(const Json& j, std::string_view key, const SpaceRegistry& reg,
                         const std::string& path) {
  const auto& id = get_string(j, key, path);
  if (!reg.contains(id)) bad(path, "unknown space '" + id + "'");
  return reg.get(id);
}

Transfunction parse_node(const Json& j, const SpaceRegistry& reg, const std::string& path) {
  require_object(j, path, "spec node");
  if (!j.contains("kind")) bad(path, "missing field 'kind'");
  const auto& kind_name = get_string(j, "kind", path);
  auto kind = node_kind_from_string(kind_name);
  if (!kind) bad(path, "unknown kind '" + kind_name + "'");

  switch (*kind) {
    case NodeKind::pushforward: {
      expect_keys(j, path, {"kind", "domain", "codomain", "map"});
      const Space& X = space_field(j, "domain", reg, path);
      const Space& Y = space_field(j, "codomain", reg, path);
      require_object(j["map"], path, "'map'");
      std::map<std::string, std::string> f;
      for (const auto& [x, y] : j["map"].items()) {
        if (!y.is_string()) bad(path, "'map' values must be labels");
        f[x] = y.get<std::string>();
      }
      return build_at(path, [&] { return Transfunction::pushforward(X, Y, f); });
    }
    case NodeKind::matrix: {
      expect_keys(j, path, {"kind", "domain", "codomain", "entries"});
      const Space& X = space_field(j, "domain", reg, path);
      const Space& Y = space_field(j, "codomain", reg, path);
      const Json& rows = j["entries"];
      if (!rows.is_array()) bad(path, "'entries' must be an array of rows");
      std::vector<std::vector<double>> values;
      for (const auto& row : rows) {
        if (!row.is_array()) bad(path, "'entries' must be an array of rows");
        auto& r = values.emplace_back();
        for (const auto& v : row) r.push_back(as_number(v, path, "matrix entry"));
      }
      return build_at(path,
                      [&] { return Transfunction::matrix(X, Y, Matrix::from_rows(values)); });
    }
    case NodeKind::countable_matrix: {
      expect_keys(j, path, {"kind", "domain", "codomain", "bound", "columns"});
      const Space& X = space_field(j, "domain", reg, path);
      const Space& Y = space_field(j, "codomain", reg, path);
      double bound = as_number(j["bound"], path, "'bound'");
      require_object(j["columns"], path, "'columns'");
      std::vector<std::pair<std::string, std::vector<double>>> raw;
      for (const auto& [x, column] : j["columns"].items())
        raw.emplace_back(x, dense_masses(column, Y, path, "column '" + x + "'"));
      return build_at(path, [&] {
        std::map<std::string, Measure> columns;
        for (auto& [x, m] : raw) columns.emplace(x, Measure(Y, m));
        return Transfunction::countable_matrix(X, Y, std::move(columns), bound);
      });
    }
    case NodeKind::kernel: {
      expect_keys(j, path, {"kind", "domain", "codomain", "phi", "rho"});
      const Space& X = space_field(j, "domain", reg, path);
      const Space& Y = space_field(j, "codomain", reg, path);
      require_object(j["phi"], path, "'phi'");
      Matrix phi(X.size(), Y.size());
      for (const auto& [x, row] : j["phi"].items()) {
        auto xi = X.find(x);
        if (!xi) unknown_label(path, "'phi' names atom '" + x + "' not in space '" + X.id() + "'");
        auto values = dense_masses(row, Y, path, "'phi' row '" + x + "'");
        for (std::size_t y = 0; y < values.size(); ++y) phi(*xi, y) = values[y];
      }
      auto rho = dense_masses(j["rho"], Y, path, "'rho'");
      return build_at(path, [&] { return Transfunction::kernel(X, Y, phi, Measure(Y, rho)); });
    }
    case NodeKind::output_multiplier: {
      expect_keys(j, path, {"kind", "density", "inner"});
      Transfunction inner = parse_node(j["inner"], reg, child_path(path, 0));
      require_object(j["density"], path, "'density'");
      auto values = j["density"].get<std::map<std::string, Json>>();
      std::map<std::string, double> f;
      for (const auto& [k, v] : values) f[k] = as_number(v, path, "density entry '" + k + "'");
      return build_at(path, [&] {
        return Transfunction::output_multiplier(Density(inner.codomain(), f), inner);
      });
    }
    case NodeKind::input_multiplier: {
      expect_keys(j, path, {"kind", "inner", "density"});
      Transfunction inner = parse_node(j["inner"], reg, child_path(path, 0));
      require_object(j["density"], path, "'density'");
      auto values = j["density"].get<std::map<std::string, Json>>();
      std::map<std::string, double> g;
      for (const auto& [k, v] : values) g[k] = as_number(v, path, "density entry '" + k + "'");
      return build_at(path, [&] {
        return Transfunction::input_multiplier(inner, Density(inner.domain(), g));
      });
    }
    case NodeKind::max_with: {
      expect_keys(j, path, {"kind", "inner", "rho"});
      Transfunction inner = parse_node(j["inner"], reg, child_path(path, 0));
      auto rho = dense_masses(j["rho"], inner.codomain(), path, "'rho'");
      return build_at(path, [&] {
        return Transfunction::max_with(inner, Measure(inner.codomain(), rho));
      });
    }
    case NodeKind::pre_project:
    case NodeKind::post_project: {
      expect_keys(j, path, {"kind", "labels", "inner"});
      LabelSet labels = labels_from_json(j["labels"], path);
      Transfunction inner = parse_node(j["inner"], reg, child_path(path, 0));
      return build_at(path, [&] {
        return *kind == NodeKind::pre_project ? Transfunction::pre_project(labels, inner)
                                              : Transfunction::post_project(labels, inner);
      });
    }
    case NodeKind::semigroup_product: {
      expect_keys(j, path, {"kind", "left", "right", "op"});
      Transfunction left = parse_node(j["left"], reg, child_path(path, 0));
      Transfunction right = parse_node(j["right"], reg, child_path(path, 1));
      require_object(j["op"], path, "'op'");
      const Space& Y = left.codomain();
      std::map<std::pair<std::string, std::string>, std::string> table;
      for (const auto& [key, value] : j["op"].items()) {
        if (!value.is_string()) bad(path, "'op' values must be labels");
        table[split_pair_key(key, Y, path)] = value.get<std::string>();
      }
      return build_at(path, [&] {
        return Transfunction::semigroup_product(left, right, SemigroupOp(Y, table));
      });
    }
    case NodeKind::compose: {
      expect_keys(j, path, {"kind", "outer", "inner"});
      Transfunction outer = parse_node(j["outer"], reg, child_path(path, 0));
      Transfunction inner = parse_node(j["inner"], reg, child_path(path, 1));
      return build_at(path, [&] { return Transfunction::compose(outer, inner); });
    }
  }
  bad(path, "unhandled kind");
}

void collect_spaces(const Transfunction& spec, SpaceRegistry& reg) {
  reg.add(spec.domain());
  reg.add(spec.codomain());
  for (const auto& c : spec.children()) collect_spaces(c, reg);
}

std::optional<double> optional_number(const Json& j, std::string_view key,
                                      const std::string& path) {
  if (!j.contains(key)) return std::nullopt;
  return as_number(j.at(key), path, "'" + std::string(key) + "'");
}

}  // namespace

// --- registry -----------------------------------------------------------------

SpaceRegistry::SpaceRegistry(const std::vector<Space>& spaces) {
  for (const auto& s : spaces) add(s);
}

void SpaceRegistry::add(const Space& space) {
  auto [it, inserted] = spaces_.emplace(space.id(), space);
  if (inserted) {
    order_.push_back(space.id());
    return;
  }
  if (!(it->second == space))
    fail(Errc::space_mismatch, "two different spaces share the id '" + space.id() + "'");
}

const Space& SpaceRegistry::get(std::string_view id) const {
  auto it = spaces_.find(std::string(id));
  if (it == spaces_.end()) fail(Errc::space_mismatch, "unknown space '" + std::string(id) + "'");
  return it->second;
}

std::vector<Space> SpaceRegistry::spaces() const {
  std::vector<Space> out;
  for (const auto& id : order_) out.push_back(spaces_.at(id));
  return out;
}

// --- documents ----------------------------------------------------------------

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, e.what());
  }
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

Json to_json(const Space& space) {
  Json atoms = Json::array();
  for (const auto& a : space.atoms()) atoms.push_back(a);
  return Json{{"id", space.id()}, {"atoms", std::move(atoms)}};
}

Space space_from_json(const Json& j) {
  const std::string path = "space";
  require_object(j, path, "space");
  expect_keys(j, path, {"id", "atoms"});
  const auto& id = get_string(j, "id", path);
  if (!j["atoms"].is_array()) bad(path, "'atoms' must be an array of strings");
  std::vector<std::string> atoms;
  for (const auto& a : j["atoms"]) {
    if (!a.is_string()) bad(path, "'atoms' must be an array of strings");
    atoms.push_back(a.get<std::string>());
  }
  return Space(id, std::move(atoms));
}

Json to_json(const Measure& mu) {
  return Json{{"space", mu.space().id()}, {"masses", masses_json(mu.space(), mu.masses())}};
}

Measure measure_from_json(const Json& j, const SpaceRegistry& spaces) {
  const std::string path = "measure";
  require_object(j, path, "measure");
  expect_keys(j, path, {"space", "masses"});
  const Space& space = spaces.get(get_string(j, "space", path));
  return Measure(space, dense_masses(j["masses"], space, path, "'masses'"));
}

Json to_json(const Transfunction& spec) {
  const Space& X = spec.domain();
  const Space& Y = spec.codomain();
  Json out{{"kind", std::string(to_string(spec.kind()))}};
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PushforwardNode>) {
          out["domain"] = X.id();
          out["codomain"] = Y.id();
          Json map = Json::object();
          for (std::size_t x = 0; x < X.size(); ++x) map[X.label(x)] = Y.label(n.image[x]);
          out["map"] = std::move(map);
        } else if constexpr (std::is_same_v<T, MatrixNode>) {
          out["domain"] = X.id();
          out["codomain"] = Y.id();
          out["entries"] = n.a.to_rows();
        } else if constexpr (std::is_same_v<T, CountableMatrixNode>) {
          out["domain"] = X.id();
          out["codomain"] = Y.id();
          out["bound"] = n.bound;
          Json columns = Json::object();
          for (const auto& x : X.atoms()) {
            const Measure& c = n.columns.at(x);
            columns[x] = masses_json(Y, c.masses());
          }
          out["columns"] = std::move(columns);
        } else if constexpr (std::is_same_v<T, KernelNode>) {
          out["domain"] = X.id();
          out["codomain"] = Y.id();
          Json phi = Json::object();
          for (std::size_t x = 0; x < X.size(); ++x) {
            Json row = Json::object();
            for (std::size_t y = 0; y < Y.size(); ++y) row[Y.label(y)] = n.phi(x, y);
            phi[X.label(x)] = std::move(row);
          }
          out["phi"] = std::move(phi);
          out["rho"] = masses_json(Y, n.rho.masses());
        } else if constexpr (std::is_same_v<T, OutputMultiplierNode>) {
          out["density"] = masses_json(Y, n.f.values());
          out["inner"] = to_json(n.inner);
        } else if constexpr (std::is_same_v<T, InputMultiplierNode>) {
          out["inner"] = to_json(n.inner);
          out["density"] = masses_json(X, n.g.values());
        } else if constexpr (std::is_same_v<T, MaxWithNode>) {
          out["inner"] = to_json(n.inner);
          out["rho"] = masses_json(Y, n.rho.masses());
        } else if constexpr (std::is_same_v<T, PreProjectNode>) {
          out["labels"] = labels_json(n.labels, X);
          out["inner"] = to_json(n.inner);
        } else if constexpr (std::is_same_v<T, PostProjectNode>) {
          out["labels"] = labels_json(n.labels, Y);
          out["inner"] = to_json(n.inner);
        } else if constexpr (std::is_same_v<T, SemigroupProductNode>) {
          out["left"] = to_json(n.left);
          out["right"] = to_json(n.right);
          Json op = Json::object();
          for (std::size_t u = 0; u < Y.size(); ++u)
            for (std::size_t v = 0; v < Y.size(); ++v)
              op[Y.label(u) + "," + Y.label(v)] = Y.label(n.op(u, v));
          out["op"] = std::move(op);
        } else {
          out["outer"] = to_json(n.outer);
          out["inner"] = to_json(n.inner);
        }
      },
      spec.node().body);
  return out;
}

Transfunction spec_from_json(const Json& json, const SpaceRegistry& spaces) {
  return parse_node(json, spaces, "");
}

SpecDocument make_document(const Transfunction& spec) {
  SpaceRegistry reg;
  collect_spaces(spec, reg);
  return SpecDocument{reg.spaces(), spec};
}

Json to_json(const SpecDocument& doc) {
  Json spaces = Json::array();
  for (const auto& s : doc.spaces) spaces.push_back(to_json(s));
  return Json{{"spaces", std::move(spaces)}, {"spec", to_json(doc.spec)}};
}

SpecDocument spec_document_from_json(const Json& j) {
  require_object(j, "document", "spec document");
  expect_keys(j, "document", {"spaces", "spec"});
  if (!j["spaces"].is_array()) bad("document", "'spaces' must be an array");
  SpaceRegistry reg;
  for (const auto& s : j["spaces"]) {
    Space space = space_from_json(s);
    if (reg.contains(space.id())) bad("document", "space '" + space.id() + "' listed twice");
    reg.add(space);
  }
  Transfunction spec = spec_from_json(j["spec"], reg);
  return SpecDocument{reg.spaces(), std::move(spec)};
}

// --- reports ------------------------------------------------------------------

Json to_json(const Witness& w) {
  Json out = Json::object();
  Json inputs = Json::array();
  for (const auto& m : w.inputs) inputs.push_back(to_json(m));
  Json outputs = Json::array();
  for (const auto& m : w.outputs) outputs.push_back(to_json(m));
  out["inputs"] = std::move(inputs);
  out["outputs"] = std::move(outputs);
  if (w.alpha) out["alpha"] = *w.alpha;
  if (w.modulus) out["modulus"] = *w.modulus;
  if (w.rate) out["rate"] = *w.rate;
  out["violation"] = w.violation;
  if (w.trial) out["trial"] = *w.trial;
  out["note"] = w.note;
  return out;
}

Witness witness_from_json(const Json& j, const SpaceRegistry& spaces) {
  const std::string path = "witness";
  require_object(j, path, "witness");
  expect_keys(j, path, {"inputs", "outputs", "violation", "note"},
              {"alpha", "modulus", "rate", "trial"});
  Witness w;
  for (const char* key : {"inputs", "outputs"}) {
    if (!j[key].is_array()) bad(path, "'" + std::string(key) + "' must be an array");
    auto& target = std::string_view(key) == "inputs" ? w.inputs : w.outputs;
    for (const auto& m : j[key]) target.push_back(measure_from_json(m, spaces));
  }
  w.alpha = optional_number(j, "alpha", path);
  w.modulus = optional_number(j, "modulus", path);
  w.rate = optional_number(j, "rate", path);
  w.violation = as_number(j["violation"], path, "'violation'");
  if (j.contains("trial")) w.trial = as_unsigned(j["trial"], path, "'trial'");
  w.note = get_string(j, "note", path);
  return w;
}

Json to_json(const PropertyReport& report) {
  Json config = Json::object();
  if (report.static_only) {
    config["tolerance"] = report.config.tolerance;
  } else {
    config["trials"] = report.config.trials;
    config["tolerance"] = report.config.tolerance;
    config["seed"] = report.config.seed;
    config["max_mass"] = report.config.max_mass;
    config["sequence_length"] = report.config.sequence_length;
  }
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json item{{"axiom", std::string(to_string(v.axiom))},
              {"status", std::string(to_string(v.status))},
              {"source", std::string(to_string(v.source))}};
    if (v.constant) item["constant"] = *v.constant;
    if (v.witness) item["witness"] = to_json(*v.witness);
    verdicts.push_back(std::move(item));
  }
  return Json{{"spec_digest", report.spec_digest},
              {"config", std::move(config)},
              {"verdicts", std::move(verdicts)}};
}

PropertyReport report_from_json(const Json& j, const SpaceRegistry& spaces) {
  const std::string path = "report";
  require_object(j, path, "report");
  expect_keys(j, path, {"spec_digest", "config", "verdicts"});
  PropertyReport report;
  report.spec_digest = get_string(j, "spec_digest", path);

  const Json& c = j["config"];
  require_object(c, "report/config", "'config'");
  report.static_only = !c.contains("trials");
  if (report.static_only) {
    expect_keys(c, "report/config", {"tolerance"});
  } else {
    expect_keys(c, "report/config", {"trials", "tolerance", "seed", "max_mass", "sequence_length"});
    report.config.trials = as_unsigned(c["trials"], path, "'trials'");
    report.config.seed = as_unsigned(c["seed"], path, "'seed'");
    report.config.max_mass = as_number(c["max_mass"], path, "'max_mass'");
    report.config.sequence_length = as_unsigned(c["sequence_length"], path, "'sequence_length'");
  }
  report.config.tolerance = as_number(c["tolerance"], path, "'tolerance'");

  if (!j["verdicts"].is_array()) bad(path, "'verdicts' must be an array");
  for (const auto& item : j["verdicts"]) {
    require_object(item, "report/verdicts", "verdict");
    expect_keys(item, "report/verdicts", {"axiom", "status", "source"}, {"constant", "witness"});
    Verdict v;
    auto axiom = axiom_from_string(get_string(item, "axiom", path));
    auto status = status_from_string(get_string(item, "status", path));
    auto source = source_from_string(get_string(item, "source", path));
    if (!axiom || !status || !source) bad("report/verdicts", "unknown axiom, status or source");
    v.axiom = *axiom;
    v.status = *status;
    v.source = *source;
    v.constant = optional_number(item, "constant", path);
    if (item.contains("witness")) v.witness = witness_from_json(item["witness"], spaces);
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

std::string spec_digest(const Transfunction& spec) {
  const std::string text = to_json(make_document(spec)).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace transfun
