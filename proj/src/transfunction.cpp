#include "transfun/transfunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "transfun/error.hpp"

namespace transfun {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 11> kKindNames{{
    {NodeKind::pushforward, "pushforward"},
    {NodeKind::matrix, "matrix"},
    {NodeKind::countable_matrix, "countable_matrix"},
    {NodeKind::kernel, "kernel"},
    {NodeKind::output_multiplier, "output_multiplier"},
    {NodeKind::input_multiplier, "input_multiplier"},
    {NodeKind::max_with, "max_with"},
    {NodeKind::pre_project, "pre_project"},
    {NodeKind::post_project, "post_project"},
    {NodeKind::semigroup_product, "semigroup_product"},
    {NodeKind::compose, "compose"},
}};

void check_labels(const LabelSet& labels, const Space& space) {
  for (const auto& l : labels) space.index_of(l);
}

}  // namespace

std::string_view to_string(NodeKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

// --- SemigroupOp ------------------------------------------------------------

SemigroupOp::SemigroupOp(Space space, std::vector<std::size_t> table)
    : space_(std::move(space)), table_(std::move(table)) {
  validate();
}

SemigroupOp::SemigroupOp(Space space,
                         const std::map<std::pair<std::string, std::string>, std::string>& table)
    : space_(std::move(space)) {
  const auto n = space_.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  table_.assign(n * n, unset);
  for (const auto& [args, result] : table) {
    auto u = space_.index_of(args.first);
    auto v = space_.index_of(args.second);
    table_[u * n + v] = space_.index_of(result);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (table_[u * n + v] == unset)
        fail(Errc::invalid_spec, "operation undefined at (" + space_.label(u) + "," +
                                     space_.label(v) + ")");
  validate();
}

SemigroupOp SemigroupOp::cyclic_addition(const Space& space) {
  const auto n = space.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) table[u * n + v] = (u + v) % n;
  return SemigroupOp(space, std::move(table));
}

void SemigroupOp::validate() const {
  const auto n = space_.size();
  if (table_.size() != n * n)
    fail(Errc::dimension_mismatch, "operation table needs " + std::to_string(n * n) + " entries");
  for (auto r : table_)
    if (r >= n) fail(Errc::unknown_atom, "operation result outside space '" + space_.id() + "'");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if ((*this)((*this)(u, v), w) != (*this)(u, (*this)(v, w)))
          fail(Errc::invalid_spec, "operation is not associative at (" + space_.label(u) + "," +
                                       space_.label(v) + "," + space_.label(w) + ")");
}

// --- factories ----------------------------------------------------------------

Transfunction Transfunction::pushforward(Space domain, Space codomain,
                                         const std::map<std::string, std::string>& f) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(domain.size(), unset);
  for (const auto& [x, y] : f) image[domain.index_of(x)] = codomain.index_of(y);
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] == unset)
      fail(Errc::invalid_spec, "pushforward map undefined at atom '" + domain.label(i) + "'");
  return pushforward(std::move(domain), std::move(codomain), std::move(image));
}

Transfunction Transfunction::pushforward(Space domain, Space codomain,
                                         std::vector<std::size_t> image) {
  if (image.size() != domain.size())
    fail(Errc::dimension_mismatch, "pushforward map has " + std::to_string(image.size()) +
                                       " entries for " + std::to_string(domain.size()) + " atoms");
  for (auto y : image)
    if (y >= codomain.size())
      fail(Errc::unknown_atom, "pushforward image outside space '" + codomain.id() + "'");
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(domain), std::move(codomain), PushforwardNode{std::move(image)}}));
}

Transfunction Transfunction::identity(const Space& space) {
  std::vector<std::size_t> image(space.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return pushforward(space, space, std::move(image));
}

Transfunction Transfunction::matrix(Space domain, Space codomain, Matrix a) {
  if (a.rows() != codomain.size() || a.cols() != domain.size())
    fail(Errc::dimension_mismatch,
         "matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             ", expected " + std::to_string(codomain.size()) + "x" + std::to_string(domain.size()));
  validate_nonnegative(a);
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(domain), std::move(codomain), MatrixNode{std::move(a)}}));
}

Transfunction Transfunction::countable_matrix(Space domain, Space codomain,
                                              std::map<std::string, Measure> columns,
                                              double bound) {
  if (!std::isfinite(bound) || bound <= 0.0)
    fail(Errc::invalid_spec, "declared bound must be finite and positive");
  for (const auto& [label, column] : columns) {
    domain.index_of(label);
    require_same_space(column.space(), codomain, "column '" + label + "'");
    if (total_mass(column) >= bound)
      fail(Errc::bound_violated, "column '" + label + "' has mass " +
                                     std::to_string(total_mass(column)) + " >= bound " +
                                     std::to_string(bound));
  }
  for (const auto& x : domain.atoms())
    if (!columns.contains(x)) fail(Errc::invalid_spec, "no column for domain atom '" + x + "'");
  return Transfunction(std::make_shared<const Node>(Node{
      std::move(domain), std::move(codomain), CountableMatrixNode{std::move(columns), bound}}));
}

Transfunction Transfunction::kernel(Space domain, Space codomain, Matrix phi, Measure rho) {
  if (phi.rows() != domain.size() || phi.cols() != codomain.size())
    fail(Errc::dimension_mismatch, "kernel table must be |domain| x |codomain|");
  validate_nonnegative(phi);
  require_same_space(rho.space(), codomain, "kernel reference measure");
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(domain), std::move(codomain), KernelNode{std::move(phi), std::move(rho)}}));
}

Transfunction Transfunction::output_multiplier(Density f, Transfunction inner) {
  require_same_space(f.space(), inner.codomain(), "output multiplier");
  auto d = inner.domain();
  auto c = inner.codomain();
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(d), std::move(c), OutputMultiplierNode{std::move(f), std::move(inner)}}));
}

Transfunction Transfunction::input_multiplier(Transfunction inner, Density g) {
  require_same_space(g.space(), inner.domain(), "input multiplier");
  auto d = inner.domain();
  auto c = inner.codomain();
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(d), std::move(c), InputMultiplierNode{std::move(inner), std::move(g)}}));
}

Transfunction Transfunction::max_with(Transfunction inner, Measure rho) {
  require_same_space(rho.space(), inner.codomain(), "max_with reference measure");
  auto d = inner.domain();
  auto c = inner.codomain();
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(d), std::move(c), MaxWithNode{std::move(inner), std::move(rho)}}));
}

Transfunction Transfunction::pre_project(LabelSet labels, Transfunction inner) {
  check_labels(labels, inner.domain());
  auto d = inner.domain();
  auto c = inner.codomain();
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(d), std::move(c), PreProjectNode{std::move(labels), std::move(inner)}}));
}

Transfunction Transfunction::post_project(LabelSet labels, Transfunction inner) {
  check_labels(labels, inner.codomain());
  auto d = inner.domain();
  auto c = inner.codomain();
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(d), std::move(c), PostProjectNode{std::move(labels), std::move(inner)}}));
}

Transfunction Transfunction::semigroup_product(Transfunction left, Transfunction right,
                                               SemigroupOp op) {
  require_same_space(left.domain(), right.domain(), "semigroup product domains");
  require_same_space(left.codomain(), right.codomain(), "semigroup product codomains");
  require_same_space(op.space(), left.codomain(), "semigroup operation");
  auto d = left.domain();
  auto c = left.codomain();
  return Transfunction(std::make_shared<const Node>(Node{
      std::move(d), std::move(c),
      SemigroupProductNode{std::move(left), std::move(right), std::move(op)}}));
}

Transfunction Transfunction::compose(Transfunction outer, Transfunction inner) {
  require_same_space(inner.codomain(), outer.domain(), "compose");
  auto d = inner.domain();
  auto c = outer.codomain();
  return Transfunction(std::make_shared<const Node>(
      Node{std::move(d), std::move(c), ComposeNode{std::move(outer), std::move(inner)}}));
}

Transfunction compose(Transfunction outer, Transfunction inner) {
  return Transfunction::compose(std::move(outer), std::move(inner));
}

const Space& Transfunction::domain() const noexcept { return node_->domain; }
const Space& Transfunction::codomain() const noexcept { return node_->codomain; }
NodeKind Transfunction::kind() const noexcept {
  return static_cast<NodeKind>(node_->body.index());
}

std::vector<Transfunction> Transfunction::children() const {
  return std::visit(
      [](const auto& n) -> std::vector<Transfunction> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SemigroupProductNode>) return {n.left, n.right};
        else if constexpr (std::is_same_v<T, ComposeNode>) return {n.outer, n.inner};
        else if constexpr (requires { n.inner; }) return {n.inner};
        else return {};
      },
      node_->body);
}

Measure Transfunction::operator()(const Measure& mu) const { return apply(*this, mu); }

std::size_t node_count(const Transfunction& spec) {
  std::size_t n = 1;
  for (const auto& c : spec.children()) n += node_count(c);
  return n;
}

std::size_t depth(const Transfunction& spec) {
  std::size_t d = 0;
  for (const auto& c : spec.children()) d = std::max(d, depth(c));
  return spec.children().empty() ? 0 : d + 1;
}

}  // namespace transfun
