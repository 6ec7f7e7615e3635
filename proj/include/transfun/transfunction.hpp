#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "transfun/matrix.hpp"
#include "transfun/measure.hpp"
#include "transfun/space.hpp"

namespace transfun {

enum class NodeKind {
  pushforward,
  matrix,
  countable_matrix,
  kernel,
  output_multiplier,
  input_multiplier,
  max_with,
  pre_project,
  post_project,
  semigroup_product,
  compose,
};

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

/// Binary operation table on the atoms of a space, checked to be closed and
/// associative, i.e. a finite semigroup.
class SemigroupOp {
 public:
  /// `table[u * n + v]` is the index of u (.) v.
  SemigroupOp(Space space, std::vector<std::size_t> table);
  SemigroupOp(Space space, const std::map<std::pair<std::string, std::string>, std::string>& table);

  /// (Z_n, +) on a space whose atoms are read as 0..n-1 in order.
  static SemigroupOp cyclic_addition(const Space& space);

  const Space& space() const noexcept { return space_; }
  std::size_t operator()(std::size_t u, std::size_t v) const {
    return table_[u * space_.size() + v];
  }

 private:
  void validate() const;

  Space space_;
  std::vector<std::size_t> table_;
};

struct Node;

/// Immutable constructor tree of a transfunction between two discrete spaces.
/// Copies share the tree. Every factory validates the node eagerly.
class Transfunction {
 public:
  static Transfunction pushforward(Space domain, Space codomain,
                                   const std::map<std::string, std::string>& f);
  static Transfunction pushforward(Space domain, Space codomain, std::vector<std::size_t> image);
  static Transfunction identity(const Space& space);
  static Transfunction matrix(Space domain, Space codomain, Matrix a);
  static Transfunction countable_matrix(Space domain, Space codomain,
                                        std::map<std::string, Measure> columns, double bound);
  /// `phi` is |domain| x |codomain|; `rho` lives on the codomain.
  static Transfunction kernel(Space domain, Space codomain, Matrix phi, Measure rho);
  static Transfunction output_multiplier(Density f, Transfunction inner);
  static Transfunction input_multiplier(Transfunction inner, Density g);
  static Transfunction max_with(Transfunction inner, Measure rho);
  static Transfunction pre_project(LabelSet labels, Transfunction inner);
  static Transfunction post_project(LabelSet labels, Transfunction inner);
  static Transfunction semigroup_product(Transfunction left, Transfunction right, SemigroupOp op);
  static Transfunction compose(Transfunction outer, Transfunction inner);

  const Space& domain() const noexcept;
  const Space& codomain() const noexcept;
  NodeKind kind() const noexcept;
  const Node& node() const noexcept { return *node_; }

  /// Direct children in serialization order (used for node paths).
  std::vector<Transfunction> children() const;

  Measure operator()(const Measure& mu) const;

 private:
  explicit Transfunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct PushforwardNode {
  std::vector<std::size_t> image;  // domain atom -> codomain atom
};
struct MatrixNode {
  Matrix a;  // rows: codomain atoms, cols: domain atoms
};
struct CountableMatrixNode {
  std::map<std::string, Measure> columns;  // domain label -> column over codomain
  double bound;
};
struct KernelNode {
  Matrix phi;  // rows: domain atoms, cols: codomain atoms
  Measure rho;
};
struct OutputMultiplierNode {
  Density f;
  Transfunction inner;
};
struct InputMultiplierNode {
  Transfunction inner;
  Density g;
};
struct MaxWithNode {
  Transfunction inner;
  Measure rho;
};
struct PreProjectNode {
  LabelSet labels;
  Transfunction inner;
};
struct PostProjectNode {
  LabelSet labels;
  Transfunction inner;
};
struct SemigroupProductNode {
  Transfunction left;
  Transfunction right;
  SemigroupOp op;
};
struct ComposeNode {
  Transfunction outer;
  Transfunction inner;
};

using NodeBody =
    std::variant<PushforwardNode, MatrixNode, CountableMatrixNode, KernelNode,
                 OutputMultiplierNode, InputMultiplierNode, MaxWithNode, PreProjectNode,
                 PostProjectNode, SemigroupProductNode, ComposeNode>;

struct Node {
  Space domain;
  Space codomain;
  NodeBody body;
};

Transfunction compose(Transfunction outer, Transfunction inner);

Measure apply(const Transfunction& spec, const Measure& mu);

// Per-construction evaluation. The tree evaluator dispatches to these.
Measure apply_pushforward(const Space& codomain, std::span<const std::size_t> image,
                          const Measure& mu);
Measure apply_pushforward(const Space& codomain, const std::map<std::string, std::string>& f,
                          const Measure& mu);
Measure apply_matrix(const Space& codomain, const Matrix& a, const Measure& mu);
Measure apply_countable_matrix(const Space& codomain,
                               const std::map<std::string, Measure>& columns, double bound,
                               const Measure& mu);
Measure apply_kernel(const Space& codomain, const Matrix& phi, const Measure& rho,
                     const Measure& mu);
Measure apply_semigroup_product(const Measure& left, const Measure& right, const SemigroupOp& op);

/// Matrix whose column j is spec(Dirac(x_j)); nullopt when the tree contains
/// a MaxWith or SemigroupProduct node.
std::optional<Matrix> to_matrix(const Transfunction& spec);
bool is_linear(const Transfunction& spec);

/// The function table x_j -> y_i when `a` is a 0-1 matrix with exactly one
/// nonzero per column.
std::optional<std::vector<std::size_t>> is_function_matrix(const Matrix& a);

std::size_t node_count(const Transfunction& spec);
std::size_t depth(const Transfunction& spec);

}  // namespace transfun
