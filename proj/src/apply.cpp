#include <type_traits>

#include "transfun/error.hpp"
#include "transfun/transfunction.hpp"

namespace transfun {

Measure apply_pushforward(const Space& codomain, std::span<const std::size_t> image,
                          const Measure& mu) {
  if (image.size() != mu.size())
    fail(Errc::dimension_mismatch, "pushforward map does not cover space '" + mu.space().id() + "'");
  std::vector<double> out(codomain.size(), 0.0);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (image[x] >= codomain.size())
      fail(Errc::unknown_atom, "pushforward image outside space '" + codomain.id() + "'");
    out[image[x]] += mu[x];
  }
  return Measure(codomain, std::move(out));
}

Measure apply_pushforward(const Space& codomain, const std::map<std::string, std::string>& f,
                          const Measure& mu) {
  std::vector<double> out(codomain.size(), 0.0);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    auto it = f.find(mu.space().label(x));
    if (it == f.end())
      fail(Errc::unknown_atom, "pushforward map undefined at atom '" + mu.space().label(x) + "'");
    out[codomain.index_of(it->second)] += mu[x];
  }
  return Measure(codomain, std::move(out));
}

Measure apply_matrix(const Space& codomain, const Matrix& a, const Measure& mu) {
  if (a.rows() != codomain.size() || a.cols() != mu.size())
    fail(Errc::dimension_mismatch, "matrix is " + std::to_string(a.rows()) + "x" +
                                       std::to_string(a.cols()) + ", measure has " +
                                       std::to_string(mu.size()) + " atoms");
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * mu[j];
    out[i] = s;
  }
  return Measure(codomain, std::move(out));
}

Measure apply_countable_matrix(const Space& codomain,
                               const std::map<std::string, Measure>& columns, double bound,
                               const Measure& mu) {
  std::vector<double> out(codomain.size(), 0.0);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x] == 0.0) continue;
    const auto& label = mu.space().label(x);
    auto it = columns.find(label);
    if (it == columns.end()) fail(Errc::missing_column, "no column for atom '" + label + "'");
    const Measure& column = it->second;
    require_same_space(column.space(), codomain, "column '" + label + "'");
    if (total_mass(column) >= bound)
      fail(Errc::bound_violated, "column '" + label + "' reaches the declared bound");
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += mu[x] * column[y];
  }
  return Measure(codomain, std::move(out));
}

Measure apply_kernel(const Space& codomain, const Matrix& phi, const Measure& rho,
                     const Measure& mu) {
  require_same_space(rho.space(), codomain, "kernel reference measure");
  if (phi.rows() != mu.size() || phi.cols() != codomain.size())
    fail(Errc::dimension_mismatch, "kernel table must be |domain| x |codomain|");
  // Phi(mu)({y}) = sum_x phi(x, y) mu({x}) rho({y}): the integral over the
  // atomic product measure.
  std::vector<double> out(codomain.size(), 0.0);
  for (std::size_t y = 0; y < out.size(); ++y) {
    double s = 0.0;
    for (std::size_t x = 0; x < mu.size(); ++x) s += phi(x, y) * mu[x];
    out[y] = s * rho[y];
  }
  return Measure(codomain, std::move(out));
}

Measure apply_semigroup_product(const Measure& left, const Measure& right,
                                const SemigroupOp& op) {
  require_same_space(left.space(), op.space(), "semigroup product (left)");
  require_same_space(right.space(), op.space(), "semigroup product (right)");
  // Pushforward of left x right along the operation.
  ProductSpace pairs(left.space(), right.space());
  Measure joint = product(pairs, left, right);
  std::vector<std::size_t> image(joint.size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    auto [u, v] = pairs.pair_of(k);
    image[k] = op(u, v);
  }
  return apply_pushforward(op.space(), image, joint);
}

Measure apply(const Transfunction& spec, const Measure& mu) {
  require_same_space(mu.space(), spec.domain(), "apply");
  const Space& codomain = spec.codomain();
  return std::visit(
      [&](const auto& n) -> Measure {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PushforwardNode>) {
          return apply_pushforward(codomain, n.image, mu);
        } else if constexpr (std::is_same_v<T, MatrixNode>) {
          return apply_matrix(codomain, n.a, mu);
        } else if constexpr (std::is_same_v<T, CountableMatrixNode>) {
          return apply_countable_matrix(codomain, n.columns, n.bound, mu);
        } else if constexpr (std::is_same_v<T, KernelNode>) {
          return apply_kernel(codomain, n.phi, n.rho, mu);
        } else if constexpr (std::is_same_v<T, OutputMultiplierNode>) {
          return multiply_density(n.f, apply(n.inner, mu));
        } else if constexpr (std::is_same_v<T, InputMultiplierNode>) {
          return apply(n.inner, multiply_density(n.g, mu));
        } else if constexpr (std::is_same_v<T, MaxWithNode>) {
          return measure_max(apply(n.inner, mu), n.rho);
        } else if constexpr (std::is_same_v<T, PreProjectNode>) {
          return apply(n.inner, project(mu, n.labels));
        } else if constexpr (std::is_same_v<T, PostProjectNode>) {
          return project(apply(n.inner, mu), n.labels);
        } else if constexpr (std::is_same_v<T, SemigroupProductNode>) {
          return apply_semigroup_product(apply(n.left, mu), apply(n.right, mu), n.op);
        } else {
          static_assert(std::is_same_v<T, ComposeNode>);
          return apply(n.outer, apply(n.inner, mu));
        }
      },
      spec.node().body);
}

}  // namespace transfun
