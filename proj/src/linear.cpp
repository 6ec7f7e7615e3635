#include <type_traits>

#include "transfun/transfunction.hpp"

namespace transfun {

bool is_linear(const Transfunction& spec) {
  if (spec.kind() == NodeKind::max_with || spec.kind() == NodeKind::semigroup_product)
    return false;
  for (const auto& c : spec.children())
    if (!is_linear(c)) return false;
  return true;
}

std::optional<Matrix> to_matrix(const Transfunction& spec) {
  if (!is_linear(spec)) return std::nullopt;
  if (const auto* m = std::get_if<MatrixNode>(&spec.node().body)) return m->a;
  const auto& X = spec.domain();
  Matrix out(spec.codomain().size(), X.size());
  for (std::size_t j = 0; j < X.size(); ++j) {
    Measure column = apply(spec, Measure::dirac(X, j));
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, j) = column[i];
  }
  return out;
}

std::optional<std::vector<std::size_t>> is_function_matrix(const Matrix& a) {
  std::vector<std::size_t> f(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::size_t nonzeros = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      double v = a(i, j);
      if (v == 0.0) continue;
      if (v != 1.0) return std::nullopt;
      f[j] = i;
      ++nonzeros;
    }
    if (nonzeros != 1) return std::nullopt;
  }
  return f;
}

}  // namespace transfun
