#pragma once

// Random spaces, matrices and constructor trees for property tests.

#include <string>
#include <vector>

#include "transfun/generators.hpp"
#include "transfun/transfunction.hpp"

namespace transfun::testing {

inline Space make_space(const std::string& id, std::size_t n, const std::string& prefix = "a") {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(prefix + std::to_string(i));
  return Space(id, std::move(atoms));
}

/// Atoms "0".."n-1", read as Z_n.
inline Space cyclic_space(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::to_string(i));
  return Space("Z" + std::to_string(n), std::move(atoms));
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, double hi = 1.0) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(0.0, hi);
  return m;
}

inline Matrix random_stochastic_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m = random_matrix(rows, cols, rng);
  for (std::size_t c = 0; c < cols; ++c) {
    m(rng.index(rows), c) += 0.5;  // keeps every column sum away from 0
    double s = m.column_sum(c);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) /= s;
  }
  return m;
}

inline std::vector<double> random_values(std::size_t n, Rng& rng, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(0.0, hi);
  return v;
}

inline LabelSet random_subset(const Space& space, Rng& rng) {
  LabelSet s;
  for (const auto& a : space.atoms())
    if (rng.coin()) s.insert(a);
  return s;
}

inline SemigroupOp random_semigroup(const Space& space, Rng& rng) {
  const auto n = space.size();
  std::vector<std::size_t> table(n * n);
  const auto choice = rng.index(4);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      switch (choice) {
        case 0: table[u * n + v] = (u + v) % n; break;
        case 1: table[u * n + v] = std::max(u, v); break;
        case 2: table[u * n + v] = std::min(u, v); break;
        default: table[u * n + v] = u; break;  // left-zero semigroup
      }
    }
  }
  return SemigroupOp(space, std::move(table));
}

class RandomSpecGenerator {
 public:
  explicit RandomSpecGenerator(std::uint64_t seed, std::size_t max_atoms = 5)
      : rng_(seed), max_atoms_(max_atoms) {}

  Rng& rng() { return rng_; }

  Space space() {
    const std::size_t n = 1 + rng_.index(max_atoms_);
    return make_space("S" + std::to_string(counter_++), n, "s" + std::to_string(n) + "_");
  }

  Transfunction leaf(const Space& X, const Space& Y) {
    switch (rng_.index(5)) {
      case 0: {
        std::vector<std::size_t> image(X.size());
        for (auto& y : image) y = rng_.index(Y.size());
        return Transfunction::pushforward(X, Y, std::move(image));
      }
      case 1:
        return Transfunction::matrix(X, Y, random_matrix(Y.size(), X.size(), rng_));
      case 2:
        return Transfunction::matrix(X, Y, random_stochastic_matrix(Y.size(), X.size(), rng_));
      case 3: {
        std::map<std::string, Measure> columns;
        for (const auto& x : X.atoms()) columns.emplace(x, Measure(Y, random_values(Y.size(), rng_, 0.5)));
        return Transfunction::countable_matrix(X, Y, std::move(columns), 0.5 * Y.size() + 1.0);
      }
      default:
        return Transfunction::kernel(X, Y, random_matrix(X.size(), Y.size(), rng_),
                                     Measure(Y, random_values(Y.size(), rng_, 1.0)));
    }
  }

  /// Tree with the given domain and codomain and depth <= max_depth.
  Transfunction tree(const Space& X, const Space& Y, std::size_t max_depth) {
    if (max_depth == 0 || rng_.coin(0.25)) return leaf(X, Y);
    const std::size_t d = max_depth - 1;
    switch (rng_.index(8)) {
      case 0:
        return Transfunction::output_multiplier(Density(Y, random_values(Y.size(), rng_, 2.0)),
                                                tree(X, Y, d));
      case 1:
        return Transfunction::input_multiplier(tree(X, Y, d),
                                               Density(X, random_values(X.size(), rng_, 2.0)));
      case 2: {
        Measure rho(Y, random_values(Y.size(), rng_, 1.0));
        return Transfunction::max_with(tree(X, Y, d), rho);
      }
      case 3:
        return Transfunction::pre_project(random_subset(X, rng_), tree(X, Y, d));
      case 4:
        return Transfunction::post_project(random_subset(Y, rng_), tree(X, Y, d));
      case 5:
        return Transfunction::semigroup_product(tree(X, Y, d), tree(X, Y, d),
                                                random_semigroup(Y, rng_));
      default: {
        Space Z = space();
        return Transfunction::compose(tree(Z, Y, d), tree(X, Z, d));
      }
    }
  }

  Transfunction tree(std::size_t max_depth) {
    Space X = space();
    Space Y = space();
    return tree(X, Y, max_depth);
  }

 private:
  Rng rng_;
  std::size_t max_atoms_;
  std::size_t counter_ = 0;
};

}  // namespace transfun::testing
