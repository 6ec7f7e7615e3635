#include "transfun/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "transfun/error.hpp"

namespace transfun {

namespace {

void check_value(double v, std::string_view where) {
  if (!std::isfinite(v)) fail(Errc::non_finite, "non-finite value at " + std::string(where));
  if (v < 0.0) fail(Errc::negative_mass, "negative value at " + std::string(where));
}

}  // namespace

Measure::Measure(Space space) : space_(std::move(space)), masses_(space_.size(), 0.0) {}

Measure::Measure(Space space, std::vector<double> masses)
    : space_(std::move(space)), masses_(std::move(masses)) {
  if (masses_.size() != space_.size()) {
    fail(Errc::dimension_mismatch, "space '" + space_.id() + "' has " +
                                       std::to_string(space_.size()) + " atoms, got " +
                                       std::to_string(masses_.size()) + " masses");
  }
  for (std::size_t i = 0; i < masses_.size(); ++i) check_value(masses_[i], "atom '" + space_.label(i) + "'");
}

Measure Measure::dirac(const Space& space, std::size_t atom, double mass) {
  std::vector<double> m(space.size(), 0.0);
  m.at(atom) = mass;
  return Measure(space, std::move(m));
}

Density::Density(Space space, const std::map<std::string, double>& values)
    : space_(std::move(space)), values_(space_.size(), 0.0) {
  std::vector<bool> seen(space_.size(), false);
  for (const auto& [label, v] : values) {
    auto i = space_.index_of(label);
    check_value(v, "density atom '" + label + "'");
    values_[i] = v;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) fail(Errc::unknown_atom, "density undefined at atom '" + space_.label(i) + "'");
  }
}

Density::Density(Space space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    fail(Errc::dimension_mismatch, "density size does not match space '" + space_.id() + "'");
  for (std::size_t i = 0; i < values_.size(); ++i)
    check_value(values_[i], "density atom '" + space_.label(i) + "'");
}

double Density::sup() const noexcept {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

Measure make_measure(const Space& space,
                     std::span<const std::pair<std::string, double>> entries) {
  std::vector<double> m(space.size(), 0.0);
  for (const auto& [label, mass] : entries) {
    auto i = space.index_of(label);
    check_value(mass, "atom '" + label + "'");
    m[i] += mass;
  }
  return Measure(space, std::move(m));
}

Measure make_measure(const Space& space,
                     std::initializer_list<std::pair<std::string, double>> entries) {
  return make_measure(space, std::span<const std::pair<std::string, double>>(
                                 entries.begin(), entries.size()));
}

double total_mass(const Measure& mu) {
  auto m = mu.masses();
  return std::accumulate(m.begin(), m.end(), 0.0);
}

Measure add(const Measure& a, const Measure& b) {
  require_same_space(a.space(), b.space(), "add");
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a[i] + b[i];
  return Measure(a.space(), std::move(m));
}

Measure scale(double alpha, const Measure& mu) {
  if (!std::isfinite(alpha)) fail(Errc::non_finite, "scalar is not finite");
  if (alpha < 0.0) fail(Errc::negative_scalar, "scalar " + std::to_string(alpha) + " is negative");
  std::vector<double> m(mu.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = alpha * mu[i];
  return Measure(mu.space(), std::move(m));
}

bool leq(const Measure& a, const Measure& b, double tolerance) {
  require_same_space(a.space(), b.space(), "leq");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i] + tolerance) return false;
  return true;
}

bool mutually_singular(const Measure& a, const Measure& b) {
  require_same_space(a.space(), b.space(), "mutually_singular");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0.0 && b[i] > 0.0) return false;
  return true;
}

Measure project(const Measure& mu, const LabelSet& labels) {
  std::vector<double> m(mu.size(), 0.0);
  for (const auto& label : labels) {
    auto i = mu.space().index_of(label);
    m[i] = mu[i];
  }
  return Measure(mu.space(), std::move(m));
}

Measure product(const ProductSpace& space, const Measure& a, const Measure& b) {
  require_same_space(space.left(), a.space(), "product (left)");
  require_same_space(space.right(), b.space(), "product (right)");
  std::vector<double> m(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m[space.index(i, j)] = a[i] * b[j];
  return Measure(space.space(), std::move(m));
}

Measure product(const Measure& a, const Measure& b) {
  return product(ProductSpace(a.space(), b.space()), a, b);
}

Measure multiply_density(const std::map<std::string, double>& g, const Measure& mu) {
  std::vector<double> factor(mu.size(), 0.0);
  std::vector<bool> defined(mu.size(), false);
  for (const auto& [label, v] : g) {
    auto i = mu.space().index_of(label);
    check_value(v, "density atom '" + label + "'");
    factor[i] = v;
    defined[i] = true;
  }
  std::vector<double> m(mu.size(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0.0) continue;
    if (!defined[i])
      fail(Errc::unknown_atom, "density undefined at support atom '" + mu.space().label(i) + "'");
    m[i] = factor[i] * mu[i];
  }
  return Measure(mu.space(), std::move(m));
}

Measure multiply_density(const Density& g, const Measure& mu) {
  require_same_space(g.space(), mu.space(), "multiply_density");
  std::vector<double> m(mu.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g[i] * mu[i];
  return Measure(mu.space(), std::move(m));
}

Measure measure_max(const Measure& a, const Measure& b) {
  require_same_space(a.space(), b.space(), "measure_max");
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(a[i], b[i]);
  return Measure(a.space(), std::move(m));
}

double tv_distance(const Measure& a, const Measure& b) {
  require_same_space(a.space(), b.space(), "tv_distance");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double evaluate(const Measure& mu, const LabelSet& labels) {
  double s = 0.0;
  for (const auto& label : labels) s += mu[mu.space().index_of(label)];
  return s;
}

double sup_distance(const Measure& a, const Measure& b) {
  require_same_space(a.space(), b.space(), "sup_distance");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool approx_equal(const Measure& a, const Measure& b, double tolerance) {
  return sup_distance(a, b) <= tolerance;
}

std::vector<std::size_t> support(const Measure& mu) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > 0.0) s.push_back(i);
  return s;
}

}  // namespace transfun
