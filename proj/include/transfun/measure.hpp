#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "transfun/space.hpp"

namespace transfun {

using LabelSet = std::set<std::string>;

/// Finite nonnegative measure on a discrete space, stored densely in atom
/// order. Every mass is finite and >= 0; absent atoms carry mass 0.
class Measure {
 public:
  /// Zero measure on `space`.
  explicit Measure(Space space);
  /// Validates each entry (NonFinite, NegativeMass, DimensionMismatch).
  Measure(Space space, std::vector<double> masses);

  static Measure dirac(const Space& space, std::size_t atom, double mass = 1.0);

  const Space& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return masses_.size(); }
  double operator[](std::size_t atom) const { return masses_[atom]; }
  double mass(std::string_view label) const { return masses_[space_.index_of(label)]; }
  std::span<const double> masses() const noexcept { return masses_; }

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.space_ == b.space_ && a.masses_ == b.masses_;
  }

 private:
  Space space_;
  std::vector<double> masses_;
};

/// Atomwise density over a whole space (a multiplier on its cone).
class Density {
 public:
  /// Every atom of `space` must appear in `values`; entries finite and >= 0.
  Density(Space space, const std::map<std::string, double>& values);
  Density(Space space, std::vector<double> values);

  const Space& space() const noexcept { return space_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t atom) const { return values_[atom]; }
  double sup() const noexcept;

 private:
  Space space_;
  std::vector<double> values_;
};

/// Repeated labels accumulate.
Measure make_measure(const Space& space,
                     std::span<const std::pair<std::string, double>> entries);
Measure make_measure(const Space& space,
                     std::initializer_list<std::pair<std::string, double>> entries);

double total_mass(const Measure& mu);
Measure add(const Measure& a, const Measure& b);
Measure scale(double alpha, const Measure& mu);
bool leq(const Measure& a, const Measure& b, double tolerance = 0.0);
bool mutually_singular(const Measure& a, const Measure& b);
Measure project(const Measure& mu, const LabelSet& labels);
/// Measure on ProductSpace(a.space(), b.space()).space().
Measure product(const Measure& a, const Measure& b);
Measure product(const ProductSpace& space, const Measure& a, const Measure& b);
Measure multiply_density(const std::map<std::string, double>& g, const Measure& mu);
Measure multiply_density(const Density& g, const Measure& mu);
Measure measure_max(const Measure& a, const Measure& b);
double tv_distance(const Measure& a, const Measure& b);
double evaluate(const Measure& mu, const LabelSet& labels);

/// max over atoms of |a - b|; the comparison norm used for tolerance checks.
double sup_distance(const Measure& a, const Measure& b);
bool approx_equal(const Measure& a, const Measure& b, double tolerance);
std::vector<std::size_t> support(const Measure& mu);

}  // namespace transfun
