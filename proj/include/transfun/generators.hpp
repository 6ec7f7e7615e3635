#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "transfun/axiom.hpp"
#include "transfun/measure.hpp"

namespace transfun {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for trial `index` of stream `stream` under the run seed. Trials draw
/// from independent sub-streams so they may run in any order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Deterministic generator; uniform() is computed from raw 64-bit draws so
/// results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on (0, 1].
  double uniform_positive() { return 1.0 - uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * n) % n; }
  bool coin(double p = 0.5) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Each atom uniform on [0, max_mass], then each atom zeroed with
/// probability 1/4.
Measure random_measure(const Space& space, const CheckConfig& cfg, Rng& rng);
/// Like random_measure but with at least one strictly positive atom.
Measure random_nonzero_measure(const Space& space, const CheckConfig& cfg, Rng& rng);
/// Disjoint supports by construction.
std::pair<Measure, Measure> random_singular_pair(const Space& space, const CheckConfig& cfg,
                                                 Rng& rng);
/// first <= second atomwise by construction.
std::pair<Measure, Measure> random_dominated_pair(const Space& space, const CheckConfig& cfg,
                                                  Rng& rng);
/// mu_k = target + 2^-k p for k = 0..sequence_length-1 with a nonzero random p.
std::vector<Measure> random_tv_sequence(const Space& space, const Measure& target,
                                        const CheckConfig& cfg, Rng& rng);

}  // namespace transfun
