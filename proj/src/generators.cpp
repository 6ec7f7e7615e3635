#include "transfun/generators.hpp"

#include <cmath>

namespace transfun {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) + index);
}

Measure random_measure(const Space& space, const CheckConfig& cfg, Rng& rng) {
  std::vector<double> m(space.size());
  for (auto& v : m) v = rng.uniform(0.0, cfg.max_mass);
  for (auto& v : m)
    if (rng.coin(0.25)) v = 0.0;
  return Measure(space, std::move(m));
}

Measure random_nonzero_measure(const Space& space, const CheckConfig& cfg, Rng& rng) {
  Measure mu = random_measure(space, cfg, rng);
  if (total_mass(mu) > 0.0) return mu;
  return Measure::dirac(space, rng.index(space.size()), cfg.max_mass * rng.uniform_positive());
}

std::pair<Measure, Measure> random_singular_pair(const Space& space, const CheckConfig& cfg,
                                                 Rng& rng) {
  std::vector<bool> left(space.size());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = rng.coin();
  Measure a = random_measure(space, cfg, rng);
  Measure b = random_measure(space, cfg, rng);
  std::vector<double> ma(a.masses().begin(), a.masses().end());
  std::vector<double> mb(b.masses().begin(), b.masses().end());
  for (std::size_t i = 0; i < left.size(); ++i) (left[i] ? mb : ma)[i] = 0.0;
  return {Measure(space, std::move(ma)), Measure(space, std::move(mb))};
}

std::pair<Measure, Measure> random_dominated_pair(const Space& space, const CheckConfig& cfg,
                                                  Rng& rng) {
  Measure upper = random_measure(space, cfg, rng);
  std::vector<double> lower(space.size());
  for (std::size_t i = 0; i < lower.size(); ++i) lower[i] = rng.uniform() * upper[i];
  return {Measure(space, std::move(lower)), std::move(upper)};
}

std::vector<Measure> random_tv_sequence(const Space& space, const Measure& target,
                                        const CheckConfig& cfg, Rng& rng) {
  Measure p = random_nonzero_measure(space, cfg, rng);
  std::vector<Measure> seq;
  seq.reserve(cfg.sequence_length);
  for (std::size_t k = 0; k < cfg.sequence_length; ++k)
    seq.push_back(add(target, scale(std::ldexp(1.0, -static_cast<int>(k)), p)));
  return seq;
}

}  // namespace transfun
