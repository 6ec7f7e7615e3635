#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transfun/measure.hpp"

namespace transfun {

/// The seven properties a transfunction may have.
enum class Axiom {
  weakly_additive,
  strongly_additive,
  homogeneous,
  monotone,
  measure_preserving,
  bounded,
  continuous,
};

inline constexpr std::array<Axiom, 7> kAllAxioms{
    Axiom::weakly_additive, Axiom::strongly_additive,  Axiom::homogeneous, Axiom::monotone,
    Axiom::measure_preserving, Axiom::bounded, Axiom::continuous,
};

std::string_view to_string(Axiom axiom);
std::optional<Axiom> axiom_from_string(std::string_view name);

enum class Status { proved, refuted, passed_trials, unknown };
std::string_view to_string(Status status);
std::optional<Status> status_from_string(std::string_view name);

/// Where a verdict came from.
enum class Source { static_rules, trials, static_and_trials };
std::string_view to_string(Source source);
std::optional<Source> source_from_string(std::string_view name);

/// A replayable counterexample. The violation is recomputed from `inputs`
/// (and the optional scalars) alone; see replay_violation().
struct Witness {
  std::vector<Measure> inputs;
  std::vector<Measure> outputs;
  std::optional<double> alpha;    // homogeneity scalar
  std::optional<double> modulus;  // bound / Lipschitz constant being tested
  std::optional<double> rate;     // required contraction for continuity tails
  double violation = 0.0;
  std::optional<std::uint64_t> trial;
  std::string note;
};

struct Verdict {
  Axiom axiom = Axiom::weakly_additive;
  Status status = Status::unknown;
  Source source = Source::static_rules;
  /// Bounded: C. Continuous: modulus under total variation.
  std::optional<double> constant;
  std::optional<Witness> witness;
};

struct CheckConfig {
  std::size_t trials = 1000;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  double max_mass = 10.0;
  std::size_t sequence_length = 20;

  /// Throws Errc::invalid_config unless every field is positive and finite.
  void validate() const;
};

struct PropertyReport {
  std::string spec_digest;
  CheckConfig config;
  /// Reports produced without trials serialize only the tolerance.
  bool static_only = false;
  std::vector<Verdict> verdicts;

  const Verdict* find(Axiom axiom) const;
};

}  // namespace transfun
