#pragma once

#include <array>
#include <optional>

#include "transfun/axiom.hpp"
#include "transfun/transfunction.hpp"

namespace transfun {

/// Column sums within this distance of 1 count as unit for the static
/// measure-preservation rule.
inline constexpr double kUnitColumnSlack = 1e-12;

/// Result of the rule table for one node: Proved or Unknown per axiom, plus
/// the proved constants.
struct StaticFacts {
  std::array<bool, 7> proved{};
  std::optional<double> bound;    // C with ||Phi mu|| <= C ||mu||
  std::optional<double> modulus;  // L with d(Phi mu, Phi nu) <= L d(mu, nu)

  bool has(Axiom a) const { return proved[static_cast<std::size_t>(a)]; }
  void set(Axiom a, bool v = true) { proved[static_cast<std::size_t>(a)] = v; }
};

/// Rule table applied bottom-up over the constructor tree.
StaticFacts static_facts(const Transfunction& spec);

/// One verdict per axiom from the rule table, plus constructive refutations
/// at the root (Dirac defects for non-unit linear leaves, the degree-2 and
/// cross-term witnesses for semigroup products). No randomness.
PropertyReport infer_properties(const Transfunction& spec, double tolerance = 1e-9);

}  // namespace transfun
