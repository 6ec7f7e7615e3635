#pragma once

#include <span>

#include "transfun/axiom.hpp"
#include "transfun/transfunction.hpp"

namespace transfun {

/// How randomized trials are scheduled. Both produce identical verdicts:
/// the parallel runner evaluates trials in blocks and the first violation
/// by trial index wins.
enum class Execution { serial, parallel };

Verdict check_axiom(const Transfunction& spec, Axiom axiom, const CheckConfig& cfg,
                    Execution execution = Execution::parallel);

/// Randomized verdicts for `axioms`, merged with infer_properties(). Throws
/// Errc::internal_inconsistency when a statically proved axiom is refuted.
PropertyReport check_properties(const Transfunction& spec, std::span<const Axiom> axioms,
                                const CheckConfig& cfg,
                                Execution execution = Execution::parallel);
PropertyReport check_all(const Transfunction& spec, const CheckConfig& cfg,
                         Execution execution = Execution::parallel);

/// Empirical sup of ||Phi mu|| / ||mu|| over Dirac inputs at every domain
/// atom and cfg.trials random inputs. For linear trees the Dirac sweep is
/// the exact operator norm and is returned as is.
double estimate_bound(const Transfunction& spec, const CheckConfig& cfg);

// Witness builders. Each evaluates the spec on the given inputs and records
// the outputs and the violation magnitude; replay_violation() rebuilds them.

/// sup |Phi(a + b) - (Phi a + Phi b)|
Witness additivity_witness(const Transfunction& spec, const Measure& a, const Measure& b);
/// sup |Phi(alpha mu) - alpha Phi(mu)|
Witness homogeneity_witness(const Transfunction& spec, const Measure& mu, double alpha);
/// max over atoms of Phi(lower) - Phi(upper)
Witness monotonicity_witness(const Transfunction& spec, const Measure& lower,
                             const Measure& upper);
/// | ||Phi mu|| - ||mu|| |
Witness preservation_witness(const Transfunction& spec, const Measure& mu);
/// ||Phi mu|| - C ||mu||
Witness bound_witness(const Transfunction& spec, const Measure& mu, double bound);
/// d(Phi mu, Phi target) - L d(mu, target)
Witness lipschitz_witness(const Transfunction& spec, const Measure& target, const Measure& mu,
                          double modulus);
/// d(Phi tail, Phi target) - max(10 tol, rate * d(Phi head, Phi target))
Witness convergence_witness(const Transfunction& spec, const Measure& target,
                            const Measure& head, const Measure& tail, double rate,
                            double tolerance);

/// Recomputes a witness's violation from its stored inputs and scalars.
double replay_violation(const Transfunction& spec, Axiom axiom, const Witness& witness,
                        double tolerance);

}  // namespace transfun
