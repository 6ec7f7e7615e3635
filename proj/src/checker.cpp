#include "transfun/checker.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "transfun/error.hpp"
#include "transfun/generators.hpp"
#include "transfun/inference.hpp"
#include "transfun/io.hpp"
#include "transfun/trial_runner.hpp"

namespace transfun {

namespace {

constexpr double kShrinkFactor = 1e-6;
constexpr std::uint64_t kBoundEstimateStream = 100;

std::uint64_t stream_of(Axiom a) { return static_cast<std::uint64_t>(a) + 1; }

}  // namespace

// --- witness builders ---------------------------------------------------------

Witness additivity_witness(const Transfunction& spec, const Measure& a, const Measure& b) {
  Witness w;
  Measure joint = apply(spec, add(a, b));
  Measure split = add(apply(spec, a), apply(spec, b));
  w.violation = sup_distance(joint, split);
  w.inputs = {a, b};
  w.outputs = {std::move(joint), std::move(split)};
  return w;
}

Witness homogeneity_witness(const Transfunction& spec, const Measure& mu, double alpha) {
  Witness w;
  Measure scaled_in = apply(spec, scale(alpha, mu));
  Measure scaled_out = scale(alpha, apply(spec, mu));
  w.violation = sup_distance(scaled_in, scaled_out);
  w.inputs = {mu};
  w.outputs = {std::move(scaled_in), std::move(scaled_out)};
  w.alpha = alpha;
  return w;
}

Witness monotonicity_witness(const Transfunction& spec, const Measure& lower,
                             const Measure& upper) {
  Witness w;
  Measure lo = apply(spec, lower);
  Measure hi = apply(spec, upper);
  double excess = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) excess = std::max(excess, lo[i] - hi[i]);
  w.violation = excess;
  w.inputs = {lower, upper};
  w.outputs = {std::move(lo), std::move(hi)};
  return w;
}

Witness preservation_witness(const Transfunction& spec, const Measure& mu) {
  Witness w;
  Measure out = apply(spec, mu);
  w.violation = std::abs(total_mass(out) - total_mass(mu));
  w.inputs = {mu};
  w.outputs = {std::move(out)};
  return w;
}

Witness bound_witness(const Transfunction& spec, const Measure& mu, double bound) {
  Witness w;
  Measure out = apply(spec, mu);
  w.violation = total_mass(out) - bound * total_mass(mu);
  w.inputs = {mu};
  w.outputs = {std::move(out)};
  w.modulus = bound;
  return w;
}

Witness lipschitz_witness(const Transfunction& spec, const Measure& target, const Measure& mu,
                          double modulus) {
  Witness w;
  Measure at_target = apply(spec, target);
  Measure at_mu = apply(spec, mu);
  w.violation = tv_distance(at_mu, at_target) - modulus * tv_distance(mu, target);
  w.inputs = {target, mu};
  w.outputs = {std::move(at_target), std::move(at_mu)};
  w.modulus = modulus;
  return w;
}

Witness convergence_witness(const Transfunction& spec, const Measure& target,
                            const Measure& head, const Measure& tail, double rate,
                            double tolerance) {
  Witness w;
  Measure at_target = apply(spec, target);
  Measure at_head = apply(spec, head);
  Measure at_tail = apply(spec, tail);
  const double allowed = std::max(10.0 * tolerance, rate * tv_distance(at_head, at_target));
  w.violation = tv_distance(at_tail, at_target) - allowed;
  w.inputs = {target, head, tail};
  w.outputs = {std::move(at_target), std::move(at_head), std::move(at_tail)};
  w.rate = rate;
  return w;
}

double replay_violation(const Transfunction& spec, Axiom axiom, const Witness& w,
                        double tolerance) {
  auto need = [&](std::size_t n) {
    if (w.inputs.size() < n)
      fail(Errc::parse_error, "witness for " + std::string(to_string(axiom)) + " needs " +
                                  std::to_string(n) + " inputs");
  };
  switch (axiom) {
    case Axiom::weakly_additive:
    case Axiom::strongly_additive:
      need(2);
      return additivity_witness(spec, w.inputs[0], w.inputs[1]).violation;
    case Axiom::homogeneous:
      need(1);
      return homogeneity_witness(spec, w.inputs[0], w.alpha.value_or(1.0)).violation;
    case Axiom::monotone:
      need(2);
      return monotonicity_witness(spec, w.inputs[0], w.inputs[1]).violation;
    case Axiom::measure_preserving:
      need(1);
      return preservation_witness(spec, w.inputs[0]).violation;
    case Axiom::bounded:
      need(1);
      return bound_witness(spec, w.inputs[0], w.modulus.value_or(0.0)).violation;
    case Axiom::continuous:
      if (w.modulus) {
        need(2);
        return lipschitz_witness(spec, w.inputs[0], w.inputs[1], *w.modulus).violation;
      }
      need(3);
      return convergence_witness(spec, w.inputs[0], w.inputs[1], w.inputs[2],
                                 w.rate.value_or(1.0), tolerance)
          .violation;
  }
  return 0.0;
}

// --- randomized trials --------------------------------------------------------

namespace {

class TrialContext {
 public:
  TrialContext(const Transfunction& spec, Axiom axiom, const CheckConfig& cfg)
      : spec_(spec), axiom_(axiom), cfg_(cfg), facts_(static_facts(spec)) {}

  TrialResult operator()(std::size_t index) const {
    Rng rng(trial_seed(cfg_.seed, stream_of(axiom_), index));
    TrialResult r = run(index, rng);
    if (r.witness) {
      if (r.witness->violation > cfg_.tolerance) {
        r.witness->trial = index;
      } else {
        r.witness.reset();
      }
    }
    return r;
  }

 private:
  TrialResult run(std::size_t index, Rng& rng) const {
    const Space& X = spec_.domain();
    switch (axiom_) {
      case Axiom::weakly_additive: {
        auto [a, b] = random_singular_pair(X, cfg_, rng);
        return {additivity_witness(spec_, a, b)};
      }
      case Axiom::strongly_additive: {
        Measure a = random_measure(X, cfg_, rng);
        Measure b = random_measure(X, cfg_, rng);
        return {additivity_witness(spec_, a, b)};
      }
      case Axiom::homogeneous: {
        Measure mu = random_measure(X, cfg_, rng);
        return {homogeneity_witness(spec_, mu, 5.0 * rng.uniform_positive())};
      }
      case Axiom::monotone: {
        auto [lower, upper] = random_dominated_pair(X, cfg_, rng);
        return {monotonicity_witness(spec_, lower, upper)};
      }
      case Axiom::measure_preserving:
        return {preservation_witness(spec_, random_measure(X, cfg_, rng))};
      case Axiom::bounded:
        return bounded_trial(index, rng);
      case Axiom::continuous:
        return continuity_trial(rng);
    }
    return {};
  }

  // Trial 0 probes the apex: Phi(0) != 0 rules out every constant C. Every
  // fourth trial shrinks its input by kShrinkFactor.
  TrialResult bounded_trial(std::size_t index, Rng& rng) const {
    const Space& X = spec_.domain();
    Measure nu = random_nonzero_measure(X, cfg_, rng);
    if (index == 0) {
      Measure shrunk = scale(kShrinkFactor, nu);
      Witness w = bound_witness(spec_, Measure(X), facts_.bound.value_or(0.0));
      Measure image = apply(spec_, shrunk);
      std::ostringstream note;
      note << "nonzero image of the zero measure; ratio at mass " << total_mass(shrunk)
           << " is " << total_mass(image) / total_mass(shrunk);
      w.note = note.str();
      w.inputs.push_back(std::move(shrunk));
      w.outputs.push_back(std::move(image));
      return {std::move(w)};
    }
    Measure mu = index % 4 == 3 ? scale(kShrinkFactor, nu) : std::move(nu);
    const double mass = total_mass(mu);
    if (mass <= cfg_.tolerance) return {};
    TrialResult r;
    Witness w = bound_witness(spec_, mu, facts_.bound.value_or(0.0));
    r.statistic = total_mass(w.outputs[0]) / mass;
    if (facts_.bound) r.witness = std::move(w);
    return r;
  }

  TrialResult continuity_trial(Rng& rng) const {
    const Space& X = spec_.domain();
    Measure target = random_measure(X, cfg_, rng);
    std::vector<Measure> seq = random_tv_sequence(X, target, cfg_, rng);
    TrialResult r;
    const Measure at_target = apply(spec_, target);
    for (const auto& mu : seq) {
      const double d_in = tv_distance(mu, target);
      if (d_in > 0.0)
        r.statistic = std::max(r.statistic, tv_distance(apply(spec_, mu), at_target) / d_in);
    }
    if (facts_.modulus) {
      for (const auto& mu : seq) {
        Witness w = lipschitz_witness(spec_, target, mu, *facts_.modulus);
        if (w.violation > cfg_.tolerance) {
          w.note = "sequence term exceeds the proved modulus";
          r.witness = std::move(w);
          break;
        }
      }
    } else {
      // Without a proved modulus, require the tail to have contracted at
      // least at half the geometric rate of the input sequence.
      const double rate = std::exp2(-0.5 * static_cast<double>(seq.size() - 1));
      Witness w = convergence_witness(spec_, target, seq.front(), seq.back(), rate,
                                      cfg_.tolerance);
      w.note = "image sequence fails to converge";
      r.witness = std::move(w);
    }
    return r;
  }

  const Transfunction& spec_;
  Axiom axiom_;
  const CheckConfig& cfg_;
  StaticFacts facts_;
};

std::string describe_inconsistency(Axiom a, const Verdict& dynamic) {
  std::ostringstream os;
  os << "axiom " << to_string(a) << " is statically proved but trial "
     << dynamic.witness->trial.value_or(0) << " violates it by " << dynamic.witness->violation;
  return os.str();
}

}  // namespace

Verdict check_axiom(const Transfunction& spec, Axiom axiom, const CheckConfig& cfg,
                    Execution execution) {
  cfg.validate();
  TrialContext ctx(spec, axiom, cfg);
  TrialSummary summary = execution == Execution::parallel
                             ? run_trials_parallel(cfg.trials, ctx)
                             : run_trials_serial(cfg.trials, ctx);
  Verdict v;
  v.axiom = axiom;
  v.source = Source::trials;
  if (summary.first_violation) {
    v.status = Status::refuted;
    v.witness = std::move(summary.first_violation);
  } else {
    v.status = Status::passed_trials;
  }
  if ((axiom == Axiom::bounded || axiom == Axiom::continuous) && summary.max_statistic >= 0.0)
    v.constant = summary.max_statistic;
  return v;
}

PropertyReport check_properties(const Transfunction& spec, std::span<const Axiom> axioms,
                                const CheckConfig& cfg, Execution execution) {
  cfg.validate();
  PropertyReport inferred = infer_properties(spec, cfg.tolerance);
  PropertyReport report;
  report.spec_digest = inferred.spec_digest;
  report.config = cfg;

  for (Axiom a : axioms) {
    const Verdict& fixed = *inferred.find(a);
    Verdict dynamic = check_axiom(spec, a, cfg, execution);
    Verdict merged;
    merged.axiom = a;
    if (fixed.status == Status::proved) {
      if (dynamic.status == Status::refuted)
        fail(Errc::internal_inconsistency, describe_inconsistency(a, dynamic));
      merged = fixed;
      merged.source = Source::static_and_trials;
    } else if (fixed.status == Status::refuted) {
      merged = fixed;
      merged.source = dynamic.status == Status::refuted ? Source::static_and_trials
                                                        : Source::static_rules;
    } else {
      merged = std::move(dynamic);
    }
    report.verdicts.push_back(std::move(merged));
  }
  return report;
}

PropertyReport check_all(const Transfunction& spec, const CheckConfig& cfg, Execution execution) {
  return check_properties(spec, kAllAxioms, cfg, execution);
}

double estimate_bound(const Transfunction& spec, const CheckConfig& cfg) {
  cfg.validate();
  const Space& X = spec.domain();
  double best = 0.0;
  for (std::size_t x = 0; x < X.size(); ++x)
    best = std::max(best, total_mass(apply(spec, Measure::dirac(X, x))));
  if (is_linear(spec)) return best;

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng(trial_seed(cfg.seed, kBoundEstimateStream, i));
    Measure mu = random_nonzero_measure(X, cfg, rng);
    if (i % 4 == 3) mu = scale(kShrinkFactor, mu);
    const double mass = total_mass(mu);
    if (mass <= cfg.tolerance) continue;
    best = std::max(best, total_mass(apply(spec, mu)) / mass);
  }
  return best;
}

}  // namespace transfun
