#include "transfun/inference.hpp"

#include <cmath>
#include <type_traits>

#include "transfun/checker.hpp"
#include "transfun/io.hpp"

namespace transfun {

namespace {

StaticFacts all_linear(double bound) {
  StaticFacts f;
  for (auto a : {Axiom::weakly_additive, Axiom::strongly_additive, Axiom::homogeneous,
                 Axiom::monotone, Axiom::bounded, Axiom::continuous})
    f.set(a);
  f.bound = bound;
  f.modulus = bound;
  return f;
}

bool near_one(double s) { return std::abs(s - 1.0) <= kUnitColumnSlack; }

// Multipliers and projections keep the linear properties of their inner
// transfunction; the bound and modulus scale by the multiplier's sup.
StaticFacts inherit_linear(const StaticFacts& inner, double factor) {
  StaticFacts f;
  for (auto a : {Axiom::weakly_additive, Axiom::strongly_additive, Axiom::homogeneous,
                 Axiom::monotone})
    f.set(a, inner.has(a));
  if (inner.has(Axiom::bounded) && inner.bound) {
    f.set(Axiom::bounded);
    f.bound = *inner.bound * factor;
  }
  if (inner.has(Axiom::continuous) && inner.modulus) {
    f.set(Axiom::continuous);
    f.modulus = *inner.modulus * factor;
  }
  return f;
}

std::vector<double> kernel_masses(const KernelNode& k) {
  std::vector<double> masses(k.phi.rows(), 0.0);
  for (std::size_t x = 0; x < k.phi.rows(); ++x)
    for (std::size_t y = 0; y < k.phi.cols(); ++y) masses[x] += k.phi(x, y) * k.rho[y];
  return masses;
}

StaticFacts node_facts(const Transfunction& spec) {
  return std::visit(
      [](const auto& n) -> StaticFacts {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PushforwardNode>) {
          StaticFacts f = all_linear(1.0);
          f.set(Axiom::measure_preserving);
          return f;
        } else if constexpr (std::is_same_v<T, MatrixNode>) {
          StaticFacts f = all_linear(n.a.max_column_sum());
          bool unit = true;
          for (std::size_t c = 0; c < n.a.cols(); ++c) unit = unit && near_one(n.a.column_sum(c));
          f.set(Axiom::measure_preserving, unit);
          return f;
        } else if constexpr (std::is_same_v<T, CountableMatrixNode>) {
          double c = 0.0;
          bool unit = true;
          for (const auto& [label, column] : n.columns) {
            c = std::max(c, total_mass(column));
            unit = unit && near_one(total_mass(column));
          }
          StaticFacts f = all_linear(c);
          f.set(Axiom::measure_preserving, unit);
          return f;
        } else if constexpr (std::is_same_v<T, KernelNode>) {
          // ||Phi mu|| <= ||phi||_inf ||rho|| ||mu||
          StaticFacts f = all_linear(n.phi.max_entry() * total_mass(n.rho));
          bool unit = true;
          for (double m : kernel_masses(n)) unit = unit && near_one(m);
          f.set(Axiom::measure_preserving, unit);
          return f;
        } else if constexpr (std::is_same_v<T, OutputMultiplierNode>) {
          return inherit_linear(static_facts(n.inner), n.f.sup());
        } else if constexpr (std::is_same_v<T, InputMultiplierNode>) {
          return inherit_linear(static_facts(n.inner), n.g.sup());
        } else if constexpr (std::is_same_v<T, PreProjectNode> ||
                             std::is_same_v<T, PostProjectNode>) {
          return inherit_linear(static_facts(n.inner), 1.0);
        } else if constexpr (std::is_same_v<T, MaxWithNode>) {
          StaticFacts f;
          f.set(Axiom::monotone, static_facts(n.inner).has(Axiom::monotone));
          return f;
        } else if constexpr (std::is_same_v<T, SemigroupProductNode>) {
          StaticFacts f;
          f.set(Axiom::monotone, static_facts(n.left).has(Axiom::monotone) &&
                                     static_facts(n.right).has(Axiom::monotone));
          return f;
        } else {
          static_assert(std::is_same_v<T, ComposeNode>);
          const StaticFacts outer = static_facts(n.outer);
          const StaticFacts inner = static_facts(n.inner);
          StaticFacts f;
          for (auto a : {Axiom::strongly_additive, Axiom::homogeneous, Axiom::monotone,
                         Axiom::measure_preserving})
            f.set(a, outer.has(a) && inner.has(a));
          // Images of singular inputs need not be singular, so the outer
          // factor must be strongly additive.
          f.set(Axiom::weakly_additive,
                inner.has(Axiom::weakly_additive) && outer.has(Axiom::strongly_additive));
          if (outer.has(Axiom::bounded) && inner.has(Axiom::bounded)) {
            f.set(Axiom::bounded);
            f.bound = *outer.bound * *inner.bound;
          }
          if (outer.has(Axiom::continuous) && inner.has(Axiom::continuous)) {
            f.set(Axiom::continuous);
            f.modulus = *outer.modulus * *inner.modulus;
          }
          return f;
        }
      },
      spec.node().body);
}

std::optional<Witness> accept(Witness w, double tolerance) {
  if (w.violation > tolerance) return w;
  return std::nullopt;
}

// Dirac input at the atom with the largest mass defect.
std::optional<Witness> dirac_defect(const Transfunction& spec, double tolerance) {
  std::optional<Witness> best;
  for (std::size_t x = 0; x < spec.domain().size(); ++x) {
    Witness w = preservation_witness(spec, Measure::dirac(spec.domain(), x));
    if (w.violation > tolerance && (!best || w.violation > best->violation)) best = std::move(w);
  }
  if (best) best->note = "Dirac input with mass defect";
  return best;
}

std::vector<Measure> candidate_inputs(const Space& space) {
  std::vector<Measure> out;
  for (std::size_t x = 0; x < space.size(); ++x) out.push_back(Measure::dirac(space, x));
  out.emplace_back(space, std::vector<double>(space.size(), 1.0));
  return out;
}

std::optional<Witness> degree_two_homogeneity(const Transfunction& spec, double tolerance) {
  for (const auto& mu : candidate_inputs(spec.domain())) {
    if (auto w = accept(homogeneity_witness(spec, mu, 2.0), tolerance)) {
      w->note = "degree-2 scaling: Phi(2 mu) = 4 Phi(mu)";
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> doubled_input(const Transfunction& spec, double tolerance) {
  for (const auto& mu : candidate_inputs(spec.domain())) {
    if (auto w = accept(additivity_witness(spec, mu, mu), tolerance)) {
      w->note = "product of sums: Phi(mu + mu) != 2 Phi(mu)";
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> singular_cross_terms(const Transfunction& spec, double tolerance) {
  const auto& X = spec.domain();
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = x + 1; y < X.size(); ++y) {
      if (auto w = accept(additivity_witness(spec, Measure::dirac(X, x), Measure::dirac(X, y)),
                          tolerance)) {
        w->note = "cross terms between singular inputs";
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

StaticFacts static_facts(const Transfunction& spec) {
  StaticFacts f = node_facts(spec);
  if (f.has(Axiom::strongly_additive)) f.set(Axiom::weakly_additive);
  if (f.has(Axiom::measure_preserving)) {
    f.set(Axiom::bounded);
    f.bound = 1.0;
  }
  return f;
}

PropertyReport infer_properties(const Transfunction& spec, double tolerance) {
  const StaticFacts facts = static_facts(spec);
  PropertyReport report;
  report.spec_digest = spec_digest(spec);
  report.config.tolerance = tolerance;
  report.static_only = true;

  for (Axiom a : kAllAxioms) {
    Verdict v;
    v.axiom = a;
    v.source = Source::static_rules;
    v.status = facts.has(a) ? Status::proved : Status::unknown;
    if (facts.has(a) && a == Axiom::bounded) v.constant = facts.bound;
    if (facts.has(a) && a == Axiom::continuous) v.constant = facts.modulus;
    report.verdicts.push_back(std::move(v));
  }

  auto refute = [&](Axiom a, std::optional<Witness> w) {
    if (!w) return;
    Verdict& v = report.verdicts[static_cast<std::size_t>(a)];
    if (v.status == Status::proved) return;
    v.status = Status::refuted;
    v.witness = std::move(w);
  };

  switch (spec.kind()) {
    case NodeKind::matrix:
    case NodeKind::countable_matrix:
    case NodeKind::kernel:
      refute(Axiom::measure_preserving, dirac_defect(spec, tolerance));
      break;
    case NodeKind::semigroup_product:
      refute(Axiom::homogeneous, degree_two_homogeneity(spec, tolerance));
      refute(Axiom::strongly_additive, doubled_input(spec, tolerance));
      refute(Axiom::weakly_additive, singular_cross_terms(spec, tolerance));
      break;
    default:
      break;
  }
  return report;
}

}  // namespace transfun
