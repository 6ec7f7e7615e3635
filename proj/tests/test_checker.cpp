#include <doctest.h>

#include "support/random_spec.hpp"
#include "transfun/checker.hpp"
#include "transfun/error.hpp"
#include "transfun/inference.hpp"
#include "transfun/io.hpp"

using namespace transfun;
using transfun::testing::cyclic_space;
using transfun::testing::make_space;

namespace {

CheckConfig small_config(std::size_t trials = 200, std::uint64_t seed = 0) {
  CheckConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

Status status_of(const PropertyReport& r, Axiom a) { return r.find(a)->status; }

}  // namespace

TEST_CASE("witness builders on known inputs") {
  const Space X = make_space("X", 2, "x");
  auto id = Transfunction::identity(X);
  CHECK(additivity_witness(id, Measure(X, {1, 0}), Measure(X, {0, 2})).violation == 0.0);
  CHECK(homogeneity_witness(id, Measure(X, {1, 2}), 3.0).violation == 0.0);

  auto sq = Transfunction::semigroup_product(Transfunction::identity(cyclic_space(2)),
                                             Transfunction::identity(cyclic_space(2)),
                                             SemigroupOp::cyclic_addition(cyclic_space(2)));
  Measure d0 = Measure::dirac(cyclic_space(2), 0);
  // Phi(2 delta) = 4 delta, 2 Phi(delta) = 2 delta
  CHECK(homogeneity_witness(sq, d0, 2.0).violation == 2.0);
  CHECK(additivity_witness(sq, d0, d0).violation == 2.0);

  auto leak = Transfunction::matrix(X, X, Matrix::from_rows({{0.5, 0}, {0.5, 0.9}}));
  Witness w = preservation_witness(leak, Measure::dirac(X, 1, 2.0));
  CHECK(w.violation == doctest::Approx(0.2));
  CHECK(replay_violation(leak, Axiom::measure_preserving, w, 1e-9) == w.violation);

  auto mw = Transfunction::max_with(id, Measure(X, {1, 0}));
  CHECK(monotonicity_witness(mw, Measure(X, {0, 1}), Measure(X, {2, 1})).violation == 0.0);
  CHECK(bound_witness(mw, Measure(X), 5.0).violation == 1.0);
}

TEST_CASE("pushforward passes every trial") {
  const Space X = make_space("X", 4, "x");
  const Space Y = make_space("Y", 3, "y");
  auto push = Transfunction::pushforward(X, Y, std::vector<std::size_t>{0, 2, 2, 1});
  PropertyReport r = check_all(push, small_config(500));
  CHECK_FALSE(r.static_only);
  for (const auto& v : r.verdicts) {
    CHECK(v.status == Status::proved);
    CHECK(v.source == Source::static_and_trials);
  }
  Verdict mp = check_axiom(push, Axiom::measure_preserving, small_config(500));
  CHECK(mp.status == Status::passed_trials);
  CHECK(mp.source == Source::trials);
}

TEST_CASE("leaky stochastic matrix is refuted with its defect") {
  const Space X = make_space("X", 2, "x");
  auto leak = Transfunction::matrix(X, X, Matrix::from_rows({{0.5, 0}, {0.5, 0.9}}));
  PropertyReport r = check_all(leak, small_config());
  const Verdict& mp = *r.find(Axiom::measure_preserving);
  CHECK(mp.status == Status::refuted);
  CHECK(mp.witness->violation == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(mp.witness->inputs[0] == Measure::dirac(X, 1));

  Verdict trial = check_axiom(leak, Axiom::measure_preserving, small_config());
  CHECK(trial.status == Status::refuted);
  REQUIRE(trial.witness);
  CHECK(trial.witness->trial.has_value());
  CHECK(replay_violation(leak, Axiom::measure_preserving, *trial.witness, 1e-9) ==
        trial.witness->violation);
}

TEST_CASE("max_with is not bounded") {
  const Space X = make_space("X", 2, "x");
  auto mw = Transfunction::max_with(Transfunction::identity(X), Measure(X, {1, 0}));
  PropertyReport r = check_all(mw, small_config());
  const Verdict& b = *r.find(Axiom::bounded);
  CHECK(b.status == Status::refuted);
  REQUIRE(b.witness);
  CHECK(b.witness->inputs[0] == Measure(X));
  CHECK(b.witness->violation == 1.0);
  CHECK(status_of(r, Axiom::monotone) == Status::proved);
  CHECK(status_of(r, Axiom::homogeneous) == Status::refuted);
  CHECK(status_of(r, Axiom::strongly_additive) == Status::refuted);
  CHECK(status_of(r, Axiom::continuous) == Status::passed_trials);
}

TEST_CASE("semigroup products") {
  const Space Z = cyclic_space(3);
  auto id = Transfunction::identity(Z);
  auto conv = Transfunction::semigroup_product(id, id, SemigroupOp::cyclic_addition(Z));
  PropertyReport r = check_all(conv, small_config());
  CHECK(status_of(r, Axiom::homogeneous) == Status::refuted);
  CHECK(r.find(Axiom::homogeneous)->source == Source::static_and_trials);
  CHECK(status_of(r, Axiom::strongly_additive) == Status::refuted);
  CHECK(status_of(r, Axiom::weakly_additive) == Status::refuted);
  CHECK(status_of(r, Axiom::monotone) == Status::proved);
  CHECK(status_of(r, Axiom::measure_preserving) == Status::refuted);
  // mass squares, so trials only ever support boundedness
  const Verdict& b = *r.find(Axiom::bounded);
  CHECK(b.status == Status::passed_trials);
  REQUIRE(b.constant);
  CHECK(*b.constant > 1.0);
  CHECK(status_of(r, Axiom::continuous) == Status::passed_trials);
}

TEST_CASE("kernel reports") {
  const Space X = make_space("X", 3, "x");
  const Space Y = make_space("Y", 2, "y");
  Matrix phi = Matrix::from_rows({{0.2, 1.0}, {0.5, 0.5}, {0.9, 0.1}});
  auto k = Transfunction::kernel(X, Y, phi, Measure(Y, {2, 1}));
  PropertyReport r = check_all(k, small_config());
  for (Axiom a : {Axiom::weakly_additive, Axiom::strongly_additive, Axiom::homogeneous,
                  Axiom::monotone, Axiom::bounded, Axiom::continuous})
    CHECK(status_of(r, a) == Status::proved);
  CHECK(r.find(Axiom::bounded)->constant == doctest::Approx(3.0));
  CHECK(status_of(r, Axiom::measure_preserving) == Status::refuted);
  // Dirac sweep: sum_y phi(x, y) rho(y)
  CHECK(estimate_bound(k, small_config()) == doctest::Approx(1.9));
}

TEST_CASE("estimate_bound") {
  const Space X = make_space("X", 2, "x");
  CHECK(estimate_bound(Transfunction::identity(X), small_config()) == 1.0);
  CHECK(estimate_bound(Transfunction::matrix(X, X, Matrix::from_rows({{2, 0}, {0, 2}})),
                       small_config()) == 2.0);
  auto mw = Transfunction::max_with(Transfunction::identity(X), Measure(X, {1, 0}));
  CHECK(estimate_bound(mw, small_config()) > 1e4);

  Rng rng(17);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      Matrix a = transfun::testing::random_matrix(m, n, rng, 3.0);
      auto phi = Transfunction::matrix(make_space("X", n), make_space("Y", m), a);
      CHECK(estimate_bound(phi, small_config()) == a.max_column_sum());
    }
  }
}

TEST_CASE("continuity trials") {
  const Space X = make_space("X", 3, "x");
  auto lin = Transfunction::matrix(X, X, Matrix::from_rows({{1, 2, 0}, {0, 1, 0}, {0, 0, 3}}));
  Verdict v = check_axiom(lin, Axiom::continuous, small_config());
  CHECK(v.status == Status::passed_trials);
  REQUIRE(v.constant);
  // ratios of tiny distances carry relative rounding noise
  CHECK(*v.constant <= 3.0 * (1 + 1e-6));
  CHECK(*v.constant > 0.5);

  Measure target(X, {1, 2, 3});
  Measure head(X, {2, 2, 3});
  Measure tail(X, {1.5, 2, 3});
  Witness w = convergence_witness(lin, target, head, tail, 0.25, 1e-9);
  // d(tail) = 0.5, allowed = 0.25 * 1
  CHECK(w.violation == doctest::Approx(0.25));
  CHECK(replay_violation(lin, Axiom::continuous, w, 1e-9) == w.violation);
  Witness l = lipschitz_witness(lin, target, head, 0.5);
  CHECK(l.violation == doctest::Approx(0.5));
  CHECK(replay_violation(lin, Axiom::continuous, l, 1e-9) == l.violation);
}

TEST_CASE("determinism and serial/parallel agreement") {
  transfun::testing::RandomSpecGenerator gen(41);
  for (int t = 0; t < 30; ++t) {
    Transfunction phi = gen.tree(3);
    CheckConfig cfg = small_config(300, 7 + t);
    PropertyReport a = check_all(phi, cfg, Execution::serial);
    PropertyReport b = check_all(phi, cfg, Execution::parallel);
    PropertyReport c = check_all(phi, cfg, Execution::parallel);
    CHECK(dump(to_json(a)) == dump(to_json(b)));
    CHECK(dump(to_json(b)) == dump(to_json(c)));
  }
  const Space X = make_space("X", 3, "x");
  auto mw = Transfunction::max_with(Transfunction::identity(X), Measure(X, {1, 0, 0}));
  auto s1 = check_axiom(mw, Axiom::homogeneous, small_config(200, 1));
  auto s2 = check_axiom(mw, Axiom::homogeneous, small_config(200, 2));
  REQUIRE(s1.witness);
  REQUIRE(s2.witness);
  CHECK(s1.witness->inputs[0] != s2.witness->inputs[0]);
}

TEST_CASE("refutation witnesses replay on random trees") {
  transfun::testing::RandomSpecGenerator gen(42);
  std::size_t refuted = 0;
  for (int t = 0; t < 60; ++t) {
    Transfunction phi = gen.tree(3);
    CheckConfig cfg = small_config(200, t);
    PropertyReport r = check_all(phi, cfg);
    for (const auto& v : r.verdicts) {
      if (v.status != Status::refuted) continue;
      ++refuted;
      REQUIRE(v.witness);
      const double replay = replay_violation(phi, v.axiom, *v.witness, cfg.tolerance);
      CHECK(replay > cfg.tolerance);
      CHECK(replay == doctest::Approx(v.witness->violation).epsilon(1e-9));
    }
  }
  CHECK(refuted > 20);
}

TEST_CASE("replay of a non-violation and config errors") {
  const Space X = make_space("X", 2, "x");
  auto id = Transfunction::identity(X);
  Witness forged;
  forged.inputs = {Measure(X, {1, 0}), Measure(X, {0, 1})};
  CHECK(replay_violation(id, Axiom::weakly_additive, forged, 1e-9) == 0.0);

  CheckConfig bad = small_config();
  bad.trials = 0;
  try {
    check_all(id, bad);
    FAIL("expected invalid_config");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_config);
  }
}
