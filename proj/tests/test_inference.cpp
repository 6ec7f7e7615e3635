#include <doctest.h>

#include "support/random_spec.hpp"
#include "transfun/checker.hpp"
#include "transfun/inference.hpp"

using namespace transfun;
using transfun::testing::cyclic_space;
using transfun::testing::make_space;

namespace {

Status status_of(const PropertyReport& r, Axiom a) { return r.find(a)->status; }

bool all_proved(const PropertyReport& r) {
  for (const auto& v : r.verdicts)
    if (v.status != Status::proved) return false;
  return true;
}

}  // namespace

TEST_CASE("pushforward proves every axiom") {
  const Space X = make_space("X", 3, "x");
  const Space Y = make_space("Y", 2, "y");
  auto r = infer_properties(Transfunction::pushforward(X, Y, std::vector<std::size_t>{0, 1, 1}));
  CHECK(r.verdicts.size() == 7);
  CHECK(all_proved(r));
  CHECK(r.static_only);
  CHECK(r.find(Axiom::bounded)->constant == 1.0);
  CHECK(r.find(Axiom::continuous)->constant == 1.0);
  for (const auto& v : r.verdicts) CHECK(v.source == Source::static_rules);
}

TEST_CASE("matrix rules") {
  const Space X = make_space("X", 2, "x");
  auto unit = infer_properties(
      Transfunction::matrix(X, X, Matrix::from_rows({{0.5, 0.25}, {0.5, 0.75}})));
  CHECK(all_proved(unit));
  CHECK(unit.find(Axiom::bounded)->constant == 1.0);

  auto leaky = infer_properties(
      Transfunction::matrix(X, X, Matrix::from_rows({{0.5, 0}, {0.5, 0.9}})));
  const Verdict& mp = *leaky.find(Axiom::measure_preserving);
  CHECK(mp.status == Status::refuted);
  REQUIRE(mp.witness);
  CHECK(mp.witness->violation == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(leaky.find(Axiom::bounded)->constant == 1.0);
  CHECK(status_of(leaky, Axiom::strongly_additive) == Status::proved);

  auto doubling = infer_properties(Transfunction::matrix(X, X, Matrix::from_rows({{2, 0}, {0, 2}})));
  CHECK(doubling.find(Axiom::bounded)->constant == 2.0);
  CHECK(doubling.find(Axiom::continuous)->constant == 2.0);
  CHECK(status_of(doubling, Axiom::measure_preserving) == Status::refuted);
}

TEST_CASE("kernel rules") {
  const Space X = make_space("X", 2, "x");
  const Space Y = make_space("Y", 2, "y");
  // rows sum to one against rho = (1, 1)
  auto unit = infer_properties(Transfunction::kernel(
      X, Y, Matrix::from_rows({{0.3, 0.7}, {1.0, 0.0}}), Measure(Y, {1, 1})));
  CHECK(status_of(unit, Axiom::measure_preserving) == Status::proved);
  auto other = infer_properties(Transfunction::kernel(
      X, Y, Matrix::from_rows({{0.3, 0.7}, {2.0, 0.0}}), Measure(Y, {1, 3})));
  CHECK(status_of(other, Axiom::measure_preserving) == Status::refuted);
  CHECK(other.find(Axiom::bounded)->constant == doctest::Approx(2.0 * 4.0));
}

TEST_CASE("semigroup products are refuted constructively") {
  const Space Z = cyclic_space(3);
  auto id = Transfunction::identity(Z);
  auto conv = Transfunction::semigroup_product(id, id, SemigroupOp::cyclic_addition(Z));
  auto r = infer_properties(conv);
  CHECK(status_of(r, Axiom::monotone) == Status::proved);
  for (Axiom a : {Axiom::homogeneous, Axiom::strongly_additive, Axiom::weakly_additive}) {
    const Verdict& v = *r.find(a);
    CHECK(v.status == Status::refuted);
    REQUIRE(v.witness);
    CHECK(replay_violation(conv, a, *v.witness, 1e-9) == doctest::Approx(v.witness->violation));
  }
  CHECK(r.find(Axiom::homogeneous)->witness->alpha == 2.0);
  CHECK(status_of(r, Axiom::bounded) == Status::unknown);
}

TEST_CASE("wrappers and composition") {
  const Space X = make_space("X", 2, "x");
  auto push = Transfunction::identity(X);
  auto mw = Transfunction::max_with(push, Measure(X, {1, 0}));
  auto r = infer_properties(mw);
  CHECK(status_of(r, Axiom::monotone) == Status::proved);
  for (Axiom a : {Axiom::weakly_additive, Axiom::strongly_additive, Axiom::homogeneous,
                  Axiom::measure_preserving, Axiom::bounded, Axiom::continuous})
    CHECK(status_of(r, a) == Status::unknown);

  auto scaled = Transfunction::output_multiplier(Density(X, std::vector<double>{3, 0.5}), push);
  auto rs = infer_properties(scaled);
  CHECK(rs.find(Axiom::bounded)->constant == 3.0);
  CHECK(status_of(rs, Axiom::measure_preserving) == Status::unknown);
  CHECK(status_of(rs, Axiom::strongly_additive) == Status::proved);

  auto comp = compose(scaled, Transfunction::matrix(X, X, Matrix::from_rows({{2, 0}, {0, 1}})));
  auto rc = infer_properties(comp);
  CHECK(rc.find(Axiom::bounded)->constant == 6.0);
  CHECK(status_of(rc, Axiom::homogeneous) == Status::proved);

  auto with_max = compose(push, mw);
  auto rm = infer_properties(with_max);
  CHECK(status_of(rm, Axiom::monotone) == Status::proved);
  CHECK(status_of(rm, Axiom::homogeneous) == Status::unknown);
  // inner weakly additive is not enough when the outer factor is not strongly additive
  auto sq = Transfunction::semigroup_product(Transfunction::identity(cyclic_space(2)),
                                             Transfunction::identity(cyclic_space(2)),
                                             SemigroupOp::cyclic_addition(cyclic_space(2)));
  auto rw = infer_properties(compose(sq, Transfunction::identity(cyclic_space(2))));
  CHECK(status_of(rw, Axiom::weakly_additive) == Status::unknown);
}

TEST_CASE("closure rules hold on random trees") {
  transfun::testing::RandomSpecGenerator gen(31);
  for (int t = 0; t < 300; ++t) {
    Transfunction phi = gen.tree(3);
    StaticFacts f = static_facts(phi);
    if (f.has(Axiom::strongly_additive)) CHECK(f.has(Axiom::weakly_additive));
    if (f.has(Axiom::measure_preserving)) {
      CHECK(f.has(Axiom::bounded));
      CHECK(f.bound == 1.0);
    }
    if (f.has(Axiom::bounded)) CHECK(f.bound.has_value());
    if (f.has(Axiom::continuous)) CHECK(f.modulus.has_value());
    auto r = infer_properties(phi);
    for (const auto& v : r.verdicts) {
      if (v.status == Status::refuted) {
        REQUIRE(v.witness);
        CHECK(replay_violation(phi, v.axiom, *v.witness, 1e-9) > 1e-9);
      }
    }
  }
}
