#include <doctest.h>

#include "generators.hpp"
#include "instanton/construct.hpp"
#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"
#include "instanton/membership.hpp"

using namespace instanton;
using namespace instanton::testing;

namespace {

BCPair random_pair(std::size_t n, std::size_t r, Rng& rng) {
  BCPair bc;
  bc.n = n;
  bc.r = r;
  bc.b = invertible_hyperweb(n, rng);
  bc.c = SkewBlockGrid(n, n - r);
  for (auto& v : bc.c.values()) v = rng.field();
  return bc;
}

Matrix<Fp> zeros_like(const Matrix<Fp>& m) { return Matrix<Fp>(m.rows(), m.cols()); }

}  // namespace

TEST_CASE("invertible sampling") {
  CHECK(sample_invertible(3, 5) == sample_invertible(3, 5));
  CHECK(sample_invertible(3, 5).is_invertible());
  CHECK_THROWS_AS(sample_invertible(0, 1), ParameterError);
  std::size_t failures = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) failures += sample_invertible(2, s).is_invertible() ? 0 : 1;
  CHECK(failures == 0);
}

TEST_CASE("condition (ir) is vacuous when n - r <= 1") {
  for_cases(121, 20, [](Rng& rng, std::size_t k) {
    const std::size_t n = 1 + k % 4;
    const std::size_t r = n - (n > 1 ? k % 2 : 0);
    CHECK(SpaceDims{n - r}.alternating_dim() == 0);
    CHECK(satisfies_condition_ir(random_pair(n, r, rng)));
  });
}

TEST_CASE("random C violates condition (ir) once n - r >= 2") {
  Rng rng(122);
  const BCPair bc = random_pair(4, 2, rng);
  CHECK_FALSE(satisfies_condition_ir(bc));
  CHECK_THROWS_AS(assemble_from_bc(bc, Splitting::coordinate(6, 4)), ConditionIrViolated);
}

TEST_CASE("assembly: rank law and round trip") {
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 2}, {4, 3}, {3, 1}, {4, 2}}) {
    CAPTURE(n);
    CAPTURE(r);
    const auto d = assembled(n, r, 123 + 7 * n + r, true);
    const auto rk = rank_and_kernel(d.a);
    CHECK(rk.rank == 4 * n);
    CHECK(rk.kernel.cols() == 4 * (n - r));
    const BlockData blocks = block_decompose(d.a, d.xi);
    CHECK(blocks.b == d.bc.b);
    CHECK(blocks.c == d.bc.c);
    CHECK(blocks.a3.matrix() == -schur_product(d.bc));
  }
}

TEST_CASE("r = n assembles to B itself") {
  Rng rng(124);
  const BCPair bc = random_pair(3, 3, rng);
  const Hyperweb a = assemble_from_bc(bc, Splitting::coordinate(3, 3));
  CHECK(a == bc.b);
  CHECK(check_membership(a, 3, {50, 2, 1}).overall());
}

TEST_CASE("assembly rejects a singular B") {
  BCPair bc;
  bc.n = 2;
  bc.r = 1;
  bc.b = Hyperweb::zero(2);
  bc.c = SkewBlockGrid(2, 1);
  CHECK_THROWS_AS(assemble_from_bc(bc, Splitting::coordinate(3, 2)), SingularMatrix);
}

TEST_CASE("block formula degenerate cases") {
  Rng rng(125);
  BlockQuintuple q = random_quintuple(5, 2, rng);
  CHECK(q.well_formed());
  BlockQuintuple zero_c = q;
  zero_c.phi = zeros_like(q.phi);
  zero_c.psi = zeros_like(q.psi);
  CHECK(cdc_block(zero_c).is_zero());
  BlockQuintuple single = q;
  single.psi = zeros_like(q.psi);
  single.lambda = zeros_like(q.lambda);
  single.mu = zeros_like(q.mu);
  CHECK(cdc_block(single) == q.phi.transpose() * q.d1 * q.phi);
  BlockQuintuple bad = q;
  bad.psi = Matrix<Fp>(3, 3);
  CHECK_FALSE(bad.well_formed());
  CHECK_THROWS_AS(cdc_block(bad), ShapeMismatch);
}

TEST_CASE("block formula equals the direct product") {
  for_cases(126, 100, [](Rng& rng, std::size_t k) {
    const std::size_t n = 2 + k % 4, r = 1 + k % (n - 1);
    const BlockQuintuple q = random_quintuple(n, r, rng);
    CHECK(cdc_block(q) == cdc_direct(q));
  });
}

TEST_CASE("scaling curve") {
  for_cases(127, 20, [](Rng& rng, std::size_t) {
    const BlockQuintuple q = satisfying_quintuple(5, 2, rng);
    REQUIRE(q.well_formed());
    CHECK(satisfies_cdc_constraint(q));
    CHECK(scaling_curve(q, Fp::one()) == q);
    const BlockQuintuple at0 = scaling_curve(q, Fp{});
    CHECK(at0.d1 == q.d1);
    CHECK(at0.phi.is_zero());
    CHECK(at0.psi.is_zero());
    CHECK(at0.lambda.is_zero());
    CHECK(at0.mu.is_zero());
    const Fp t = rng.field();
    const BlockQuintuple moved = scaling_curve(q, t);
    CHECK(satisfies_cdc_constraint(moved));
    // every term picks up t^4
    CHECK(cdc_block(moved) == t.pow(4) * cdc_block(q));
  });
}

TEST_CASE("sample_bc: vacuous and column strategies") {
  const BCSample v = sample_bc(3, 2, BCStrategy::Vacuous, 1);
  REQUIRE(v.pair);
  CHECK(v.rho->passed);
  CHECK(v.tau->passed);
  const BCSample s = sample_bc(4, 2, BCStrategy::Ansatz, 1);
  REQUIRE(s.pair);
  CHECK(satisfies_condition_ir(*s.pair));
  CHECK(has_skew_blocks(schur_product(*s.pair)));
  const BCSample full = sample_bc(3, 3, BCStrategy::Vacuous, 1);
  REQUIRE(full.pair);
  CHECK(full.pair->c.cols() == 0);
  CHECK(sample_bc(3, 2, BCStrategy::Vacuous, 9).pair->b == sample_bc(3, 2, BCStrategy::Vacuous, 9).pair->b);
  CHECK_THROWS_AS(sample_bc(4, 2, BCStrategy::Vacuous, 1), ParameterError);
  CHECK_THROWS_AS(sample_bc(3, 0, BCStrategy::Ansatz, 1), ParameterError);
  CHECK_THROWS_AS(sample_bc(3, 4, BCStrategy::Ansatz, 1), ParameterError);
}

TEST_CASE("sample_bc reports an empty outcome at (4, 1)") {
  BCSampleOptions o;
  o.max_attempts = 3;
  o.fiber_trials = 50;
  const BCSample s = sample_bc(4, 1, BCStrategy::Ansatz, 2, o);
  CHECK_FALSE(s.pair.has_value());
  CHECK(s.attempts == 3);
  CHECK(s.log.size() == 4);
  REQUIRE(s.tau);
  CHECK_FALSE(s.tau->passed);
  CHECK(s.tau->witness.has_value());
}

TEST_CASE("tau restriction") {
  const auto source = assembled(3, 1, 128);
  CHECK(check_membership(source.a, 1, {100, 2, 1}).overall());
  const Hyperweb a2 = tau_restrict_construct(source.a, source.xi, 2, 5);
  CHECK(a2.charge() == 4);
  CHECK(check_membership(a2, 2, {200, 2, 1}).overall());
  CHECK(chern_check(a2.charge()).c2 == 4);
  CHECK(property_star(a2, 3, 50, 1).found);
  // degenerate edge
  CHECK(tau_restrict_construct(source.a, source.xi, 3, 5) == source.bc.b);
  CHECK_THROWS_AS(tau_restrict_construct(source.a, source.xi, 1, 5), ParameterError);
  CHECK_THROWS_AS(tau_restrict_construct(source.a, source.xi, 4, 5), ParameterError);
  const auto small = assembled(2, 1, 129);
  CHECK(tau_restrict_construct(small.a, small.xi, 2, 1) == small.bc.b);
}

TEST_CASE("leading blocks of random splittings are nondegenerate") {
  Rng rng(130);
  const auto stats = nondegenerate_block_trial(invertible_hyperweb(2, rng), 1, 200, 3);
  CHECK(stats.trials == 200);
  CHECK(stats.degenerate == 0);
  CHECK(stats.nondegenerate_fraction() == 1.0);
  CHECK_THROWS_AS(nondegenerate_block_trial(Hyperweb::zero(2), 1, 5, 1), SingularMatrix);
  CHECK_THROWS_AS(nondegenerate_block_trial(invertible_hyperweb(2, rng), 2, 5, 1), ParameterError);
}

TEST_CASE("an engineered zero leading block is detected") {
  Rng rng(131);
  // D = [[0, L], [L, M]] with L a generic skew block: invertible, D1 = 0
  const Hyperweb lm = Hyperweb::random(1, rng), mu = Hyperweb::random(1, rng);
  Matrix<Fp> d(8, 8);
  d.set_block(0, 4, lm.matrix());
  d.set_block(4, 0, lm.matrix());
  d.set_block(4, 4, mu.matrix());
  const Hyperweb dd = Hyperweb::from_matrix(d);
  REQUIRE(dd.is_invertible());
  CHECK_FALSE(leading_block_nondegenerate(dd, Splitting::coordinate(2, 1)));
  CHECK(nondegenerate_block_trial(dd, 1, 50, 1).degenerate == 0);
}
