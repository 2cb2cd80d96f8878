#include <catch_amalgamated.hpp>

#include "infocons/state.hpp"
#include "test_util.hpp"

using namespace infocons;
using infocons::testing::random_ensemble;
using infocons::testing::random_state;
using Catch::Matchers::WithinAbs;

TEST_CASE("pure_state normalizes and keeps the phase") {
  const auto zero = pure_state({1.0, 0.0});
  CHECK(zero.amplitudes()(0) == Complex(1.0));
  CHECK(zero.amplitudes()(1) == Complex(0.0));

  const auto plus = pure_state({1.0, 1.0});
  CHECK_THAT(plus.amplitudes()(0).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));

  // Oracle: divide by the Euclidean norm 5.
  const auto s = pure_state({Complex(3.0, 0.0), Complex(0.0, 4.0)});
  CHECK(std::abs(s.amplitudes()(0) - Complex(0.6, 0.0)) < 1e-15);
  CHECK(std::abs(s.amplitudes()(1) - Complex(0.0, 0.8)) < 1e-15);
}

TEST_CASE("pure_state rejects zero vectors and length mismatches") {
  CHECK_THROWS_AS(pure_state({0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(pure_state({1.0, 0.0, 0.0}, {2, 2}), DimensionError);
}

TEST_CASE("overlap") {
  const auto zero = PureState::basis(2, 0), one = PureState::basis(2, 1);
  CHECK(overlap(zero, one) == Complex(0.0));
  CHECK_THAT(std::abs(overlap(zero, pure_state({1.0, 1.0}))), WithinAbs(0.70711, 1e-5));
  CHECK_THROWS_AS(overlap(zero, PureState::basis(3, 0)), DimensionError);

  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_state({4}), b = random_state({4});
    CHECK(std::abs(overlap(a, a) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(overlap(a, b) - std::conj(overlap(b, a))) < 1e-14);
    CHECK(std::abs(overlap(a, b)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("DensityOperator validation") {
  CHECK_NOTHROW(DensityOperator::maximally_mixed({2, 2}));
  CHECK_THROWS_AS(DensityOperator(ComplexOperator::identity({2})), ValidationError);  // trace 2
  Matrix neg(2, 2);
  neg << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityOperator(ComplexOperator({2}, neg)), ValidationError);
  Matrix nonherm(2, 2);
  nonherm << 0.5, 0.3, 0.0, 0.5;
  CHECK_THROWS_AS(DensityOperator(ComplexOperator({2}, nonherm)), ValidationError);
}

TEST_CASE("Ensemble validation") {
  const auto rho = DensityOperator::from_pure(PureState::basis(2, 0));
  CHECK_THROWS_AS(Ensemble({{0.5, rho}, {0.4, rho}}), ValidationError);
  CHECK_THROWS_AS(Ensemble({{1.5, rho}, {-0.5, rho}}), ValidationError);
  CHECK_THROWS_AS(Ensemble({{0.5, rho}, {0.5, DensityOperator::maximally_mixed({3})}}), DimensionError);
  CHECK_THROWS_AS(Ensemble(std::vector<EnsembleMember>{}), ValidationError);
}

TEST_CASE("average_state") {
  const auto rho = DensityOperator::from_pure(pure_state({0.6, 0.8}));
  CHECK(max_abs_diff(average_state(Ensemble({{1.0, rho}})).op(), rho.op()) == 0.0);

  const auto z = DensityOperator::from_pure(PureState::basis(2, 0));
  const auto o = DensityOperator::from_pure(PureState::basis(2, 1));
  CHECK(max_abs_diff(average_state(Ensemble({{0.5, z}, {0.5, o}})).op(), DensityOperator::maximally_mixed({2}).op()) <
        1e-15);

  // Oracle: entrywise average of [[1,0],[0,0]] and [[1/2,1/2],[1/2,1/2]].
  const auto p = DensityOperator::from_pure(pure_state({1.0, 1.0}));
  const auto avg = average_state(Ensemble({{0.5, z}, {0.5, p}})).op();
  CHECK_THAT(avg(0, 0).real(), WithinAbs(0.75, 1e-15));
  CHECK_THAT(avg(0, 1).real(), WithinAbs(0.25, 1e-15));
  CHECK_THAT(avg(1, 0).real(), WithinAbs(0.25, 1e-15));
  CHECK_THAT(avg(1, 1).real(), WithinAbs(0.25, 1e-15));
}

TEST_CASE("average_state of random ensembles is always a density operator") {
  for (int trial = 0; trial < 50; ++trial) CHECK_NOTHROW(average_state(random_ensemble({2, 3}, 4)));
}
