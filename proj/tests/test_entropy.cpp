#include <catch_amalgamated.hpp>

#include <cmath>

#include "infocons/entropy.hpp"
#include "test_util.hpp"

using namespace infocons;
using namespace infocons::testing;
using Catch::Matchers::WithinAbs;

namespace {
const PureState zero = PureState::basis(2, 0);
const PureState one = PureState::basis(2, 1);
const PureState plus = pure_state({1.0, 1.0});

Ensemble pair(const PureState& a, const PureState& b) {
  const std::array<PureState, 2> s{a, b};
  return Ensemble::uniform(s);
}
}  // namespace

TEST_CASE("von_neumann_entropy reference values") {
  CHECK(von_neumann_entropy(DensityOperator::from_pure(random_state({5}))).value() < 1e-12);
  CHECK_THAT(von_neumann_entropy(DensityOperator::maximally_mixed({2})).value(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(von_neumann_entropy(DensityOperator::maximally_mixed({2, 3})).value(),
             WithinAbs(std::log2(6.0), 1e-14));

  // Oracle: eigenvalues (1 +- 1/sqrt2)/2, then H.
  const long double expected = binary_entropy_oracle((1.0L + 1.0L / std::sqrt(2.0L)) / 2.0L);
  const auto s = von_neumann_entropy(average_state(pair(zero, plus)));
  CHECK_THAT(s.value(), WithinAbs(static_cast<double>(expected), 1e-12));
  CHECK_THAT(s.value(), WithinAbs(0.600876, 1e-6));
}

TEST_CASE("binary_entropy") {
  CHECK(binary_entropy(0.5).value() == 1.0);
  CHECK(binary_entropy(0.0).value() == 0.0);
  CHECK(binary_entropy(1.0).value() == 0.0);
  CHECK_THAT(binary_entropy(0.75).value(), WithinAbs(static_cast<double>(binary_entropy_oracle(0.75L)), 1e-15));
  CHECK_THAT(binary_entropy(0.75).value(), WithinAbs(0.811278, 1e-6));
  CHECK(binary_entropy(-1e-13).value() == 0.0);
  CHECK_THROWS_AS(binary_entropy(-1e-6), ValidationError);
  CHECK_THROWS_AS(binary_entropy(1.1), ValidationError);
  CHECK_THROWS_AS(binary_entropy(std::nan("")), ValidationError);
  for (double p = 0.0; p <= 0.5; p += 0.05) CHECK_THAT(binary_entropy(p).value(), WithinAbs(binary_entropy(1 - p).value(), 1e-15));
}

TEST_CASE("Bits clamps numerical negatives only") {
  CHECK(Bits(-5e-13).value() == 0.0);
  CHECK_THROWS_AS(Bits(-1e-9), ValidationError);
}

TEST_CASE("ensemble_information") {
  CHECK_THAT(ensemble_information(pair(zero, one)).value(), WithinAbs(1.0, 1e-15));
  CHECK(ensemble_information(Ensemble({{1.0, DensityOperator::from_pure(plus)}})).value() < 1e-12);
  CHECK_THAT(ensemble_information(pair(zero, plus)).value(), WithinAbs(0.600876, 1e-6));
}

TEST_CASE("two_pure_state_information agrees with explicit state pairs") {
  CHECK(two_pure_state_information(0.0).value() == 1.0);
  CHECK(two_pure_state_information(1.0).value() == 0.0);
  CHECK_THAT(two_pure_state_information(0.5).value(), WithinAbs(0.811278, 1e-6));
  CHECK_THROWS_AS(two_pure_state_information(1.5), ValidationError);

  double previous = 2.0;
  for (int k = 0; k <= 10; ++k) {
    const double c = k / 10.0;
    const auto psi2 = pure_state({c, std::sqrt(1.0 - c * c)});
    const double explicit_value = ensemble_information(pair(zero, psi2)).value();
    const double closed_form = two_pure_state_information(c).value();
    CHECK_THAT(closed_form, WithinAbs(explicit_value, 1e-10));
    CHECK(closed_form < previous);
    previous = closed_form;
  }
}

TEST_CASE("entropy properties on random inputs") {
  SECTION("unitary invariance") {
    for (int trial = 0; trial < 30; ++trial) {
      const Dims dims = trial % 2 ? Dims{4, 4} : Dims{2, 3};
      const auto rho = random_density(dims);
      const auto u = random_unitary(dims);
      const DensityOperator rotated(u * rho.op() * u.adjoint());
      CHECK_THAT(von_neumann_entropy(rotated).value(), WithinAbs(von_neumann_entropy(rho).value(), 1e-10));
    }
  }
  SECTION("concavity") {
    for (int trial = 0; trial < 30; ++trial) {
      const auto e = random_ensemble({3}, 3);
      double mixed = 0.0;
      for (const auto& m : e.members()) mixed += m.probability * von_neumann_entropy(m.state).value();
      CHECK(ensemble_information(e).value() >= mixed - 1e-10);
    }
  }
  SECTION("additivity on products") {
    for (int trial = 0; trial < 30; ++trial) {
      const auto rho = random_density({2});
      const auto sigma = random_density({3});
      const DensityOperator joint(tensor_product(rho.op(), sigma.op()));
      CHECK_THAT(von_neumann_entropy(joint).value(),
                 WithinAbs(von_neumann_entropy(rho).value() + von_neumann_entropy(sigma).value(), 1e-10));
    }
  }
}
