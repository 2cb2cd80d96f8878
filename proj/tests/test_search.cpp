#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "infocons/audit.hpp"
#include "infocons/search.hpp"
#include "test_util.hpp"

using namespace infocons;
using namespace infocons::testing;
using Catch::Matchers::WithinAbs;

namespace {
const PureState zero = PureState::basis(2, 0);
const PureState one = PureState::basis(2, 1);
const PureState plus = pure_state({1.0, 1.0});

PureState with_overlap(double c) { return pure_state({c, std::sqrt(1.0 - c * c)}); }

// Optimal average infidelity for carrying two states of overlap c onto two
// targets of overlap c_out with any isometry.
double two_state_floor(double c, double c_out) {
  const double half = (std::acos(c) - std::acos(c_out)) / 2.0;
  return std::sin(half) * std::sin(half);
}

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}
}  // namespace

TEST_CASE("materialize") {
  const auto id = materialize(UnitaryParameterization::zero(3));
  CHECK(max_abs_diff(id, ComplexOperator::identity({3})) < 1e-15);

  // Closed form: exp(i pi X/2) = i X.
  auto p = UnitaryParameterization::zero(2);
  p.params[symmetric_generator_index(2, 0, 1)] = std::numbers::pi;
  const auto u = materialize(p);
  Matrix ix(2, 2);
  ix << 0, Complex(0, 1), Complex(0, 1), 0;
  CHECK(max_abs(u.matrix() - ix) < 1e-14);

  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    UnitaryParameterization q{8, std::vector<double>(64)};
    for (auto& x : q.params) x = dist(rng());
    const auto v = materialize(q);
    CHECK(max_abs(v.matrix().adjoint() * v.matrix() - Matrix::Identity(8, 8)) < 1e-10);
  }
  CHECK_THROWS_AS(materialize(UnitaryParameterization{2, {0.0, 0.0}}), DimensionError);
}

TEST_CASE("generator basis spans the Hermitian matrices") {
  // D^2 coefficients map one-to-one onto Hermitian D x D matrices.
  const std::size_t d = 3;
  Eigen::MatrixXd basis(2 * d * d, d * d);
  for (std::size_t k = 0; k < d * d; ++k) {
    auto p = UnitaryParameterization::zero(d);
    p.params[k] = 1.0;
    const Matrix h = hermitian_generator(p);
    CHECK(max_abs(h - h.adjoint()) == 0.0);
    for (std::size_t i = 0; i < d * d; ++i) {
      basis(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = h(i / d, i % d).real();
      basis(static_cast<Eigen::Index>(d * d + i), static_cast<Eigen::Index>(k)) = h(i / d, i % d).imag();
    }
  }
  CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(basis).rank() == static_cast<Eigen::Index>(d * d));
}

TEST_CASE("scenario_error") {
  const auto id_s = identity_scenario(zero, plus);
  CHECK(scenario_error(ComplexOperator::identity({2}), id_s) < 1e-15);

  // Explicit controlled flip copies a classical bit.
  const auto copy = classical_copy_scenario(zero, one);
  CHECK(scenario_error(ComplexOperator({4}, cnot()), copy) < 1e-12);

  // Oracle: direct inner products of the explicit vectors with U = I.
  const auto clone = cloning_scenario(zero, plus, zero);
  double expected = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    expected += 1.0 - std::norm(clone.targets()[i].amplitudes().dot(clone.inputs()[i].amplitudes()));
  expected /= 2.0;
  CHECK_THAT(scenario_error(ComplexOperator::identity({2, 2, 1}), clone), WithinAbs(expected, 1e-15));
  CHECK_THAT(expected, WithinAbs(0.25, 1e-15));

  CHECK_THROWS_AS(scenario_error(ComplexOperator::identity({2}), clone), DimensionError);
}

TEST_CASE("the generator parameterization reaches the copy circuit") {
  auto p = UnitaryParameterization::zero(4);
  p.params[symmetric_generator_index(4, 2, 3)] = std::numbers::pi;
  CHECK(scenario_error(materialize(p), classical_copy_scenario(zero, one)) < 1e-12);
}

TEST_CASE("minimize_error finds the classical copy") {
  const auto r = minimize_error(classical_copy_scenario(zero, one), 10, 2000, 1);
  CHECK(r.best_error < 1e-6);
  CHECK(r.restarts_used == 10);
  CHECK(r.iterations_per_restart == 2000);
  CHECK(r.best_params.size() == 16);
}

TEST_CASE("minimize_error is reproducible from the seed") {
  const auto s = cloning_scenario(zero, plus, zero);
  const auto a = minimize_error(s, 4, 500, 42);
  const auto b = minimize_error(s, 4, 500, 42);
  CHECK(a.best_error == b.best_error);
  CHECK(a.best_params == b.best_params);
  const auto c = minimize_error(s, 4, 500, 43);
  CHECK(c.best_params != a.best_params);
}

TEST_CASE("minimize_error rejects empty budgets and mismatched spaces") {
  CHECK_THROWS_AS(minimize_error(identity_scenario(zero, plus), 0, 10, 1), ValidationError);
  const auto wide = generalized_deleting_scenario(zero, plus, PureState::basis(3, 0), pure_state({1.0, 0.1, 0.0}));
  CHECK_THROWS_AS(minimize_error(wide, 1, 10, 1), DimensionError);
}

TEST_CASE("empirical error floors match the two-state bound") {
  // Regression data, 20 restarts x 5000 iterations, seed 1.
  // c      floor (cloning and deleting)
  // 0.2    0.006494127
  // 0.4    0.015646156
  // 0.6    0.018819079
  // 0.8    0.013487527
  const double recorded[] = {0.006494127, 0.015646156, 0.018819079, 0.013487527};
  int i = 0;
  for (double c : {0.2, 0.4, 0.6, 0.8}) {
    const auto psi2 = with_overlap(c);
    const auto clone = minimize_error(cloning_scenario(zero, psi2, zero), 20, 5000, 1);
    const auto del = minimize_error(deleting_scenario(zero, psi2, zero), 20, 5000, 1);
    CHECK_THAT(clone.best_error, WithinAbs(two_state_floor(c, c * c), 1e-7));
    CHECK_THAT(del.best_error, WithinAbs(two_state_floor(c, c * c), 1e-7));
    CHECK_THAT(clone.best_error, WithinAbs(recorded[i], 1e-8));
    ++i;
  }
}
