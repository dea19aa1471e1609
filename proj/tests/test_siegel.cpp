#include <doctest.h>

#include "flatspec/errors.hpp"
#include "flatspec/siegel.hpp"
#include "support.hpp"

using namespace flatspec;
using namespace testsupport;

TEST_CASE("validate accepts the unit modulus") {
  CMatrix raw(1, 1);
  raw << cplx(0, 1);
  const auto om = validate_period_matrix(raw);
  CHECK(om.genus() == 1);
  CHECK(om.imag_part()(0, 0) == 1.0);
  CHECK(om.real_part()(0, 0) == 0.0);
}

TEST_CASE("validate accepts the worked genus-2 matrix") {
  const auto om = worked_genus2();
  CHECK(om.imag_determinant() == doctest::Approx(2.25).epsilon(1e-14));
  const RMatrix prod = om.imag_part() * om.imag_inverse();
  CHECK((prod - RMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("validate rejects an indefinite imaginary part") {
  CMatrix raw(2, 2);
  raw << cplx(0, 1), cplx(0, 2), cplx(0, 2), cplx(0, 1);
  CHECK_THROWS_AS(validate_period_matrix(raw), NotPositiveDefinite);
}

TEST_CASE("validate rejects asymmetry and bad shapes") {
  CMatrix raw(2, 2);
  raw << cplx(0, 1), cplx(0.1, 0), cplx(0, 0), cplx(0, 1);
  CHECK_THROWS_AS(validate_period_matrix(raw), AsymmetryError);
  CHECK_THROWS_AS(validate_period_matrix(CMatrix(2, 3)), std::invalid_argument);
  CMatrix zero_im(1, 1);
  zero_im << cplx(1, 0);
  CHECK_THROWS_AS(validate_period_matrix(zero_im), NotPositiveDefinite);
}

TEST_CASE("stored matrix is the exact symmetrization") {
  CMatrix raw(2, 2);
  raw << cplx(0, 1), cplx(0.25, 0.5 + 4e-11), cplx(0.25, 0.5), cplx(0, 2);
  const auto om = validate_period_matrix(raw);
  CHECK(om(0, 1) == om(1, 0));
  CHECK(om(0, 1).imag() == doctest::Approx(0.5 + 2e-11).epsilon(1e-15));
}

TEST_CASE("random siegel points are valid and deterministic") {
  const auto t = random_siegel_point(1, 0);
  CHECK(t(0, 0).imag() >= 1.0);
  const auto a = random_siegel_point(3, 7);
  const auto b = random_siegel_point(3, 7);
  CHECK(a.entries() == b.entries());
  CHECK_NOTHROW(validate_period_matrix(random_siegel_point(2, 1).entries()));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (int h = 1; h <= 4; ++h) {
      const auto om = random_siegel_point(h, seed);
      CHECK(om.entries() == om.entries().transpose());
      CHECK(om.imag_eigenvalues().minCoeff() > 0.0);
    }
  }
}

TEST_CASE("modular action on tau: worked values") {
  const cplx i(0, 1);
  CHECK(std::abs(modular_transform_tau(ModularMatrix::identity(), i) - i) == 0.0);
  CHECK(std::abs(modular_transform_tau(ModularMatrix::make(0, -1, 1, 0), i) - i) <= 1e-15);
  CHECK(std::abs(modular_transform_tau(ModularMatrix::make(1, 1, 0, 1), i) - cplx(1, 1)) <= 1e-15);
  CHECK_THROWS_AS(ModularMatrix::make(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(modular_transform_tau(ModularMatrix::identity(), cplx(0, -1)), DomainError);
}

TEST_CASE("modular action on charges: worked values") {
  const LatticeCharge c{ivec({2}), ivec({3})};
  CHECK(modular_transform_charge(ModularMatrix::identity(), c) == c);
  CHECK(modular_transform_charge(ModularMatrix::make(1, 1, 0, 1), {ivec({1}), ivec({0})}) ==
        LatticeCharge{ivec({1}), ivec({1})});
  CHECK(modular_transform_charge(ModularMatrix::make(0, -1, 1, 0), {ivec({0}), ivec({1})}) ==
        LatticeCharge{ivec({1}), ivec({0})});
}

TEST_CASE("property: upper half plane is preserved") {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const auto g = random_sl2(rng, 10);
    const cplx tau = random_upper(rng, 0.05);
    const cplx img = modular_transform_tau(g, tau);
    const double expect = tau.imag() / std::norm(static_cast<double>(g.c) * tau + static_cast<double>(g.d));
    REQUIRE(img.imag() > 0.0);
    CHECK(img.imag() == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("property: group law") {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    const auto g1 = random_sl2(rng, 4);
    const auto g2 = random_sl2(rng, 4);
    const cplx tau = random_upper(rng, 0.5);
    const cplx lhs = modular_transform_tau(g1, modular_transform_tau(g2, tau));
    const cplx rhs = modular_transform_tau(g1 * g2, tau);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}
