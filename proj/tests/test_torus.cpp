#include <doctest.h>

#include <cmath>

#include "flatspec/errors.hpp"
#include "flatspec/pairings.hpp"
#include "flatspec/torus.hpp"
#include "support.hpp"

using namespace flatspec;
using namespace testsupport;

namespace {

// Pentagonal-number series: eta = q^{1/24} sum_k (-1)^k q^{k(3k-1)/2}.
cplx eta_pentagonal(cplx tau) {
  cplx sum = 0.0;
  for (int k = -40; k <= 40; ++k) {
    const double e = 0.5 * k * (3.0 * k - 1.0);
    sum += (k % 2 == 0 ? 1.0 : -1.0) * std::exp(2.0 * kPi * kI * tau * e);
  }
  return std::exp(2.0 * kPi * kI * tau / 24.0) * sum;
}

double lambda_oracle(cplx tau, std::int64_t n, std::int64_t m) {
  return 2.0 * kPi * kPi * std::norm(static_cast<double>(m) - static_cast<double>(n) * tau) /
         (tau.imag() * tau.imag());
}

}  // namespace

TEST_CASE("eigenvalues at tau = i") {
  const cplx i(0, 1);
  CHECK(torus::eigenvalue(i, 1, 0).lambda == doctest::Approx(2 * kPi * kPi).epsilon(1e-14));
  CHECK(torus::eigenvalue(i, 1, 1).lambda == doctest::Approx(4 * kPi * kPi).epsilon(1e-14));
  CHECK(torus::eigenvalue(i, 0, 0).lambda == 0.0);
  CHECK_THROWS_AS(torus::eigenvalue(cplx(1, 0), 1, 0), DomainError);
}

TEST_CASE("spectrum at tau = i matches the square lattice") {
  for (const auto& e : torus::spectrum_table(cplx(0, 1), 2)) {
    if (e.n * e.n + e.m * e.m > 8) continue;
    CHECK(std::abs(e.lambda - 2 * kPi * kPi * static_cast<double>(e.n * e.n + e.m * e.m)) <= 1e-12);
  }
}

TEST_CASE("spectrum table ordering") {
  const auto t = torus::spectrum_table(cplx(0.3, 1.1), 3);
  CHECK(t.size() == 49);
  for (std::size_t k = 1; k < t.size(); ++k) {
    const auto key = [](const torus::SpectrumEntry& e) {
      return std::tuple(e.n * e.n + e.m * e.m, e.n, e.m);
    };
    CHECK(key(t[k - 1]) < key(t[k]));
  }
}

TEST_CASE("mu covariance: worked values") {
  const cplx i(0, 1);
  CHECK(torus::mu_covariance_residual(i, ModularMatrix::identity(), 1, 1) == 0.0);
  CHECK(torus::mu_covariance_residual(i, ModularMatrix::T(), 1, 1) <= 1e-10);
  CHECK(torus::mu_covariance_residual(cplx(0, 2), ModularMatrix::S(), 0, 1) <= 1e-10);
  // Shift relation checked from the oracle directly.
  CHECK(lambda_oracle(i + 1.0, 1, 1) == doctest::Approx(lambda_oracle(i, 1, 0)).epsilon(1e-14));
  const cplx t2(0, 2);
  CHECK(lambda_oracle(-1.0 / t2, 0, 1) == doctest::Approx(std::norm(t2) * lambda_oracle(t2, -1, 0)).epsilon(1e-14));
}

TEST_CASE("sampled eigenfunctions") {
  const auto one = torus::sample_eigenfunction(cplx(0.2, 1.3), 0, 0, 8);
  for (const auto& v : one.samples()) CHECK(v == cplx(1, 0));
  const auto f = torus::sample_eigenfunction(cplx(0, 1), 0, 1, 8);
  CHECK(std::abs(f(2, 0) - cplx(1, 0)) <= 1e-15);
  CHECK(std::abs(f(0, 2) - cplx(0, 1)) <= 1e-15);
  CHECK_THROWS_AS(torus::sample_eigenfunction(cplx(0, 1), 0, 1, 4), std::invalid_argument);
  const auto a = torus::sample_eigenfunction(cplx(0, 1), 0, 1, 64);
  const auto b = torus::sample_eigenfunction(cplx(0, 1), 1, 0, 64);
  CHECK(std::abs(torus::grid_inner_product(a, b)) < 1e-10);
  CHECK(std::abs(torus::grid_inner_product(a, a) - 1.0) < 1e-12);
}

TEST_CASE("property: eigenfunctions are single valued and orthonormal") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    const cplx tau = random_upper(rng);
    const auto n = rng.integer(-3, 3), m = rng.integer(-3, 3);
    CHECK(torus::wraparound_mismatch(tau, n, m, 16) <= 1e-12);
    const auto n2 = rng.integer(-3, 3), m2 = rng.integer(-3, 3);
    const cplx ip = torus::grid_inner_product(torus::sample_eigenfunction(tau, n, m, 16),
                                              torus::sample_eigenfunction(tau, n2, m2, 16));
    CHECK(std::abs(ip - (n == n2 && m == m2 ? 1.0 : 0.0)) <= 1e-10);
  }
}

TEST_CASE("finite-difference residuals") {
  const auto a = torus::fd_eigen_residual(cplx(0, 1), 0, 1, 64);
  CHECK(a.lambda_analytic == doctest::Approx(2 * kPi * kPi));
  CHECK(a.relative_residual < 5e-3);
  const auto b = torus::fd_eigen_residual(cplx(0, 1), 1, 1, 128);
  CHECK(b.lambda_analytic == doctest::Approx(4 * kPi * kPi));
  CHECK(b.relative_residual < 5e-3);
  const auto z = torus::fd_eigen_residual(cplx(0.5, 1), 0, 0, 32);
  CHECK(z.lambda_analytic == 0.0);
  CHECK(z.relative_residual == 0.0);
  CHECK_THROWS_AS(torus::fd_eigen_residual(cplx(0, 1), 1, 0, 8), std::invalid_argument);
}

TEST_CASE("finite-difference residual is independent of the thread count") {
  const cplx tau(0.5, 1.0);
  const auto one = torus::fd_eigen_residual(tau, 1, -1, 64, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto r = torus::fd_eigen_residual(tau, 1, -1, 64, threads);
    CHECK(r.relative_residual == one.relative_residual);
  }
}

TEST_CASE("dedekind eta: worked values") {
  const double closed = std::tgamma(0.25) / (2.0 * std::pow(kPi, 0.75));
  CHECK(std::abs(torus::dedekind_eta(cplx(0, 1))) == doctest::Approx(closed).epsilon(1e-13));
  CHECK(closed == doctest::Approx(0.768225).epsilon(1e-6));
  CHECK(std::abs(std::abs(torus::dedekind_eta(cplx(0, 1))) - std::abs(torus::dedekind_eta(cplx(1, 1)))) <= 1e-12);
  const cplx big(0.1, 6.0);
  CHECK(std::abs(torus::dedekind_eta(big)) == doctest::Approx(std::exp(-kPi * 6.0 / 12.0)).epsilon(1e-6));
  CHECK(torus::log_abs_dedekind_eta(cplx(0, 1)) == doctest::Approx(std::log(closed)).epsilon(1e-13));
}

TEST_CASE("property: eta agrees with the pentagonal series") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const cplx tau = random_upper(rng);
    const cplx ref = eta_pentagonal(tau);
    CHECK(std::abs(torus::dedekind_eta(tau) - ref) <= 1e-12 * std::abs(ref));
    CHECK(torus::log_abs_dedekind_eta(tau) == doctest::Approx(std::log(std::abs(ref))).epsilon(1e-12));
  }
}

TEST_CASE("property: eigenvalue is the scaled norm") {
  Rng rng(43);
  for (int t = 0; t < 1000; ++t) {
    const cplx tau = random_upper(rng, 0.1);
    const auto n = rng.integer(-5, 5), m = rng.integer(-5, 5);
    const auto e = torus::eigenvalue(tau, n, m);
    const auto om = period_matrix_from_tau(tau);
    const LatticeCharge c{ivec({n}), ivec({m})};
    const double via_norm = 2.0 * kPi * real_product(om, c, as_cycle(c)) / tau.imag();
    CHECK(std::abs(e.lambda - via_norm) <= 1e-10 * std::max(1.0, e.lambda));
    CHECK(std::abs(e.lambda - lambda_oracle(tau, n, m)) <= 1e-10 * std::max(1.0, e.lambda));
  }
}

TEST_CASE("property: mu covariance and eta invariance") {
  Rng rng(44);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_sl2(rng, 10);
    const cplx tau = random_upper(rng);
    const auto n = rng.integer(-5, 5), m = rng.integer(-5, 5);
    CHECK(torus::mu_covariance_residual(tau, g, n, m) <= 1e-10);
    const cplx gt = modular_transform_tau(g, tau);
    const double lhs = std::log(tau.imag()) + 4.0 * torus::log_abs_dedekind_eta(tau);
    const double rhs = std::log(gt.imag()) + 4.0 * torus::log_abs_dedekind_eta(gt);
    CHECK(std::abs(std::expm1(rhs - lhs)) <= 1e-8);
  }
}

TEST_CASE("property: orbit of a charge reproduces mu") {
  const cplx tau(0.2, 1.4);
  Rng rng(45);
  const auto e = torus::eigenvalue(tau, 2, -1);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_sl2(rng, 6);
    const auto gc = modular_transform_charge(g, {ivec({2}), ivec({-1})});
    const auto f = torus::eigenvalue(modular_transform_tau(g, tau), gc.n(0), gc.m(0));
    CHECK(f.mu == doctest::Approx(e.mu).epsilon(1e-10));
  }
}
