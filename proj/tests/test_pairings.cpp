#include <doctest.h>

#include <cmath>

#include "flatspec/differentials.hpp"
#include "flatspec/errors.hpp"
#include "flatspec/identities.hpp"
#include "flatspec/pairings.hpp"
#include "support.hpp"

using namespace flatspec;
using namespace testsupport;

namespace {

PeriodMatrix tau_i() { return period_matrix_from_tau(cplx(0, 1)); }
LatticeCharge g1(std::int64_t n, std::int64_t m) { return {ivec({n}), ivec({m})}; }
CyclePair cyc1(std::int64_t q, std::int64_t p) { return {ivec({q}), ivec({p})}; }

// Bilinear relation from the alpha and beta periods alone.
cplx wedge_from_periods(const PeriodMatrix& om, const LatticeCharge& a, const LatticeCharge& b) {
  const int h = om.genus();
  const CVector ca = primitive_coeffs(om, a).c;
  const CVector cb = primitive_coeffs(om, b).c;
  cplx sum = 0.0;
  for (int k = 0; k < h; ++k) {
    const cplx A = period_of(om, ca, CyclePair::alpha(h, k));
    const cplx B = period_of(om, ca, CyclePair::beta(h, k));
    const cplx Ap = period_of(om, cb, CyclePair::alpha(h, k));
    const cplx Bp = period_of(om, cb, CyclePair::beta(h, k));
    sum += A * std::conj(Bp) - B * std::conj(Ap);
  }
  return sum;
}

double area_oracle(const PeriodMatrix& om, const LatticeCharge& nm) {
  const RMatrix im = om.entries().imag();
  const CVector v = to_complex(nm.m) - om.entries() * to_complex(nm.n);
  const CMatrix inv = im.inverse().cast<cplx>();
  return 0.5 * kPi * kPi * (v.transpose() * inv * v.conjugate())(0, 0).real();
}

}  // namespace

TEST_CASE("hermitian product at tau = i") {
  CHECK(std::abs(herm_product(tau_i(), g1(0, 1), cyc1(0, 1)) - cplx(kPi, 0)) <= 1e-14);
  const cplx h = herm_product(tau_i(), g1(0, 1), cyc1(1, 0));
  CHECK(std::abs(h - cplx(0, kPi)) <= 1e-14);
  CHECK(h.imag() == doctest::Approx(kPi));
  CHECK(herm_product(tau_i(), g1(0, 0), cyc1(3, -2)) == cplx(0, 0));
}

TEST_CASE("real product at tau = i") {
  CHECK(real_product(tau_i(), g1(0, 1), cyc1(0, 1)) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(real_product(tau_i(), g1(1, 0), cyc1(1, 0)) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(real_product(tau_i(), g1(0, 0), cyc1(0, 0)) == 0.0);
}

TEST_CASE("monodromy factor at tau = i") {
  CHECK(monodromy_factor(tau_i(), g1(0, 1), cyc1(1, 0)) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(monodromy_factor(tau_i(), g1(0, 1), cyc1(0, 1)) == doctest::Approx(std::exp(kPi)).epsilon(1e-14));
  CHECK(monodromy_factor(tau_i(), g1(0, 0), cyc1(2, 5)) == 1.0);
  CHECK(std::exp(kPi) == doctest::Approx(23.1407).epsilon(1e-5));
}

TEST_CASE("wedge integral at tau = i") {
  CHECK(std::abs(wedge_integral(tau_i(), g1(0, 1), g1(0, 1)) - cplx(0, -2 * kPi * kPi)) <= 1e-12);
  CHECK(wedge_integral(tau_i(), g1(0, 0), g1(1, 1)) == cplx(0, 0));
  const cplx d = wedge_integral(tau_i(), g1(0, 1), g1(1, 0)) - wedge_integral(tau_i(), g1(1, 0), g1(0, 1));
  CHECK(std::abs(d - cplx(-4 * kPi * kPi, 0)) <= 1e-12);
}

TEST_CASE("area: worked values") {
  CHECK(area(tau_i(), g1(0, 1)) == doctest::Approx(kPi * kPi / 2).epsilon(1e-14));
  CHECK(area(worked_genus2(), worked_base()) == doctest::Approx(3.25 * kPi * kPi).epsilon(1e-14));
  CHECK(area(period_matrix_from_tau(cplx(0, 2)), g1(0, 1)) == doctest::Approx(kPi * kPi / 4).epsilon(1e-14));
  CHECK_THROWS_AS(area(tau_i(), g1(0, 0)), DegenerateCharge);
}

TEST_CASE("canonical duality reproduces the coefficients") {
  const auto t = canonical_duality_tensors(tau_i());
  CHECK(std::abs(duality_coeffs(tau_i(), g1(1, 0), t).d2(0) - cplx(0, kPi)) <= 1e-14);
  CHECK(std::abs(duality_coeffs(tau_i(), g1(0, 1), t).d2(0) - cplx(kPi, 0)) <= 1e-14);
  const auto z = duality_coeffs(tau_i(), g1(0, 0), t);
  CHECK(z.d1.isZero());
  CHECK(z.d2.isZero());
  DualityTensors bad = canonical_duality_tensors(worked_genus2());
  bad.F(0, 1) = 1.0;
  CHECK_THROWS_AS(duality_coeffs(worked_genus2(), worked_base(), bad), AsymmetryError);
}

TEST_CASE("monodromy factor rejects off-lattice snaps") {
  // A tolerance below rounding noise cannot be met exactly by every case; a
  // negative one never can.
  CHECK_THROWS_AS(monodromy_factor(tau_i(), g1(1, 1), cyc1(1, 1), -1.0), SnapError);
}

TEST_CASE("property: pairing identities on random inputs") {
  Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const int h = static_cast<int>(rng.integer(1, 4));
    const auto om = random_siegel_point(h, rng.next());
    const auto nm = random_charge(rng, h, 5);
    const auto qp = random_cycle(rng, h, 5);
    const auto qp_charge = as_charge(qp);
    // Imaginary part of the hermitian product is the integer pairing.
    const cplx hp = herm_product(om, nm, qp);
    CHECK(std::abs(hp.imag() - kPi * static_cast<double>(integer_defect(nm, qp))) <= 1e-10);
    // Symmetry of the real product, computed here without the library predicate.
    CHECK(std::abs(real_product(om, nm, qp) - real_product(om, qp_charge, as_cycle(nm))) <= 1e-10);
    CHECK(identities::conjugation(om, nm, qp) <= 1e-10);
    CHECK(identities::herm_im_swap(om, nm, qp) <= 1e-10);
    CHECK(identities::factorization(om, nm, qp) <= 1e-10);
    CHECK(identities::herm_vs_period(om, nm, qp) <= 1e-10);
    CHECK(identities::real_vs_herm_real_part(om, nm, qp) <= 1e-10);
    CHECK(identities::real_symmetry(om, nm, qp) <= 1e-10);
    CHECK(identities::real_vs_herm(om, nm, qp) <= 1e-10);
    CHECK(identities::norm_is_herm(om, nm) <= 1e-10);
    CHECK(identities::ab_expression(om, nm, qp) <= 1e-10);
    CHECK(identities::monodromy_quantization(om, nm, qp) <= 1e-10);
    CHECK(identities::wedge_vs_herm(om, nm, qp_charge) <= 1e-9);
    CHECK(identities::wedge_defect(om, nm, qp_charge) <= 1e-9);
    CHECK(identities::wedge_im_swap(om, nm, qp_charge) <= 1e-9);
    CHECK(identities::duality_canonical(om, nm) <= 1e-10);
    CHECK(std::abs(wedge_integral(om, nm, qp_charge) - wedge_from_periods(om, nm, qp_charge)) <= 1e-9);
    if (!nm.degenerate()) {
      CHECK(area(om, nm) == doctest::Approx(area_oracle(om, nm)).epsilon(1e-12));
      CHECK(identities::winding_area(om, nm) <= 1e-10);
      CHECK(identities::area_routes(om, nm) <= 1e-9);
    }
  }
}

TEST_CASE("property: eta period normalizations") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int h = static_cast<int>(seed % 4) + 1;
    CHECK(identities::eta_periods(random_siegel_point(h, seed)) <= 1e-10);
  }
}

TEST_CASE("literal swap relation is off by the integer defect") {
  // Im (i/2) int omega_nm ^ conj(omega_qp) carries +pi^2 (p.n - q.m); with the
  // roles of n and m exchanged in both charges the sign flips.
  const auto om = tau_i();
  CHECK(identities::wedge_im_swap_literal(om, g1(0, 1), g1(1, 0)) == doctest::Approx(2 * kPi * kPi));
  CHECK(identities::wedge_im_swap(om, g1(0, 1), g1(1, 0)) <= 1e-12);
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    const int h = static_cast<int>(rng.integer(1, 3));
    const auto o = random_siegel_point(h, rng.next());
    const auto a = random_charge(rng, h, 5);
    const auto b = random_charge(rng, h, 5);
    const double defect = std::abs(static_cast<double>(idot(b.m, a.n) - idot(b.n, a.m)));
    CHECK(std::abs(identities::wedge_im_swap_literal(o, a, b) - 2 * kPi * kPi * defect) <= 1e-9);
  }
}

TEST_CASE("property: positivity of the norm") {
  for (int h = 1; h <= 2; ++h) {
    const auto om = random_siegel_point(h, 40 + static_cast<std::uint64_t>(h));
    const int dim = 2 * h;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(dim), -5);
    while (true) {
      LatticeCharge c = LatticeCharge::zero(h);
      for (int k = 0; k < h; ++k) {
        c.n(k) = digits[static_cast<std::size_t>(k)];
        c.m(k) = digits[static_cast<std::size_t>(h + k)];
      }
      const double norm = real_product(om, c, as_cycle(c));
      if (c.degenerate()) {
        CHECK(norm == 0.0);
      } else {
        CHECK(norm > 0.0);
      }
      int k = 0;
      while (k < dim && ++digits[static_cast<std::size_t>(k)] > 5) digits[static_cast<std::size_t>(k++)] = -5;
      if (k == dim) break;
    }
  }
}
