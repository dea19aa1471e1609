#include "flatspec/identities.hpp"

#include <algorithm>
#include <cmath>

#include "flatspec/differentials.hpp"
#include "flatspec/pairings.hpp"

namespace flatspec::identities {

namespace {

LatticeCharge swapped(const LatticeCharge& c) { return {c.m, c.n}; }

double pi_int(std::int64_t k) { return kPi * static_cast<double>(k); }

}  // namespace

double conjugation(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  const cplx h = herm_product(omega, nm, qp);
  const cplx mirrored = herm_product(omega, {-qp.q, qp.p}, CyclePair{-nm.n, nm.m});
  const cplx shifted = h - 2.0 * kI * pi_int(integer_defect(nm, qp));
  return std::max(std::abs(std::conj(h) - mirrored), std::abs(std::conj(h) - shifted));
}

double herm_im_swap(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  const cplx lhs = herm_product(omega, nm, qp);
  const cplx rhs = herm_product(omega, swapped(nm), CyclePair{qp.p, qp.q});
  return std::abs(lhs.imag() - rhs.imag());
}

double factorization(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  const int h = omega.genus();
  const IVector zero = IVector::Zero(h);
  cplx sum = 0.0;
  for (int j = 0; j < h; ++j) {
    const IVector e = unit_ivector(h, j);
    sum += herm_product(omega, nm, CyclePair{e, zero}) *
               herm_product(omega, LatticeCharge{zero, e}, qp) +
           herm_product(omega, nm, CyclePair{zero, e}) *
               herm_product(omega, LatticeCharge{e, zero}, qp);
  }
  sum /= 2.0 * kPi * kI;
  return std::abs(herm_product(omega, nm, qp) - sum);
}

double herm_vs_period(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  return std::abs(herm_product(omega, nm, qp) -
                  period_of(omega, primitive_coeffs(omega, nm).c, qp));
}

double real_vs_herm_real_part(const PeriodMatrix& omega, const LatticeCharge& nm,
                              const CyclePair& qp) {
  const double r = real_product(omega, nm, qp);
  const double a = herm_product(omega, nm, CyclePair{-qp.q, qp.p}).real();
  const double b = -herm_product(omega, nm, CyclePair{qp.q, -qp.p}).real();
  return std::max(std::abs(r - a), std::abs(r - b));
}

double real_symmetry(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  return std::abs(real_product(omega, nm, qp) - real_product(omega, as_charge(qp), as_cycle(nm)));
}

double real_vs_herm(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  const cplx rhs = herm_product(omega, nm, CyclePair{-qp.q, qp.p}) -
                   kI * pi_int(qp.p.dot(nm.n) - qp.q.dot(nm.m));
  return std::abs(cplx(real_product(omega, nm, qp)) - rhs);
}

double norm_is_herm(const PeriodMatrix& omega, const LatticeCharge& nm) {
  return std::abs(cplx(real_product(omega, nm, as_cycle(nm))) -
                  herm_product(omega, nm, CyclePair{-nm.n, nm.m}));
}

double ab_expression(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  const DifferentialCoeffs x = primitive_coeffs(omega, nm);
  const DifferentialCoeffs y = primitive_coeffs(omega, as_charge(qp));
  const RMatrix& im = omega.imag_part();
  const double rhs = (x.a.dot(im * y.a) + y.b.dot(im * x.b)) / kPi;
  return std::abs(real_product(omega, nm, qp) - rhs);
}

double alpha_periods(const PeriodMatrix& omega, const LatticeCharge& nm) {
  const int h = omega.genus();
  const DifferentialCoeffs x = primitive_coeffs(omega, nm);
  const IVector zero = IVector::Zero(h);
  double worst = 0.0;
  for (int k = 0; k < h; ++k) {
    const CyclePair alpha{zero, unit_ivector(h, k)};
    worst = std::max(worst, std::abs(herm_product(omega, nm, alpha) - x.c(k)));
    worst = std::max(worst, std::abs(real_product(omega, nm, alpha) - x.a(k)));
  }
  return worst;
}

double d_matrix_contraction(const PeriodMatrix& omega, const LatticeCharge& nm) {
  const CVector direct = primitive_coeffs(omega, nm).c;
  const CVector via_d = coeffs_from_d_matrix(omega, d_matrix(omega, nm));
  return (direct - via_d).cwiseAbs().maxCoeff();
}

double monodromy_quantization(const PeriodMatrix& omega, const LatticeCharge& nm,
                              const CyclePair& qp) {
  const double im = period_of(omega, primitive_coeffs(omega, nm).c, qp).imag();
  return std::abs(im - kPi * std::nearbyint(im / kPi));
}

double wedge_vs_herm(const PeriodMatrix& omega, const LatticeCharge& nm,
                     const LatticeCharge& qp) {
  const cplx lhs = 0.5 * kI * wedge_integral(omega, nm, qp);
  const CyclePair cyc{-qp.n, qp.m};
  const cplx via_herm = kPi * herm_product(omega, nm, cyc);
  const cplx via_real = kPi * real_product(omega, nm, as_cycle(qp)) +
                        kI * kPi * pi_int(qp.m.dot(nm.n) - qp.n.dot(nm.m));
  return std::max(std::abs(lhs - via_herm), std::abs(lhs - via_real));
}

double wedge_defect(const PeriodMatrix& omega, const LatticeCharge& nm, const LatticeCharge& qp) {
  const cplx diff = wedge_integral(omega, nm, qp) - wedge_integral(omega, qp, nm);
  const double expected = 4.0 * kPi * pi_int(qp.m.dot(nm.n) - qp.n.dot(nm.m));
  return std::abs(diff - expected);
}

double wedge_im_swap_literal(const PeriodMatrix& omega, const LatticeCharge& nm,
                             const LatticeCharge& qp) {
  const double lhs = (0.5 * kI * wedge_integral(omega, nm, qp)).imag();
  const double rhs = (0.5 * kI * wedge_integral(omega, swapped(nm), swapped(qp))).imag();
  return std::abs(lhs - rhs);
}

double wedge_im_swap(const PeriodMatrix& omega, const LatticeCharge& nm,
                     const LatticeCharge& qp) {
  const double lhs = (0.5 * kI * wedge_integral(omega, nm, qp)).imag();
  const double rhs = (0.5 * kI * wedge_integral(omega, swapped(nm), -swapped(qp))).imag();
  return std::abs(lhs - rhs);
}

double eta_decomposition(const PeriodMatrix& omega, const LatticeCharge& nm) {
  const CVector via_eta = coeffs_from_eta(eta_bases(omega), nm);
  return (via_eta - primitive_coeffs(omega, nm).c).cwiseAbs().maxCoeff();
}

double eta_periods(const PeriodMatrix& omega) {
  const int h = omega.genus();
  const EtaBasis eta = eta_bases(omega);
  double worst = 0.0;
  for (int j = 0; j < h; ++j) {
    const CVector e1 = eta.eta1.row(j).transpose();
    const CVector e2 = eta.eta2.row(j).transpose();
    for (int k = 0; k < h; ++k) {
      const double delta = (j == k) ? kPi : 0.0;
      const CyclePair a = CyclePair::alpha(h, k);
      const CyclePair b = CyclePair::beta(h, k);
      worst = std::max(worst, std::abs(period_of(omega, e1, a).imag()));
      worst = std::max(worst, std::abs(period_of(omega, e1, b).imag() - delta));
      worst = std::max(worst, std::abs(period_of(omega, e2, a).imag() - delta));
      worst = std::max(worst, std::abs(period_of(omega, e2, b).imag()));
    }
  }
  return worst;
}

double eta_row_identity(const PeriodMatrix& omega) {
  const EtaBasis eta = eta_bases(omega);
  const CMatrix rhs = -omega.entries().conjugate() * eta.eta1;
  return (eta.eta2 - rhs).cwiseAbs().maxCoeff();
}

double winding_area(const PeriodMatrix& omega, const LatticeCharge& nm) {
  const cplx exponent = herm_product(omega, nm, CyclePair{nm.n, -nm.m});
  const cplx expected = -2.0 / kPi * area(omega, nm);
  return std::abs(exponent - expected);
}

double area_routes(const PeriodMatrix& omega, const LatticeCharge& nm) {
  const double a = area(omega, nm);
  const double via_real = 0.5 * kPi * real_product(omega, nm, as_cycle(nm));
  const cplx via_wedge = 0.25 * kI * wedge_integral(omega, nm, nm);
  return std::max(std::abs(a - via_real), std::abs(cplx(a) - via_wedge));
}

double duality_canonical(const PeriodMatrix& omega, const LatticeCharge& nm) {
  const DualityTensors t = canonical_duality_tensors(omega);
  const DualityCoeffs d = duality_coeffs(omega, nm, t);
  const DualityCoeffs d_neg = duality_coeffs(omega, LatticeCharge{-nm.n, nm.m}, t);
  const CVector c = primitive_coeffs(omega, nm).c;
  const double r1 = (d.d2 - c).cwiseAbs().maxCoeff();
  const double r2 = (d.d2 - d_neg.d1.conjugate()).cwiseAbs().maxCoeff();
  return std::max(r1, r2);
}

}  // namespace flatspec::identities
