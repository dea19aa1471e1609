#include "flatspec/differentials.hpp"

#include <stdexcept>

namespace flatspec {

namespace {

void check_genus(const PeriodMatrix& omega, int h) {
  if (omega.genus() != h) throw std::invalid_argument("charge genus does not match period matrix");
}

}  // namespace

DifferentialCoeffs primitive_coeffs(const PeriodMatrix& omega, const LatticeCharge& charge) {
  check_genus(omega, charge.genus());
  const RVector n = to_real(charge.n);
  const RVector m = to_real(charge.m);
  DifferentialCoeffs out;
  out.charge = charge;
  // Re part: pi (Im Omega)^{-1} (m - Re Omega n). The imaginary part
  // pi (Im Omega)^{-1} Im Omega n collapses to pi n, which is stored exactly.
  out.a = kPi * (omega.imag_inverse() * (m - omega.real_part() * n));
  out.b = kPi * n;
  out.c.resize(out.a.size());
  for (Eigen::Index k = 0; k < out.a.size(); ++k) out.c(k) = cplx(out.a(k), out.b(k));
  return out;
}

CMatrix d_matrix(const PeriodMatrix& omega, const LatticeCharge& charge) {
  check_genus(omega, charge.genus());
  const int h = omega.genus();
  CMatrix d(h, h);
  for (int k = 0; k < h; ++k) {
    for (int j = 0; j < h; ++j) {
      const double diag = (k == j) ? static_cast<double>(charge.m(k)) : 0.0;
      d(k, j) = diag - static_cast<double>(charge.n(k)) * std::conj(omega(k, j));
    }
  }
  return d;
}

CVector coeffs_from_d_matrix(const PeriodMatrix& omega, const CMatrix& d) {
  const CVector colsum = d.colwise().sum().transpose();
  return kPi * (omega.imag_inverse().cast<cplx>().transpose() * colsum);
}

EtaBasis eta_bases(const PeriodMatrix& omega) {
  const int h = omega.genus();
  EtaBasis eta;
  eta.eta1 = kPi * omega.imag_inverse().cast<cplx>();
  eta.eta2 = kPi * (kI * CMatrix::Identity(h, h) -
                    (omega.real_part() * omega.imag_inverse()).cast<cplx>());
  return eta;
}

CVector coeffs_from_eta(const EtaBasis& eta, const LatticeCharge& charge) {
  return eta.eta1.transpose() * to_complex(charge.m) + eta.eta2.transpose() * to_complex(charge.n);
}

cplx period_of(const PeriodMatrix& omega, const CVector& coeffs, const CyclePair& cycle) {
  check_genus(omega, cycle.genus());
  // Omega is symmetric, so (sum_j q_j Omega_jk)_k == (Omega q)_k.
  const CVector w = to_complex(cycle.p) + omega.entries() * to_complex(cycle.q);
  return (coeffs.array() * w.array()).sum();
}

}  // namespace flatspec
