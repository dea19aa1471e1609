#include "flatspec/pairings.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "flatspec/differentials.hpp"
#include "flatspec/errors.hpp"

namespace flatspec {

namespace {

void check_genus(const PeriodMatrix& omega, int h) {
  if (omega.genus() != h) throw std::invalid_argument("charge genus does not match period matrix");
}

cplx bilinear(const CVector& x, const RMatrix& a, const CVector& y) {
  return (x.array() * (a.cast<cplx>() * y).array()).sum();
}

}  // namespace

cplx herm_product(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  check_genus(omega, nm.genus());
  check_genus(omega, qp.genus());
  const CMatrix& om = omega.entries();
  const CVector left = to_complex(qp.p) + om * to_complex(qp.q);
  const CVector right = to_complex(nm.m) - om.conjugate() * to_complex(nm.n);
  return kPi * bilinear(left, omega.imag_inverse(), right);
}

double real_product(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  check_genus(omega, nm.genus());
  check_genus(omega, qp.genus());
  const RMatrix& re = omega.real_part();
  const RVector left = to_real(qp.p) - re * to_real(qp.q);
  const RVector right = to_real(nm.m) - re * to_real(nm.n);
  const double first = left.dot(omega.imag_inverse() * right);
  const double second = to_real(qp.q).dot(omega.imag_part() * to_real(nm.n));
  return kPi * (first + second);
}

std::int64_t integer_defect(const LatticeCharge& nm, const CyclePair& qp) {
  return qp.p.dot(nm.n) + qp.q.dot(nm.m);
}

PairingValue pairing(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp) {
  return {herm_product(omega, nm, qp), real_product(omega, nm, qp), integer_defect(nm, qp)};
}

double monodromy_factor(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp,
                        double snap_tol) {
  const cplx exponent = herm_product(omega, nm, qp);
  const double k = std::nearbyint(exponent.imag() / kPi);
  const double dist = std::abs(exponent.imag() - k * kPi);
  if (dist > snap_tol) {
    std::ostringstream msg;
    msg << "monodromy exponent imaginary part " << exponent.imag()
        << " is not a multiple of pi (distance " << dist << ")";
    throw SnapError(msg.str());
  }
  const double sign = std::fmod(std::abs(k), 2.0) == 0.0 ? 1.0 : -1.0;
  return sign * std::exp(exponent.real());
}

cplx wedge_integral(const PeriodMatrix& omega, const LatticeCharge& nm, const LatticeCharge& qp) {
  const CVector c = primitive_coeffs(omega, nm).c;
  const CVector cq = primitive_coeffs(omega, qp).c;
  // beta_j period of sum_k c_k omega_k is sum_k Omega_jk c_k.
  const CVector beta = omega.entries() * c;
  const CVector beta_q = omega.entries() * cq;
  cplx sum = 0.0;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    sum += c(j) * std::conj(beta_q(j)) - std::conj(cq(j)) * beta(j);
  }
  return sum;
}

double area(const PeriodMatrix& omega, const LatticeCharge& nm) {
  check_genus(omega, nm.genus());
  if (nm.degenerate()) throw DegenerateCharge("area of the zero differential is undefined");
  const CVector v = to_complex(nm.m) - omega.entries() * to_complex(nm.n);
  const CVector vbar = v.conjugate();
  return 0.5 * kPi * kPi * bilinear(v, omega.imag_inverse(), vbar).real();
}

DualityTensors canonical_duality_tensors(const PeriodMatrix& omega) {
  const int h = omega.genus();
  return {kPi * omega.imag_inverse(), RMatrix::Zero(h, h), kPi * RMatrix::Identity(h, h)};
}

namespace {

void require_symmetric(const RMatrix& t, const char* name, int h) {
  if (t.rows() != h || t.cols() != h) {
    throw std::invalid_argument(std::string("duality tensor ") + name + " has wrong shape");
  }
  const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
  if ((t - t.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw AsymmetryError(std::string("duality tensor ") + name + " is not symmetric");
  }
}

}  // namespace

DualityCoeffs duality_coeffs(const PeriodMatrix& omega, const LatticeCharge& nm,
                             const DualityTensors& t) {
  check_genus(omega, nm.genus());
  const int h = omega.genus();
  require_symmetric(t.E, "E", h);
  require_symmetric(t.F, "F", h);
  require_symmetric(t.G, "G", h);

  const RVector n = to_real(nm.n);
  const RVector m = to_real(nm.m);
  // Row vectors sum_l n_l X_lj are X^T n; all tensors and Omega are symmetric.
  const RVector re_n = omega.real_part() * n;
  const RVector im_n = omega.imag_part() * n;
  const CVector f_arg = kI * m.cast<cplx>() + im_n.cast<cplx>();
  const CVector g_term = kI * (t.G * n).cast<cplx>();
  const CMatrix F = t.F.cast<cplx>();

  DualityCoeffs out;
  out.d1 = (t.E * (m + re_n)).cast<cplx>() - F * f_arg + g_term;
  out.d2 = (t.E * (m - re_n)).cast<cplx>() + F * f_arg + g_term;
  return out;
}

}  // namespace flatspec
