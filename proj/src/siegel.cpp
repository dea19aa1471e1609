#include "flatspec/siegel.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "flatspec/errors.hpp"

namespace flatspec {

PeriodMatrix validate_period_matrix(const CMatrix& raw, double tol) {
  if (raw.rows() != raw.cols() || raw.rows() == 0) {
    throw std::invalid_argument("period matrix must be square and non-empty");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("asymmetry tolerance must be positive");
  }
  const double asym = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    std::ostringstream msg;
    msg << "period matrix is not symmetric (max |Omega_jk - Omega_kj| = " << asym << ")";
    throw AsymmetryError(msg.str());
  }

  PeriodMatrix pm;
  pm.omega_ = (raw + raw.transpose()) / 2.0;
  pm.re_ = pm.omega_.real();
  pm.im_ = pm.omega_.imag();

  Eigen::SelfAdjointEigenSolver<RMatrix> eig(pm.im_, Eigen::EigenvaluesOnly);
  pm.im_eigs_ = eig.eigenvalues();
  if (!(pm.im_eigs_.minCoeff() > 0.0)) {
    std::ostringstream msg;
    msg << "imaginary part is not positive definite (eigenvalues " << pm.im_eigs_.transpose()
        << ")";
    throw NotPositiveDefinite(msg.str());
  }
  pm.im_inv_ = pm.im_.llt().solve(RMatrix::Identity(raw.rows(), raw.rows()));
  // Exactly symmetric, like the matrix it inverts.
  pm.im_inv_ = (pm.im_inv_ + pm.im_inv_.transpose()) / 2.0;
  return pm;
}

PeriodMatrix period_matrix_from_tau(cplx tau) {
  CMatrix m(1, 1);
  m(0, 0) = tau;
  return validate_period_matrix(m);
}

namespace {

// Portable 53-bit uniform in [0, 1); std distributions are not bit-specified.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PeriodMatrix random_siegel_point(int h, std::uint64_t seed) {
  if (h < 1) throw std::invalid_argument("genus must be >= 1");
  std::mt19937_64 rng(seed);
  RMatrix a(h, h);
  RMatrix re(h, h);
  for (int j = 0; j < h; ++j) {
    for (int k = 0; k < h; ++k) a(j, k) = 2.0 * unit_uniform(rng) - 1.0;
  }
  for (int j = 0; j < h; ++j) {
    for (int k = j; k < h; ++k) {
      re(j, k) = unit_uniform(rng) - 0.5;
      re(k, j) = re(j, k);
    }
  }
  RMatrix im = a.transpose() * a + static_cast<double>(h) * RMatrix::Identity(h, h);
  im = (im + im.transpose()) / 2.0;
  CMatrix omega(h, h);
  omega.real() = re;
  omega.imag() = im;
  return validate_period_matrix(omega);
}

ModularMatrix ModularMatrix::make(std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t d) {
  if (a * d - b * c != 1) throw std::invalid_argument("modular matrix must have ad - bc = 1");
  return {a, b, c, d};
}

cplx modular_transform_tau(const ModularMatrix& g, cplx tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("modulus must lie in the upper half plane");
  const cplx den = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
  const cplx num = static_cast<double>(g.a) * tau + static_cast<double>(g.b);
  cplx out = num / den;
  // The imaginary part is known in closed form; this avoids cancellation.
  out.imag(tau.imag() / std::norm(den));
  return out;
}

LatticeCharge modular_transform_charge(const ModularMatrix& g, const LatticeCharge& charge) {
  if (charge.genus() != 1) throw std::invalid_argument("modular action is defined for genus one");
  const std::int64_t n = charge.n(0);
  const std::int64_t m = charge.m(0);
  IVector nt(1), mt(1);
  mt(0) = g.a * m + g.b * n;
  nt(0) = g.c * m + g.d * n;
  return {nt, mt};
}

}  // namespace flatspec
