#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace flatspec {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using IVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Integer charge (n, m) in Z^{2h} labelling a primitive differential.
struct LatticeCharge {
  IVector n;
  IVector m;

  LatticeCharge() = default;
  LatticeCharge(IVector n_, IVector m_) : n(std::move(n_)), m(std::move(m_)) {}

  static LatticeCharge zero(int h) {
    return {IVector::Zero(h), IVector::Zero(h)};
  }
  int genus() const { return static_cast<int>(n.size()); }
  /// The zero charge is representable but carries no differential.
  bool degenerate() const { return n.isZero() && m.isZero(); }
  LatticeCharge operator-() const { return {-n, -m}; }
  friend bool operator==(const LatticeCharge& a, const LatticeCharge& b) {
    return a.n == b.n && a.m == b.m;
  }
};

/// Homology class gamma_{p,q} = p.alpha + q.beta, stored as (q, p).
struct CyclePair {
  IVector q;
  IVector p;

  static CyclePair zero(int h) { return {IVector::Zero(h), IVector::Zero(h)}; }
  static CyclePair alpha(int h, int k) {
    CyclePair c = zero(h);
    c.p(k) = 1;
    return c;
  }
  static CyclePair beta(int h, int k) {
    CyclePair c = zero(h);
    c.q(k) = 1;
    return c;
  }
  int genus() const { return static_cast<int>(q.size()); }
};

inline IVector unit_ivector(int h, int k) {
  IVector e = IVector::Zero(h);
  e(k) = 1;
  return e;
}

inline RVector to_real(const IVector& v) { return v.cast<double>(); }
inline CVector to_complex(const IVector& v) { return v.cast<double>().cast<cplx>(); }

}  // namespace flatspec
