#pragma once

#include <cstdint>

#include "flatspec/types.hpp"

namespace flatspec {

inline constexpr double kDefaultAsymmetryTol = 1e-10;

/// A point of Siegel upper half space: symmetric h x h complex matrix whose
/// imaginary part is positive definite. Only obtainable through
/// validate_period_matrix, so every instance satisfies the invariants.
class PeriodMatrix {
 public:
  int genus() const { return static_cast<int>(omega_.rows()); }
  const CMatrix& entries() const { return omega_; }
  cplx operator()(int j, int k) const { return omega_(j, k); }
  const RMatrix& real_part() const { return re_; }
  const RMatrix& imag_part() const { return im_; }
  const RMatrix& imag_inverse() const { return im_inv_; }
  /// Ascending eigenvalues of the imaginary part.
  const RVector& imag_eigenvalues() const { return im_eigs_; }
  double imag_determinant() const { return im_eigs_.prod(); }

 private:
  friend PeriodMatrix validate_period_matrix(const CMatrix&, double);
  PeriodMatrix() = default;

  CMatrix omega_;
  RMatrix re_;
  RMatrix im_;
  RMatrix im_inv_;
  RVector im_eigs_;
};

/// Symmetrizes raw (max asymmetry must be <= tol) and checks Im positive
/// definite via a symmetric eigendecomposition.
/// Throws AsymmetryError, NotPositiveDefinite, or std::invalid_argument for a
/// non-square input or tol <= 0.
PeriodMatrix validate_period_matrix(const CMatrix& raw, double tol = kDefaultAsymmetryTol);

/// Genus-one convenience wrapper.
PeriodMatrix period_matrix_from_tau(cplx tau);

/// Deterministic pseudo-random point: Re uniform in [-1/2, 1/2] (symmetric),
/// Im = A^T A + h I with A uniform in [-1, 1]. Bit-identical for equal seeds.
PeriodMatrix random_siegel_point(int h, std::uint64_t seed);

/// Element of PSL(2, Z); ad - bc = 1 is enforced by make().
struct ModularMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static ModularMatrix make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static ModularMatrix identity() { return {}; }
  static ModularMatrix T() { return {1, 1, 0, 1}; }
  static ModularMatrix S() { return {0, -1, 1, 0}; }

  friend ModularMatrix operator*(const ModularMatrix& x, const ModularMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
};

/// (a tau + b) / (c tau + d). Throws DomainError if Im tau <= 0.
cplx modular_transform_tau(const ModularMatrix& gamma, cplx tau);

/// Genus-one charge action: (m~, n~)^T = [[a, b], [c, d]] (m, n)^T.
LatticeCharge modular_transform_charge(const ModularMatrix& gamma, const LatticeCharge& charge);

}  // namespace flatspec
