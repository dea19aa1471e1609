#pragma once

#include <vector>

#include "flatspec/rational.hpp"
#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

namespace flatspec::highgenus {

/// N_ij = v_i / v_j for v = m - Omega n. Rank one for h >= 2.
struct RatioMatrix {
  CMatrix entries;

  /// max |N_ij N_jk - N_ik| over all i, j, k.
  double cocycle_residual() const;
  /// max |N_ij N_ji - 1| (covers N_ii = 1).
  double inverse_residual() const;
  /// Smallest singular value divided by the largest.
  double relative_min_singular_value() const;
};

/// Throws DegenerateBase if some |v_j| < 1e-14.
RatioMatrix ratio_matrix(const PeriodMatrix& omega, const LatticeCharge& base);

/// Rational tensors N_{ik,j}^l (stored n4[i][k][j][l]) and M_{ik}, 0-based.
class AnsatzTensors {
 public:
  explicit AnsatzTensors(int h);

  int genus() const { return h_; }
  Rational& n4(int i, int k, int j, int l) { return n4_[index4(i, k, j, l)]; }
  const Rational& n4(int i, int k, int j, int l) const { return n4_[index4(i, k, j, l)]; }
  Rational& m2(int i, int k) { return m2_[static_cast<std::size_t>(i) * h_ + k]; }
  const Rational& m2(int i, int k) const { return m2_[static_cast<std::size_t>(i) * h_ + k]; }

 private:
  std::size_t index4(int i, int k, int j, int l) const {
    return ((static_cast<std::size_t>(i) * h_ + k) * h_ + j) * h_ + l;
  }
  int h_;
  std::vector<Rational> n4_;
  std::vector<Rational> m2_;
};

struct AnsatzResiduals {
  Rational cocycle;  // max |sum_l N_{ik,j}^l N_{jl,n}^m - N_{ik,n}^m|
  Rational m_term;   // max |sum_l N_{ik,j}^l M_{jl}|
};

/// Exact residuals of the composition identities for the structured ansatz.
AnsatzResiduals verify_ansatz_tensors(const AnsatzTensors& t);

}  // namespace flatspec::highgenus
