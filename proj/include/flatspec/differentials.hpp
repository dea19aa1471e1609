#pragma once

#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

namespace flatspec {

/// Coefficients of the primitive differential omega_{n,m} = sum_k c_k omega_k
/// in the normalized basis. Invariant: b == pi * n exactly, c == a + i b.
struct DifferentialCoeffs {
  CVector c;
  RVector a;
  RVector b;
  LatticeCharge charge;

  bool degenerate() const { return charge.degenerate(); }
};

/// c_k = pi sum_j (m_j - sum_l n_l conj(Omega_lj)) (Im Omega)^{-1}_jk.
DifferentialCoeffs primitive_coeffs(const PeriodMatrix& omega, const LatticeCharge& charge);

/// D_kj = m_k delta_kj - n_k conj(Omega_kj).
CMatrix d_matrix(const PeriodMatrix& omega, const LatticeCharge& charge);

/// c_k recovered from the D-matrix: pi sum_{j,l} D_jl (Im Omega)^{-1}_lk.
CVector coeffs_from_d_matrix(const PeriodMatrix& omega, const CMatrix& d);

/// Row j of eta1 (eta2) holds the coefficients of eta^(1)_j (eta^(2)_j).
struct EtaBasis {
  CMatrix eta1;
  CMatrix eta2;
};

EtaBasis eta_bases(const PeriodMatrix& omega);

/// sum_k m_k eta1[k] + n_k eta2[k]; equals primitive_coeffs(...).c.
CVector coeffs_from_eta(const EtaBasis& eta, const LatticeCharge& charge);

/// Period of sum_k coeffs_k omega_k along gamma_{p,q}:
/// sum_k coeffs_k (p_k + sum_j q_j Omega_jk).
cplx period_of(const PeriodMatrix& omega, const CVector& coeffs, const CyclePair& cycle);

}  // namespace flatspec
