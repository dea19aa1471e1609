#pragma once

#include <cstdint>

#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

namespace flatspec {

/// Reads a charge (n, m) as the cycle with (q, p) = (n, m) and back. The
/// scalar products treat both slots symmetrically under this identification.
inline CyclePair as_cycle(const LatticeCharge& c) { return {c.n, c.m}; }
inline LatticeCharge as_charge(const CyclePair& c) { return {c.q, c.p}; }

/// <<n,m|q,p>>: the period of omega_{n,m} along gamma_{p,q}, evaluated as
/// pi (p + Omega q)^T (Im Omega)^{-1} (m - conj(Omega) n).
cplx herm_product(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// <n,m|q,p> = Re <<n,m|-q,p>>, evaluated in the real closed form
/// pi [(p - Re Omega q)^T (Im Omega)^{-1} (m - Re Omega n) + q^T Im Omega n].
double real_product(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// p.n + q.m; Im <<n,m|q,p>> == pi times this.
std::int64_t integer_defect(const LatticeCharge& nm, const CyclePair& qp);

struct PairingValue {
  cplx herm;
  double real_sp;
  std::int64_t integer_defect;
};

PairingValue pairing(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// Monodromy factor (n,m|q,p) = exp <<n,m|q,p>>. The imaginary part of the
/// exponent is snapped to the nearest multiple of pi, so the result is real.
/// Throws SnapError if the distance to that multiple exceeds snap_tol.
double monodromy_factor(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp,
                        double snap_tol = 1e-8);

/// Surface integral of omega_{n,m} ^ conj(omega_{q,p}) by the bilinear relations.
cplx wedge_integral(const PeriodMatrix& omega, const LatticeCharge& nm, const LatticeCharge& qp);

/// Area of the flat metric |omega_{n,m}|^2. Throws DegenerateCharge for (0, 0).
double area(const PeriodMatrix& omega, const LatticeCharge& nm);

struct DualityTensors {
  RMatrix E;
  RMatrix F;
  RMatrix G;
};

/// E = pi (Im Omega)^{-1}, F = 0, G = pi I.
DualityTensors canonical_duality_tensors(const PeriodMatrix& omega);

struct DualityCoeffs {
  CVector d1;
  CVector d2;
};

/// d1 and d2 for user-supplied real symmetric tensors. With the canonical
/// tensors d2 equals the primitive coefficients. Throws AsymmetryError if a
/// tensor is not symmetric (tolerance 1e-12 relative to its max entry).
DualityCoeffs duality_coeffs(const PeriodMatrix& omega, const LatticeCharge& nm,
                             const DualityTensors& tensors);

}  // namespace flatspec
