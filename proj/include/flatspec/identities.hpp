#pragma once

#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

// Residual predicates for the algebraic identities satisfied by primitive
// differentials and their pairings. Every function returns an absolute
// residual (0 in exact arithmetic); callers compare against a tolerance.
//
// Throughout, a "charge" argument (q, p) in a wedge or real-product slot is a
// LatticeCharge with n = q and m = p.
namespace flatspec::identities {

/// conj<<n,m|q,p>> = <<-q,p|-n,m>> = <<n,m|q,p>> - 2 i pi (p.n + q.m).
double conjugation(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// Im <<n,m|q,p>> = Im <<m,n|p,q>>.
double herm_im_swap(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// Factorization of <<n,m|q,p>> through the unit charges and cycles.
double factorization(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// herm_product agrees with period_of applied to the primitive coefficients.
double herm_vs_period(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// <n,m|q,p> = Re <<n,m|-q,p>> = -Re <<n,m|q,-p>>.
double real_vs_herm_real_part(const PeriodMatrix& omega, const LatticeCharge& nm,
                              const CyclePair& qp);

/// <n,m|q,p> = <q,p|n,m>.
double real_symmetry(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// <n,m|q,p> = <<n,m|-q,p>> - i pi (p.n - q.m), as a complex identity.
double real_vs_herm(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// <n,m|n,m> = <<n,m|-n,m>>, including a vanishing imaginary part.
double norm_is_herm(const PeriodMatrix& omega, const LatticeCharge& nm);

/// <n,m|q,p> = pi^{-1} (a_nm^T Im Omega a_qp + b_qp^T Im Omega b_nm).
double ab_expression(const PeriodMatrix& omega, const LatticeCharge& nm, const CyclePair& qp);

/// alpha_k periods: <<n,m|0,k>> = c_k and <n,m|0,k> = a_k.
double alpha_periods(const PeriodMatrix& omega, const LatticeCharge& nm);

/// c_k = pi sum_{j,l} D_jl (Im Omega)^{-1}_lk.
double d_matrix_contraction(const PeriodMatrix& omega, const LatticeCharge& nm);

/// Distance of Im <<n,m|q,p>> from the nearest multiple of pi.
double monodromy_quantization(const PeriodMatrix& omega, const LatticeCharge& nm,
                              const CyclePair& qp);

/// (i/2) int omega_nm ^ conj(omega_qp) = pi <<n,m|-q,p>> = pi <n,m|q,p> + i pi^2 (p.n - q.m).
double wedge_vs_herm(const PeriodMatrix& omega, const LatticeCharge& nm, const LatticeCharge& qp);

/// int(nm, qp) - int(qp, nm) = 4 pi^2 (p.n - q.m).
double wedge_defect(const PeriodMatrix& omega, const LatticeCharge& nm, const LatticeCharge& qp);

/// Literal swap relation Im (i/2) int(nm, qp) = Im (i/2) int(mn, pq).
/// Both sides equal +-pi^2 (p.n - q.m), so this residual is 2 pi^2 |p.n - q.m|
/// and vanishes only when p.n == q.m.
double wedge_im_swap_literal(const PeriodMatrix& omega, const LatticeCharge& nm,
                             const LatticeCharge& qp);

/// Sign-consistent swap relation Im (i/2) int(nm, qp) = -Im (i/2) int(mn, pq),
/// i.e. the swapped pair taken against omega_{-p,-q}.
double wedge_im_swap(const PeriodMatrix& omega, const LatticeCharge& nm, const LatticeCharge& qp);

/// omega_nm = sum_k m_k eta1_k + n_k eta2_k.
double eta_decomposition(const PeriodMatrix& omega, const LatticeCharge& nm);

/// Im of alpha/beta periods of eta^(1), eta^(2) equal 0 or pi delta_jk.
double eta_periods(const PeriodMatrix& omega);

/// eta^(2)_k = -sum_j conj(Omega_kj) eta^(1)_j.
double eta_row_identity(const PeriodMatrix& omega);

/// Exponent of the monodromy along (q,p) = (n,-m) equals -(2/pi) A_nm, real.
double winding_area(const PeriodMatrix& omega, const LatticeCharge& nm);

/// A_nm = (pi/2) <n,m|n,m> = (i/4) int omega_nm ^ conj(omega_nm).
double area_routes(const PeriodMatrix& omega, const LatticeCharge& nm);

/// Canonical duality tensors give d2 = c; also d2(n,m) = conj d1(-n,m).
double duality_canonical(const PeriodMatrix& omega, const LatticeCharge& nm);

}  // namespace flatspec::identities
