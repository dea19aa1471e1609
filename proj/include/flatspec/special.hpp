#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

// Detection of special period matrices: integer probes (n', m') whose
// primitive differential is a complex multiple of the base one,
//   m' - Omega n' = conj(c) (m - Omega n).
namespace flatspec::special {

inline constexpr double kDefaultTol = 1e-9;
/// |v_j| below this makes a base degenerate.
inline constexpr double kDegenerateBase = 1e-14;

enum class Classification { CollinearRational, SpecialComplex, Degenerate };

std::string_view to_string(Classification c);

/// A probe accepted into the solution space of a base charge.
///
/// `probe` is kept exactly as enumerated. The sign convention Im conj(c) > 0
/// is realised through `orientation`: the oriented probe orientation * probe
/// satisfies v(oriented) = conj(c) v(base). Collinear records have
/// orientation +1 and real c.
struct SolutionRecord {
  LatticeCharge probe;
  int orientation = 1;
  cplx c;
  double lambda_c = 0.0;
  double lambda_c_dual = 0.0;
  std::optional<std::int64_t> degree;
  Classification classification = Classification::Degenerate;

  cplx cbar() const { return std::conj(c); }
  LatticeCharge oriented_probe() const {
    return orientation > 0 ? probe : -probe;
  }
};

/// v_j = m_j - sum_k Omega_jk n_k.
CVector charge_vector(const PeriodMatrix& omega, const LatticeCharge& charge);

/// r_j = v'_j / v_j. Throws DegenerateBase if some |v_j| < 1e-14.
CVector consistency_ratios(const PeriodMatrix& omega, const LatticeCharge& base,
                           const LatticeCharge& probe);

/// Scale-free distance of v' from the complex line through v:
/// max_j |v'_j - r v_j| / max_j |v'_j|, with r = v'_p / v_p at the pivot
/// p = argmax |v_p|. Zero exactly when the probe solves the consistency
/// conditions; invariant under rescaling either vector. Returns +inf for the
/// zero probe. Throws DegenerateBase.
double ratio_mismatch(const PeriodMatrix& omega, const LatticeCharge& base,
                      const LatticeCharge& probe);

struct SolvedC {
  cplx c;
  int orientation;
};

/// c with Im conj(c) >= 0 (probe sign flipped if needed) when the probe is a
/// solution at tolerance tol. Throws NotASolution (including for the zero
/// probe) or DegenerateBase.
SolvedC solve_c(const PeriodMatrix& omega, const LatticeCharge& base, const LatticeCharge& probe,
                double tol = kDefaultTol);

/// Collinear-rational when |Im c| <= tol and c is within tol of p/q with
/// q <= 2 bound^2; special-complex when Im c is beyond tol; degenerate
/// otherwise.
Classification classify(cplx c, double tol, std::int64_t bound);

/// Full record for an accepted probe (eigenvalues, degree for special-complex
/// records when integral). Throws like solve_c.
SolutionRecord make_record(const PeriodMatrix& omega, const LatticeCharge& base,
                           const LatticeCharge& probe, double tol, std::int64_t bound);

/// Every nonzero probe in [-bound, bound]^{2h} accepted at tol, sorted
/// lexicographically by (n', m'). The box is split across `threads` workers;
/// the result does not depend on the split.
std::vector<SolutionRecord> search_solutions(const PeriodMatrix& omega, const LatticeCharge& base,
                                             std::int64_t bound, double tol = kDefaultTol,
                                             unsigned threads = 1);

struct SpecialEigenvalues {
  double lambda;       // 2 A_nm |c|^2
  double lambda_dual;  // 4 A_nm A_n'm' / lambda
};

SpecialEigenvalues special_eigenvalue(const PeriodMatrix& omega, const LatticeCharge& base,
                                      const SolutionRecord& record);

/// Coefficients u = conj(c) n - n' of the pulled-back torus differential,
/// using the oriented probe.
CVector cover_coefficients(const LatticeCharge& base, const SolutionRecord& record);

struct CoverMonodromy {
  cplx value;
  std::int64_t integer_part;  // -p.n' - q.m'
  std::int64_t cbar_part;     // p.n + q.m
};

/// Period of the cover differential along gamma_{p,q} and its coordinates in
/// Z + conj(c) Z. Throws LatticeDefect if the value is not the lattice point
/// within 1e-9 (relative to max(1, |value|)).
CoverMonodromy cover_monodromy(const PeriodMatrix& omega, const LatticeCharge& base,
                               const SolutionRecord& record, const CyclePair& cycle);

/// u^T Im Omega conj(u) / Im conj(c), unrounded. Throws DomainError for
/// collinear records (Im conj(c) == 0).
double cover_degree_raw(const PeriodMatrix& omega, const LatticeCharge& base,
                        const SolutionRecord& record);

/// Rounded degree. Throws NotIntegralDegree if not within 1e-8 of an integer
/// >= 1.
std::int64_t cover_degree(const PeriodMatrix& omega, const LatticeCharge& base,
                          const SolutionRecord& record);

/// max_{j,k} |v_j v'_k - v_k v'_j|.
double cm_wedge_residual(const PeriodMatrix& omega, const LatticeCharge& base,
                         const LatticeCharge& probe);

/// Integer vectors of a holomorphic map to the torus of modulus tau:
/// w(z + gamma_{p,q}) = w(z) + p.N' + q.M' + tau (p.N + q.M).
struct CoverWitness {
  IVector M;
  IVector N;
  IVector Mprime;
  IVector Nprime;
};

/// Witness read off a record: N' = -n', M' = -m' (oriented), N = n, M = m.
CoverWitness witness_from_record(const LatticeCharge& base, const SolutionRecord& record);

/// max_k |M'_k + tau M_k - sum_j (N'_j + tau N_j) Omega_jk|.
double cm_relation_check(const PeriodMatrix& omega, cplx tau, const IVector& M, const IVector& N,
                         const IVector& Mprime, const IVector& Nprime);

/// D_j = sum_k conj(D^{mn}_kj) with the superscripts in swapped order, i.e.
/// the (m, n) roles exchanged relative to d_matrix: D_j = n_j - sum_k m_k Omega_kj.
CVector psf_d_vector(const PeriodMatrix& omega, const LatticeCharge& charge);

struct PsfResult {
  cplx d;
  cplx d_prime;
  cplx lhs;  // sum_{|k|<=T} exp(-k^2 pi D'/D)
  cplx rhs;  // sqrt(D/D') sum_{|k|<=T} exp(-k^2 pi D/D')
  double residual;
};

/// Theta-sum (Poisson summation) check at index j. Throws ConvergenceDomain
/// if Re(D'_j / D_j) <= 0 or D_j == 0.
PsfResult psf_check(const PeriodMatrix& omega, const LatticeCharge& base,
                    const LatticeCharge& probe, int j, int trunc);

}  // namespace flatspec::special
