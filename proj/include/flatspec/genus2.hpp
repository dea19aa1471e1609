#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flatspec/rational.hpp"
#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

// Special genus-2 period matrices with
//   Omega_22 = N1 Omega_11 + N2 Omega_12 + N3,  N1 = M N2 + M^2,
// and their two families Gamma(+-) of Omega-independent solutions.
namespace flatspec::genus2 {

struct Genus2Params {
  cplx omega11;
  cplx omega12;
  Rational M;
  Rational N2;
  Rational N3;
  std::int64_t N4hat = 1;

  Rational N1() const { return M * N2 + M * M; }
  Rational N_plus() const { return N2 + M; }
  Rational N_minus() const { return -M; }
};

enum class Branch { Plus, Minus };

/// The validated matrix together with the exact parameters it came from.
struct SpecialGenus2 {
  PeriodMatrix omega;
  Genus2Params params;
  Rational N1;
  Rational N_plus;
  Rational N_minus;
};

/// Throws BadRationality if N1, N2 or N3 is not in Z / N4hat, if N4hat == 0,
/// or if M or N2 + M vanishes (the Gamma(+-) completions divide by them);
/// NotPositiveDefinite if det Im Omega <= 0.
SpecialGenus2 build_special_genus2(const Genus2Params& params);

/// Gamma(+-) membership of (n1, m1).
bool in_gamma(const Genus2Params& params, Branch branch, std::int64_t n1, std::int64_t m1);

/// Completes (n1, m1) to a genus-2 charge ((n1, n2), (m1, m2)).
///   +: n2 = n1/M,          m2 = (N2+M) m1 + N3 n1/M
///   -: n2 = -n1/(N2+M),    m2 = -M m1 - N3 n1/(N2+M)
/// Throws NotInGamma when n2 or m2 is not an integer.
LatticeCharge gamma_complete(const Genus2Params& params, Branch branch, std::int64_t n1,
                             std::int64_t m1);

/// Hermite basis {(k0, j0), (0, j1)} of the sublattice Gamma(branch) of Z^2.
std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>
gamma_basis(const Genus2Params& params, Branch branch);

/// lambda_c for the family on `branch` by the closed form in (n1, m1),
/// (n1', m1'). Both points must lie in Gamma(branch) (NotInGamma otherwise).
double eigenvalue_family_closed_form(const SpecialGenus2& surface, Branch branch,
                                     std::pair<std::int64_t, std::int64_t> base1,
                                     std::pair<std::int64_t, std::int64_t> probe1);

struct FamilyEigenvalue {
  double lambda;          // closed form
  double lambda_special;  // 2 A |c|^2 from the solved ratio
  LatticeCharge base;
  LatticeCharge probe;
};

/// Completes both charges, evaluates the closed form and cross-checks it
/// against the generic special-surface route. Throws NotInGamma, or
/// NotASolution if the completed probe is not proportional to the base.
FamilyEigenvalue genus2_eigenvalue_family(const SpecialGenus2& surface, Branch branch,
                                          std::pair<std::int64_t, std::int64_t> base1,
                                          std::pair<std::int64_t, std::int64_t> probe1);

}  // namespace flatspec::genus2
