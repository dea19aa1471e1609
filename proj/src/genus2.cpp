#include "flatspec/genus2.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "flatspec/errors.hpp"
#include "flatspec/pairings.hpp"
#include "flatspec/special.hpp"

namespace flatspec::genus2 {

namespace {

cplx to_cplx(const Rational& r) { return {to_double(r), 0.0}; }

// Divisor used by the completion on each branch.
Rational divisor(const Genus2Params& p, Branch b) { return b == Branch::Plus ? p.M : Rational(p.N2 + p.M); }

struct Completion {
  Rational n2;
  Rational m2;
};

Completion complete_exact(const Genus2Params& p, Branch b, std::int64_t n1, std::int64_t m1) {
  const Rational div = divisor(p, b);
  const Rational n1r(n1);
  const Rational m1r(m1);
  if (b == Branch::Plus) return {n1r / div, (p.N2 + p.M) * m1r + p.N3 * n1r / div};
  return {-n1r / div, -p.M * m1r - p.N3 * n1r / div};
}

}  // namespace

SpecialGenus2 build_special_genus2(const Genus2Params& p) {
  if (p.N4hat == 0) throw BadRationality("N4 must be nonzero");
  if (p.M == 0) throw BadRationality("degenerate parameters: M = 0 leaves Gamma(+) undefined");
  if (p.N2 + p.M == 0) {
    throw BadRationality("degenerate parameters: N2 + M = 0 leaves Gamma(-) undefined");
  }
  const Rational n1 = p.N1();
  const std::pair<const char*, const Rational*> checks[] = {
      {"N1 = M N2 + M^2", &n1}, {"N2", &p.N2}, {"N3", &p.N3}};
  for (const auto& [name, value] : checks) {
    if (!in_z_over(*value, p.N4hat)) {
      std::ostringstream msg;
      msg << name << " = " << *value << " is not in Z/" << p.N4hat;
      throw BadRationality(msg.str());
    }
  }

  CMatrix om(2, 2);
  om(0, 0) = p.omega11;
  om(0, 1) = p.omega12;
  om(1, 0) = p.omega12;
  om(1, 1) = to_cplx(n1) * p.omega11 + to_cplx(p.N2) * p.omega12 + to_cplx(p.N3);
  const double det = om(0, 0).imag() * om(1, 1).imag() - om(0, 1).imag() * om(0, 1).imag();
  if (!(det > 0.0) || !(om(0, 0).imag() > 0.0)) {
    std::ostringstream msg;
    msg << "det Im Omega = " << det << "; the imaginary part is not positive definite";
    throw NotPositiveDefinite(msg.str());
  }
  return {validate_period_matrix(om), p, n1, p.N_plus(), p.N_minus()};
}

bool in_gamma(const Genus2Params& p, Branch b, std::int64_t n1, std::int64_t m1) {
  if (divisor(p, b) == 0) return false;
  const Completion c = complete_exact(p, b, n1, m1);
  return is_integer(c.n2) && is_integer(c.m2);
}

LatticeCharge gamma_complete(const Genus2Params& p, Branch b, std::int64_t n1, std::int64_t m1) {
  if (divisor(p, b) == 0) throw NotInGamma("branch divisor vanishes");
  const Completion c = complete_exact(p, b, n1, m1);
  if (!is_integer(c.n2) || !is_integer(c.m2)) {
    std::ostringstream msg;
    msg << "(" << n1 << ", " << m1 << ") is not in Gamma(" << (b == Branch::Plus ? '+' : '-')
        << "): n2 = " << c.n2 << ", m2 = " << c.m2;
    throw NotInGamma(msg.str());
  }
  IVector n(2), m(2);
  n << n1, to_int64(c.n2);
  m << m1, to_int64(c.m2);
  return {n, m};
}

std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>
gamma_basis(const Genus2Params& p, Branch b) {
  if (divisor(p, b) == 0) throw NotInGamma("branch divisor vanishes");
  // Gamma contains (0, j) iff the coefficient of m1 times j is integral.
  const Rational m_coeff = b == Branch::Plus ? Rational(p.N2 + p.M) : Rational(-p.M);
  const std::int64_t j1 =
      m_coeff == 0 ? 1 : to_int64(Rational(boost::multiprecision::denominator(m_coeff)));
  constexpr std::int64_t kSearchLimit = 1'000'000;
  for (std::int64_t k = 1; k <= kSearchLimit; ++k) {
    for (std::int64_t j = 0; j < j1; ++j) {
      if (in_gamma(p, b, k, j)) return {{k, j}, {0, j1}};
    }
  }
  throw std::runtime_error("Gamma lattice basis not found within the search limit");
}

namespace {

// The first component of v up to the branch divisor:
//   + : M m1 - n1 (M Omega11 + Omega12)
//   - : (N2+M) m1 - n1 ((N2+M) Omega11 - Omega12)
cplx family_numerator(const SpecialGenus2& s, Branch b, std::int64_t n1, std::int64_t m1) {
  const cplx o11 = s.omega(0, 0);
  const cplx o12 = s.omega(0, 1);
  const double nd = static_cast<double>(n1);
  const double md = static_cast<double>(m1);
  if (b == Branch::Plus) {
    const double M = to_double(s.params.M);
    return M * md - nd * (M * o11 + o12);
  }
  const double P = to_double(s.params.N2 + s.params.M);
  return P * md - nd * (P * o11 - o12);
}

}  // namespace

double eigenvalue_family_closed_form(const SpecialGenus2& s, Branch b,
                                     std::pair<std::int64_t, std::int64_t> base1,
                                     std::pair<std::int64_t, std::int64_t> probe1) {
  const LatticeCharge base = gamma_complete(s.params, b, base1.first, base1.second);
  // Validates membership of the probe as well.
  gamma_complete(s.params, b, probe1.first, probe1.second);
  const cplx num = family_numerator(s, b, probe1.first, probe1.second);
  const cplx den = family_numerator(s, b, base1.first, base1.second);
  return 2.0 * area(s.omega, base) * std::norm(num) / std::norm(den);
}

FamilyEigenvalue genus2_eigenvalue_family(const SpecialGenus2& s, Branch b,
                                          std::pair<std::int64_t, std::int64_t> base1,
                                          std::pair<std::int64_t, std::int64_t> probe1) {
  FamilyEigenvalue out;
  out.base = gamma_complete(s.params, b, base1.first, base1.second);
  out.probe = gamma_complete(s.params, b, probe1.first, probe1.second);
  out.lambda = eigenvalue_family_closed_form(s, b, base1, probe1);
  const special::SolutionRecord rec =
      special::make_record(s.omega, out.base, out.probe, 1e-10, 1);
  out.lambda_special = special::special_eigenvalue(s.omega, out.base, rec).lambda;
  return out;
}

}  // namespace flatspec::genus2
