#include "flatspec/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "flatspec/differentials.hpp"
#include "flatspec/errors.hpp"
#include "flatspec/pairings.hpp"

namespace flatspec::special {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::CollinearRational:
      return "collinear-rational";
    case Classification::SpecialComplex:
      return "special-complex";
    case Classification::Degenerate:
      return "degenerate";
  }
  return "degenerate";
}

CVector charge_vector(const PeriodMatrix& omega, const LatticeCharge& charge) {
  if (omega.genus() != charge.genus()) {
    throw std::invalid_argument("charge genus does not match period matrix");
  }
  return to_complex(charge.m) - omega.entries() * to_complex(charge.n);
}

namespace {

CVector checked_base_vector(const PeriodMatrix& omega, const LatticeCharge& base) {
  CVector v = charge_vector(omega, base);
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (std::abs(v(j)) < kDegenerateBase) {
      std::ostringstream msg;
      msg << "base charge has v_" << (j + 1) << " = 0; ratios are undefined";
      throw DegenerateBase(msg.str());
    }
  }
  return v;
}

double mismatch(const CVector& v, const CVector& vp) {
  const double vp_max = vp.cwiseAbs().maxCoeff();
  if (vp_max == 0.0) return std::numeric_limits<double>::infinity();
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  const cplx r = vp(pivot) / v(pivot);
  return (vp - r * v).cwiseAbs().maxCoeff() / vp_max;
}

}  // namespace

CVector consistency_ratios(const PeriodMatrix& omega, const LatticeCharge& base,
                           const LatticeCharge& probe) {
  const CVector v = checked_base_vector(omega, base);
  const CVector vp = charge_vector(omega, probe);
  return vp.cwiseQuotient(v);
}

double ratio_mismatch(const PeriodMatrix& omega, const LatticeCharge& base,
                      const LatticeCharge& probe) {
  return mismatch(checked_base_vector(omega, base), charge_vector(omega, probe));
}

namespace {

SolvedC solve_from_vectors(const CVector& v, const CVector& vp, double tol) {
  const double miss = mismatch(v, vp);
  if (!(miss <= tol)) {
    std::ostringstream msg;
    if (std::isinf(miss)) {
      msg << "zero probe is degenerate";
    } else {
      msg << "probe is not proportional to the base (mismatch " << miss << ")";
    }
    throw NotASolution(msg.str());
  }
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  const cplx cbar = vp(pivot) / v(pivot);
  if (cbar.imag() < 0.0 && std::abs(cbar.imag()) > tol) return {-std::conj(cbar), -1};
  return {std::conj(cbar), 1};
}

}  // namespace

SolvedC solve_c(const PeriodMatrix& omega, const LatticeCharge& base, const LatticeCharge& probe,
                double tol) {
  return solve_from_vectors(checked_base_vector(omega, base), charge_vector(omega, probe), tol);
}

Classification classify(cplx c, double tol, std::int64_t bound) {
  if (std::abs(c.imag()) > tol) return Classification::SpecialComplex;
  const std::int64_t max_den = std::max<std::int64_t>(1, 2 * bound * bound);
  for (std::int64_t q = 1; q <= max_den; ++q) {
    const double p = std::nearbyint(c.real() * static_cast<double>(q));
    if (std::abs(c.real() - p / static_cast<double>(q)) <= tol) {
      return Classification::CollinearRational;
    }
  }
  return Classification::Degenerate;
}

namespace {

SolutionRecord record_from(const PeriodMatrix& omega, const LatticeCharge& base,
                           const LatticeCharge& probe, const SolvedC& solved, double tol,
                           std::int64_t bound, double base_area) {
  SolutionRecord rec;
  rec.probe = probe;
  rec.orientation = solved.orientation;
  rec.c = solved.c;
  rec.classification = classify(solved.c, tol, bound);
  rec.lambda_c = 2.0 * base_area * std::norm(solved.c);
  rec.lambda_c_dual = 4.0 * base_area * area(omega, probe) / rec.lambda_c;
  if (rec.classification == Classification::SpecialComplex) {
    try {
      rec.degree = cover_degree(omega, base, rec);
    } catch (const NotIntegralDegree&) {
      rec.degree.reset();
    }
  }
  return rec;
}

bool lex_less(const IVector& a, const IVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

bool record_less(const SolutionRecord& a, const SolutionRecord& b) {
  if (a.probe.n != b.probe.n) return lex_less(a.probe.n, b.probe.n);
  return lex_less(a.probe.m, b.probe.m);
}

}  // namespace

SolutionRecord make_record(const PeriodMatrix& omega, const LatticeCharge& base,
                           const LatticeCharge& probe, double tol, std::int64_t bound) {
  const SolvedC solved = solve_c(omega, base, probe, tol);
  return record_from(omega, base, probe, solved, tol, bound, area(omega, base));
}

std::vector<SolutionRecord> search_solutions(const PeriodMatrix& omega, const LatticeCharge& base,
                                             std::int64_t bound, double tol, unsigned threads) {
  if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("search tolerance must be positive");
  const int h = omega.genus();
  const CVector v = checked_base_vector(omega, base);
  const double base_area = area(omega, base);

  const std::int64_t side = 2 * bound + 1;
  std::int64_t total = 1;
  for (int i = 0; i < 2 * h; ++i) {
    if (total > std::numeric_limits<std::int64_t>::max() / side) {
      throw std::invalid_argument("search box is too large");
    }
    total *= side;
  }

  // Probe digits: n'_1 .. n'_h, m'_1 .. m'_h, most significant first.
  auto decode = [&](std::int64_t index) {
    LatticeCharge probe = LatticeCharge::zero(h);
    for (int i = 2 * h - 1; i >= 0; --i) {
      const std::int64_t digit = index % side - bound;
      index /= side;
      if (i < h) {
        probe.n(i) = digit;
      } else {
        probe.m(i - h) = digit;
      }
    }
    return probe;
  };

  auto scan = [&](std::int64_t begin, std::int64_t end, std::vector<SolutionRecord>& out) {
    for (std::int64_t idx = begin; idx < end; ++idx) {
      const LatticeCharge probe = decode(idx);
      if (probe.degenerate()) continue;
      const CVector vp = charge_vector(omega, probe);
      if (!(mismatch(v, vp) <= tol)) continue;
      out.push_back(record_from(omega, base, probe, solve_from_vectors(v, vp, tol), tol, bound,
                                base_area));
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(1, total)));
  std::vector<std::vector<SolutionRecord>> partial(workers);
  if (workers == 1) {
    scan(0, total, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t begin = total * w / workers;
      const std::int64_t end = total * (w + 1) / workers;
      pool.emplace_back([&, begin, end, w] { scan(begin, end, partial[w]); });
    }
  }

  std::vector<SolutionRecord> records;
  for (auto& part : partial) {
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  std::sort(records.begin(), records.end(), record_less);
  return records;
}

SpecialEigenvalues special_eigenvalue(const PeriodMatrix& omega, const LatticeCharge& base,
                                      const SolutionRecord& record) {
  const double a = area(omega, base);
  const double lambda = 2.0 * a * std::norm(record.c);
  return {lambda, 4.0 * a * area(omega, record.probe) / lambda};
}

CVector cover_coefficients(const LatticeCharge& base, const SolutionRecord& record) {
  return record.cbar() * to_complex(base.n) - to_complex(record.oriented_probe().n);
}

CoverMonodromy cover_monodromy(const PeriodMatrix& omega, const LatticeCharge& base,
                               const SolutionRecord& record, const CyclePair& cycle) {
  const LatticeCharge probe = record.oriented_probe();
  CoverMonodromy out;
  out.value = period_of(omega, cover_coefficients(base, record), cycle);
  out.integer_part = -cycle.p.dot(probe.n) - cycle.q.dot(probe.m);
  out.cbar_part = cycle.p.dot(base.n) + cycle.q.dot(base.m);
  const cplx lattice_point = static_cast<double>(out.integer_part) +
                             record.cbar() * static_cast<double>(out.cbar_part);
  const double defect = std::abs(out.value - lattice_point);
  if (defect > 1e-9 * std::max(1.0, std::abs(out.value))) {
    std::ostringstream msg;
    msg << "cover period misses its lattice point by " << defect;
    throw LatticeDefect(msg.str());
  }
  return out;
}

double cover_degree_raw(const PeriodMatrix& omega, const LatticeCharge& base,
                        const SolutionRecord& record) {
  const double im = record.cbar().imag();
  if (!(im > 0.0) || record.classification == Classification::CollinearRational) {
    throw DomainError("collinear records do not define a map to a torus");
  }
  const CVector u = cover_coefficients(base, record);
  const cplx form = (u.array() * (omega.imag_part().cast<cplx>() * u.conjugate()).array()).sum();
  return form.real() / im;
}

std::int64_t cover_degree(const PeriodMatrix& omega, const LatticeCharge& base,
                          const SolutionRecord& record) {
  const double d = cover_degree_raw(omega, base, record);
  const double rounded = std::nearbyint(d);
  if (std::abs(d - rounded) > 1e-8 || rounded < 1.0) {
    std::ostringstream msg;
    msg << "covering degree " << d << " is not a positive integer";
    throw NotIntegralDegree(msg.str());
  }
  return static_cast<std::int64_t>(rounded);
}

double cm_wedge_residual(const PeriodMatrix& omega, const LatticeCharge& base,
                         const LatticeCharge& probe) {
  const CVector v = charge_vector(omega, base);
  const CVector vp = charge_vector(omega, probe);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    for (Eigen::Index k = j + 1; k < v.size(); ++k) {
      worst = std::max(worst, std::abs(v(j) * vp(k) - v(k) * vp(j)));
    }
  }
  return worst;
}

CoverWitness witness_from_record(const LatticeCharge& base, const SolutionRecord& record) {
  const LatticeCharge probe = record.oriented_probe();
  return {base.m, base.n, -probe.m, -probe.n};
}

double cm_relation_check(const PeriodMatrix& omega, cplx tau, const IVector& M, const IVector& N,
                         const IVector& Mprime, const IVector& Nprime) {
  const int h = omega.genus();
  if (M.size() != h || N.size() != h || Mprime.size() != h || Nprime.size() != h) {
    throw std::invalid_argument("witness vectors must have length equal to the genus");
  }
  const CVector lhs = to_complex(Mprime) + tau * to_complex(M);
  const CVector row = to_complex(Nprime) + tau * to_complex(N);
  const CVector rhs = omega.entries().transpose() * row;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

CVector psf_d_vector(const PeriodMatrix& omega, const LatticeCharge& charge) {
  if (omega.genus() != charge.genus()) {
    throw std::invalid_argument("charge genus does not match period matrix");
  }
  return to_complex(charge.n) - omega.entries().transpose() * to_complex(charge.m);
}

PsfResult psf_check(const PeriodMatrix& omega, const LatticeCharge& base,
                    const LatticeCharge& probe, int j, int trunc) {
  if (j < 0 || j >= omega.genus()) throw std::invalid_argument("index j out of range");
  if (trunc < 0) throw std::invalid_argument("truncation must be non-negative");
  PsfResult out;
  out.d = psf_d_vector(omega, base)(j);
  out.d_prime = psf_d_vector(omega, probe)(j);
  if (out.d == 0.0 || out.d_prime == 0.0) throw ConvergenceDomain("D_j or D'_j vanishes");
  const cplx x = out.d_prime / out.d;
  if (!(x.real() > 0.0)) {
    std::ostringstream msg;
    msg << "Re(D'/D) = " << x.real() << " <= 0; theta sums diverge";
    throw ConvergenceDomain(msg.str());
  }
  const cplx inv_x = 1.0 / x;
  cplx left = 1.0;
  cplx right = 1.0;
  for (int k = 1; k <= trunc; ++k) {
    const double kk = static_cast<double>(k) * k;
    left += 2.0 * std::exp(-kk * kPi * x);
    right += 2.0 * std::exp(-kk * kPi * inv_x);
  }
  out.lhs = left;
  out.rhs = std::sqrt(out.d / out.d_prime) * right;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace flatspec::special
