#pragma once

#include <cstdint>
#include <vector>

#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

// Genus-one spectrum of the flat Laplacian Delta = -2 d_z d_zbar on the torus
// C / (Z + tau Z). (The conical-metric convention -|h|^{-2} d_z d_zbar differs
// by a factor 2; multiply eigenvalues here by 1/2 to convert.)
namespace flatspec::torus {

struct SpectrumEntry {
  std::int64_t n = 0;
  std::int64_t m = 0;
  cplx c;         // pi (m - n conj(tau)) / Im tau
  double lambda;  // 2 |c|^2
  double mu;      // Im tau * lambda
};

/// Throws DomainError if Im tau <= 0.
SpectrumEntry eigenvalue(cplx tau, std::int64_t n, std::int64_t m);

/// All charges with |n|, |m| <= max_charge, ordered by (n^2 + m^2, n, m).
std::vector<SpectrumEntry> spectrum_table(cplx tau, std::int64_t max_charge);

/// |mu_{gamma(n,m)}(gamma . tau) - mu_{n,m}(tau)|.
double mu_covariance_residual(cplx tau, const ModularMatrix& gamma, std::int64_t n,
                              std::int64_t m);

/// N x N samples; value(j, k) is the function at z = j/N + tau k/N.
class GridField {
 public:
  GridField(int resolution, std::vector<cplx> samples)
      : n_(resolution), samples_(std::move(samples)) {}
  int resolution() const { return n_; }
  cplx operator()(int j, int k) const { return samples_[index(j, k)]; }
  /// Periodic access: indices are reduced mod N.
  cplx wrapped(int j, int k) const { return samples_[index(mod(j), mod(k))]; }
  const std::vector<cplx>& samples() const { return samples_; }

 private:
  int mod(int j) const { return ((j % n_) + n_) % n_; }
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k);
  }
  int n_;
  std::vector<cplx> samples_;
};

/// h_{n,m}(z) = exp(c z - conj(c) conj(z)) where z = x + tau y. Requires N >= 8.
cplx eigenfunction_value(cplx tau, std::int64_t n, std::int64_t m, double x, double y);
GridField sample_eigenfunction(cplx tau, std::int64_t n, std::int64_t m, int resolution);

/// Largest |h(x+1, y) - h(x, y)| or |h(x, y+1) - h(x, y)| over the grid points.
double wraparound_mismatch(cplx tau, std::int64_t n, std::int64_t m, int resolution);

/// Mean of f * conj(g) over the grid: the trapezoid rule for the normalized
/// flat measure on the torus.
cplx grid_inner_product(const GridField& f, const GridField& g);

struct FdResult {
  double lambda_analytic;
  double relative_residual;
};

/// Applies a second-order finite-difference -2 d_z d_zbar in the (x, y) chart
/// (5-point stencil plus a 4-point cross stencil for the mixed term when
/// Re tau != 0) to the sampled eigenfunction and returns
/// ||Delta_FD h - lambda h|| / ||lambda h||. The zero charge returns 0.
/// Requires N >= 16. Row work may run in parallel; norms are accumulated in a
/// fixed order, so the result is independent of the thread count.
FdResult fd_eigen_residual(cplx tau, std::int64_t n, std::int64_t m, int resolution,
                           unsigned threads = 1);

/// q^{1/24} prod_{k=1}^{terms} (1 - q^k), q = exp(2 pi i tau).
cplx dedekind_eta(cplx tau, int terms = 64);

/// log |eta(tau)| with the product truncated once the tail is below 1e-18
/// relative. Usable for small Im tau where |eta| underflows.
double log_abs_dedekind_eta(cplx tau);

}  // namespace flatspec::torus
