#include "flatspec/torus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "flatspec/errors.hpp"

namespace flatspec::torus {

namespace {

void require_upper(cplx tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("modulus must lie in the upper half plane");
}

cplx coefficient(cplx tau, std::int64_t n, std::int64_t m) {
  return kPi * (static_cast<double>(m) - static_cast<double>(n) * std::conj(tau)) / tau.imag();
}

// exp(z) - 1 without cancellation near z = 0.
cplx expm1c(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

}  // namespace

SpectrumEntry eigenvalue(cplx tau, std::int64_t n, std::int64_t m) {
  require_upper(tau);
  SpectrumEntry e;
  e.n = n;
  e.m = m;
  e.c = coefficient(tau, n, m);
  const cplx v = static_cast<double>(m) - static_cast<double>(n) * tau;
  e.lambda = 2.0 * kPi * kPi * std::norm(v) / (tau.imag() * tau.imag());
  e.mu = tau.imag() * e.lambda;
  return e;
}

std::vector<SpectrumEntry> spectrum_table(cplx tau, std::int64_t max_charge) {
  require_upper(tau);
  if (max_charge < 0) throw std::invalid_argument("max charge must be non-negative");
  std::vector<SpectrumEntry> out;
  for (std::int64_t n = -max_charge; n <= max_charge; ++n) {
    for (std::int64_t m = -max_charge; m <= max_charge; ++m) out.push_back(eigenvalue(tau, n, m));
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    const auto ra = a.n * a.n + a.m * a.m;
    const auto rb = b.n * b.n + b.m * b.m;
    if (ra != rb) return ra < rb;
    if (a.n != b.n) return a.n < b.n;
    return a.m < b.m;
  });
  return out;
}

double mu_covariance_residual(cplx tau, const ModularMatrix& gamma, std::int64_t n,
                              std::int64_t m) {
  IVector nv(1), mv(1);
  nv(0) = n;
  mv(0) = m;
  const LatticeCharge moved = modular_transform_charge(gamma, {nv, mv});
  const double lhs = eigenvalue(modular_transform_tau(gamma, tau), moved.n(0), moved.m(0)).mu;
  const double rhs = eigenvalue(tau, n, m).mu;
  return std::abs(lhs - rhs);
}

cplx eigenfunction_value(cplx tau, std::int64_t n, std::int64_t m, double x, double y) {
  const cplx c = coefficient(tau, n, m);
  const cplx z = x + tau * y;
  return std::exp(c * z - std::conj(c) * std::conj(z));
}

GridField sample_eigenfunction(cplx tau, std::int64_t n, std::int64_t m, int resolution) {
  require_upper(tau);
  if (resolution < 8) throw std::invalid_argument("grid resolution must be >= 8");
  const double step = 1.0 / resolution;
  std::vector<cplx> samples(static_cast<std::size_t>(resolution) * resolution);
  for (int j = 0; j < resolution; ++j) {
    for (int k = 0; k < resolution; ++k) {
      samples[static_cast<std::size_t>(j) * resolution + k] =
          eigenfunction_value(tau, n, m, j * step, k * step);
    }
  }
  return GridField(resolution, std::move(samples));
}

double wraparound_mismatch(cplx tau, std::int64_t n, std::int64_t m, int resolution) {
  require_upper(tau);
  const double step = 1.0 / resolution;
  double worst = 0.0;
  for (int j = 0; j < resolution; ++j) {
    const double t = j * step;
    const cplx at_x0 = eigenfunction_value(tau, n, m, 0.0, t);
    const cplx at_x1 = eigenfunction_value(tau, n, m, 1.0, t);
    const cplx at_y0 = eigenfunction_value(tau, n, m, t, 0.0);
    const cplx at_y1 = eigenfunction_value(tau, n, m, t, 1.0);
    worst = std::max({worst, std::abs(at_x1 - at_x0), std::abs(at_y1 - at_y0)});
  }
  return worst;
}

cplx grid_inner_product(const GridField& f, const GridField& g) {
  if (f.resolution() != g.resolution()) throw std::invalid_argument("grid resolutions differ");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < f.samples().size(); ++i) {
    sum += f.samples()[i] * std::conj(g.samples()[i]);
  }
  return sum / static_cast<double>(f.samples().size());
}

FdResult fd_eigen_residual(cplx tau, std::int64_t n, std::int64_t m, int resolution,
                           unsigned threads) {
  require_upper(tau);
  if (resolution < 16) throw std::invalid_argument("finite-difference resolution must be >= 16");
  const double lambda = eigenvalue(tau, n, m).lambda;
  if (n == 0 && m == 0) return {0.0, 0.0};

  const GridField h = sample_eigenfunction(tau, n, m, resolution);
  const int N = resolution;
  const double t1 = tau.real();
  const double t2 = tau.imag();
  const double inv_h2 = static_cast<double>(N) * N;
  // -2 d_z d_zbar = -(1/2) [(1 + t1^2/t2^2) d_xx - 2 t1/t2^2 d_xy + 1/t2^2 d_yy]
  const double cxx = -0.5 * (1.0 + t1 * t1 / (t2 * t2)) * inv_h2;
  const double cxy = -0.5 * (-2.0 * t1 / (t2 * t2)) * inv_h2 / 4.0;
  const double cyy = -0.5 / (t2 * t2) * inv_h2;

  std::vector<cplx> applied(static_cast<std::size_t>(N) * N);
  auto rows = [&](int begin, int end) {
    for (int j = begin; j < end; ++j) {
      for (int k = 0; k < N; ++k) {
        const cplx f = h(j, k);
        const cplx dxx = h.wrapped(j + 1, k) - 2.0 * f + h.wrapped(j - 1, k);
        const cplx dyy = h.wrapped(j, k + 1) - 2.0 * f + h.wrapped(j, k - 1);
        const cplx dxy = h.wrapped(j + 1, k + 1) - h.wrapped(j + 1, k - 1) -
                         h.wrapped(j - 1, k + 1) + h.wrapped(j - 1, k - 1);
        applied[static_cast<std::size_t>(j) * N + k] = cxx * dxx + cxy * dxy + cyy * dyy;
      }
    }
  };
  const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(N));
  if (workers == 1) {
    rows(0, N);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const int begin = static_cast<int>(static_cast<long>(N) * w / workers);
      const int end = static_cast<int>(static_cast<long>(N) * (w + 1) / workers);
      pool.emplace_back(rows, begin, end);
    }
  }

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < applied.size(); ++i) {
    const cplx target = lambda * h.samples()[i];
    num += std::norm(applied[i] - target);
    den += std::norm(target);
  }
  return {lambda, std::sqrt(num / den)};
}

cplx dedekind_eta(cplx tau, int terms) {
  require_upper(tau);
  if (terms < 1) throw std::invalid_argument("eta product needs at least one term");
  const cplx two_pi_i_tau = 2.0 * kPi * kI * tau;
  cplx prod = std::exp(two_pi_i_tau / 24.0);
  for (int k = 1; k <= terms; ++k) prod *= -expm1c(two_pi_i_tau * static_cast<double>(k));
  return prod;
}

double log_abs_dedekind_eta(cplx tau) {
  require_upper(tau);
  const double r = 2.0 * kPi * tau.imag();
  // Tail of sum_k log|1 - q^k| is below 2 |q|^(K+1) / (1 - |q|).
  const double one_minus_q = -std::expm1(-r);
  const double needed = (std::log(2.0) - std::log(1e-18) - std::log(one_minus_q)) / r;
  const long terms = std::max(1L, static_cast<long>(std::ceil(needed)));
  const cplx two_pi_i_tau = 2.0 * kPi * kI * tau;
  double sum = -r / 24.0;
  for (long k = 1; k <= terms; ++k) {
    sum += std::log(std::abs(expm1c(two_pi_i_tau * static_cast<double>(k))));
  }
  return sum;
}

}  // namespace flatspec::torus
