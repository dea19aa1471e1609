#pragma once

#include <cstdint>

#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

namespace testsupport {

using namespace flatspec;

// SplitMix64: small, portable, and fully specified, so property-test inputs
// are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next() % span);
  }
  /// Uniform in [lo, hi).
  double real(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

inline IVector ivec(std::initializer_list<std::int64_t> xs) {
  IVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

inline IVector random_ivec(Rng& rng, int h, std::int64_t bound) {
  IVector v(h);
  for (int k = 0; k < h; ++k) v(k) = rng.integer(-bound, bound);
  return v;
}

inline LatticeCharge random_charge(Rng& rng, int h, std::int64_t bound) {
  return {random_ivec(rng, h, bound), random_ivec(rng, h, bound)};
}

inline CyclePair random_cycle(Rng& rng, int h, std::int64_t bound) {
  return {random_ivec(rng, h, bound), random_ivec(rng, h, bound)};
}

inline PeriodMatrix worked_genus2() {
  CMatrix om(2, 2);
  om << cplx(0, 1), cplx(0, 0.5), cplx(0, 0.5), cplx(0, 2.5);
  return validate_period_matrix(om);
}

inline LatticeCharge worked_base() { return {ivec({1, 1}), ivec({1, 2})}; }

/// Rejection sample of SL(2, Z) with entries in [-bound, bound].
inline ModularMatrix random_sl2(Rng& rng, std::int64_t bound) {
  while (true) {
    const std::int64_t a = rng.integer(-bound, bound), b = rng.integer(-bound, bound);
    const std::int64_t c = rng.integer(-bound, bound), d = rng.integer(-bound, bound);
    if (a * d - b * c == 1) return ModularMatrix::make(a, b, c, d);
  }
}

inline cplx random_upper(Rng& rng, double min_im = 0.3) {
  return {rng.real(-2.0, 2.0), rng.real(min_im, 3.0)};
}

inline std::int64_t idot(const IVector& a, const IVector& b) { return a.dot(b); }

}  // namespace testsupport
