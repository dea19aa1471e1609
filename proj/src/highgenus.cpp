#include "flatspec/highgenus.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatspec/errors.hpp"
#include "flatspec/special.hpp"

namespace flatspec::highgenus {

double RatioMatrix::cocycle_residual() const {
  const Eigen::Index h = entries.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < h; ++j) {
      for (Eigen::Index k = 0; k < h; ++k) {
        worst = std::max(worst, std::abs(entries(i, j) * entries(j, k) - entries(i, k)));
      }
    }
  }
  return worst;
}

double RatioMatrix::inverse_residual() const {
  const Eigen::Index h = entries.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < h; ++j) {
      worst = std::max(worst, std::abs(entries(i, j) * entries(j, i) - 1.0));
    }
  }
  return worst;
}

double RatioMatrix::relative_min_singular_value() const {
  const Eigen::JacobiSVD<CMatrix> svd(entries);
  const RVector& s = svd.singularValues();
  return s(s.size() - 1) / s(0);
}

RatioMatrix ratio_matrix(const PeriodMatrix& omega, const LatticeCharge& base) {
  const CVector v = special::charge_vector(omega, base);
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (std::abs(v(j)) < special::kDegenerateBase) {
      throw DegenerateBase("base charge has a vanishing component; ratios are undefined");
    }
  }
  const Eigen::Index h = v.size();
  RatioMatrix out{CMatrix(h, h)};
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < h; ++j) out.entries(i, j) = v(i) / v(j);
  }
  return out;
}

AnsatzTensors::AnsatzTensors(int h) : h_(h) {
  if (h < 1) throw std::invalid_argument("tensor genus must be >= 1");
  const auto hh = static_cast<std::size_t>(h);
  n4_.assign(hh * hh * hh * hh, Rational(0));
  m2_.assign(hh * hh, Rational(0));
}

AnsatzResiduals verify_ansatz_tensors(const AnsatzTensors& t) {
  const int h = t.genus();
  AnsatzResiduals out{Rational(0), Rational(0)};
  for (int i = 0; i < h; ++i) {
    for (int k = 0; k < h; ++k) {
      for (int j = 0; j < h; ++j) {
        for (int n = 0; n < h; ++n) {
          for (int m = 0; m < h; ++m) {
            Rational sum(0);
            for (int l = 0; l < h; ++l) sum += t.n4(i, k, j, l) * t.n4(j, l, n, m);
            out.cocycle = std::max(out.cocycle, Rational(abs(sum - t.n4(i, k, n, m))));
          }
        }
        Rational msum(0);
        for (int l = 0; l < h; ++l) msum += t.n4(i, k, j, l) * t.m2(j, l);
        out.m_term = std::max(out.m_term, Rational(abs(msum)));
      }
    }
  }
  return out;
}

}  // namespace flatspec::highgenus
