#include "cartanlab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace cartanlab {

Vec singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  return Vec(s.data(), s.data() + s.size());
}

Vec singular_values(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  return Vec(s.data(), s.data() + s.size());
}

Vec eigenvalue_moduli(const Mat& m) {
  Eigen::EigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw EigenvalueFailure("real eigensolver did not converge");
  Vec r(m.rows());
  for (int i = 0; i < m.rows(); ++i) r[i] = std::abs(es.eigenvalues()[i]);
  std::sort(r.rbegin(), r.rend());
  return r;
}

Vec eigenvalue_moduli(const CMat& m) {
  Eigen::ComplexEigenSolver<CMat> es(m, false);
  if (es.info() != Eigen::Success)
    throw EigenvalueFailure("complex eigensolver did not converge");
  Vec r(m.rows());
  for (int i = 0; i < m.rows(); ++i) r[i] = std::abs(es.eigenvalues()[i]);
  std::sort(r.rbegin(), r.rend());
  return r;
}

double determinant(const Mat& m) { return m.determinant(); }
std::complex<double> determinant(const CMat& m) { return m.determinant(); }

Mat inverse(const Mat& m, double cond_cap) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  double smin = s[s.size() - 1], smax = s[0];
  if (smin <= 0 || smax / smin > cond_cap)
    throw std::domain_error("inverse: matrix numerically singular");
  return m.inverse();
}

CMat inverse(const CMat& m, double cond_cap) {
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  double smin = s[s.size() - 1], smax = s[0];
  if (smin <= 0 || smax / smin > cond_cap)
    throw std::domain_error("inverse: matrix numerically singular");
  return m.inverse();
}

Mat matrix_exp(const Mat& m) { return m.exp(); }

Mat realify(const CMat& m) {
  int n = static_cast<int>(m.rows()), k = static_cast<int>(m.cols());
  Mat r(2 * n, 2 * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      double re = m(i, j).real(), im = m(i, j).imag();
      r(2 * i, 2 * j) = re;
      r(2 * i, 2 * j + 1) = -im;
      r(2 * i + 1, 2 * j) = im;
      r(2 * i + 1, 2 * j + 1) = re;
    }
  return r;
}

double frobenius(const Mat& m) { return m.norm(); }
double frobenius(const CMat& m) { return m.norm(); }

bool all_finite(const Mat& m) { return m.allFinite(); }
bool all_finite(const CMat& m) { return m.allFinite(); }

}  // namespace cartanlab
