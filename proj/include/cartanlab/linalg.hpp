// Thin double/complex dense-matrix layer over Eigen. Everything the rest of
// the library needs from numerical linear algebra funnels through here so the
// backend stays swappable and reentrant.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace cartanlab {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = std::vector<double>;

struct EigenvalueFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Singular values, descending. Reentrant (Jacobi-based for small sizes).
Vec singular_values(const Mat& m);
Vec singular_values(const CMat& m);

// Moduli of eigenvalues, descending; throws EigenvalueFailure when the
// underlying iteration does not converge.
Vec eigenvalue_moduli(const Mat& m);
Vec eigenvalue_moduli(const CMat& m);

double determinant(const Mat& m);
std::complex<double> determinant(const CMat& m);

// Inverse with a condition-number guard; throws std::domain_error above cap.
Mat inverse(const Mat& m, double cond_cap = 1e14);
CMat inverse(const CMat& m, double cond_cap = 1e14);

Mat matrix_exp(const Mat& m);

// Realification of a complex matrix: z -> [[re, -im], [im, re]] blockwise.
Mat realify(const CMat& m);

double frobenius(const Mat& m);
double frobenius(const CMat& m);

bool all_finite(const Mat& m);
bool all_finite(const CMat& m);

}  // namespace cartanlab
