#pragma once
// Thin SVD helpers shared by the rank and tangent-space code.

#include <Eigen/Dense>
#include <vector>

#include "sl3cv/poly.hpp"

namespace sl3cv {

// Numeric rank: singular values above tol relative to the largest one.
int numeric_rank(const Eigen::MatrixXcd& m, double tol);

// Orthonormal kernel basis (columns). Optionally reports the singular values
// and the smallest singular value kept above the cut, for genericity gates.
struct KernelResult {
  Eigen::MatrixXcd basis;
  std::vector<double> singular_values;
  int rank = 0;
  double smallest_kept = 0.0;  // smallest singular value counted into the rank
};
KernelResult kernel_basis(const Eigen::MatrixXcd& m, double tol);

}  // namespace sl3cv
