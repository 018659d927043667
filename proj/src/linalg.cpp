#include "sl3cv/linalg.hpp"

namespace sl3cv {

int numeric_rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > tol * sv(0)) ++rank;
  return rank;
}

KernelResult kernel_basis(const Eigen::MatrixXcd& m, double tol) {
  KernelResult out;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  if (sv.size() > 0 && sv(0) > 0.0) {
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) > tol * sv(0)) ++out.rank;
  }
  if (out.rank > 0) out.smallest_kept = sv(out.rank - 1);
  out.basis = svd.matrixV().rightCols(m.cols() - out.rank);
  return out;
}

}  // namespace sl3cv
