#pragma once
// Symplectic-leaf geometry: boundary maps for the two surfaces, leaf tangent
// spaces as numeric Jacobian kernels, the pointwise transversality check,
// and the symbolic elimination report behind the intersection bound.

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "sl3cv/char_ring.hpp"

namespace sl3cv {

enum class Surface { Pants, Torus };

// Pants boundary: the six traces t(+-1), t(+-2), t(+-3).
std::array<Complex, 6> boundary_pants(const Point9& point);
// Torus boundary: (t(5), P - t(5)); the components sum to P at the point.
std::array<Complex, 2> boundary_torus(const CharRing& ring, const Point9& point);

// A leaf as a fiber of the boundary map: which surface, and the fixed
// boundary values at the chosen base point.
struct LeafSpec {
  Surface surface;
  std::vector<Complex> level;
};
LeafSpec leaf_through(const CharRing& ring, const Point9& point, Surface surface);

// Numeric kernel of the Jacobian of the leaf's defining functions at the
// point: the relation plus the boundary coordinate functions. Expected
// dimensions: 2 for pants, 6 for torus at generic points.
struct TangentBasis {
  Eigen::MatrixXcd basis;  // 9 x dim, orthonormal columns
  std::vector<double> singular_values;
  double smallest_kept = 0.0;
  int dim() const { return static_cast<int>(basis.cols()); }
};
TangentBasis tangent_space(const CharRing& ring, const Point9& point, const LeafSpec& spec,
                           double tol);

struct TangentReport {
  int dim_pants = 0, dim_torus = 0, dim_sum = 0, dim_intersection = 0;
  bool generic = true;      // false when a singularity heuristic trips
  std::string diagnostic;   // why the point was flagged, when it was
  double discriminant_abs = 0.0;
  double smallest_kept_sv = 0.0;
  // Rank of the pants kernel projected onto the (t4, t-4, t5) directions;
  // 2 when the leaf is parametrized by flows in the glued coordinates.
  int pants_projection_rank = 0;

  bool transversal() const {
    return dim_pants == 2 && dim_torus == 6 && dim_sum == 8 && dim_intersection == 0;
  }
};
// Both kernels, their sum (rank of the stacked bases) and intersection (by
// the Grassmann dimension formula), plus genericity diagnostics.
TangentReport transversality_check(const CharRing& ring, const Point9& point, double tol);

// Eliminating t(4) between P = C and Q = D (C, D fresh boundary-level
// variables): substitute the solved t(4) into Q - D and clear the cubed
// denominator t(-4) - t(-1)t(2). The cleared polynomial must have degree 6
// in t(-4) with a constant leading coefficient; on the special branch
// t(-4) = t(-1)t(2), Q - D must have degree 3 in t(4), again with constant
// lead. The degree bounds cap a generic leaf intersection at 6 points.
struct EliminationReport {
  int degree_q_in_t4 = 0;            // expected 3
  int main_branch_degree = 0;        // in t(-4); expected 6
  std::string main_branch_leading;   // printed verbatim
  bool main_branch_leading_constant = false;
  int special_branch_degree = 0;     // in t(4); expected 3
  std::string special_branch_leading;
  bool special_branch_leading_constant = false;

  bool ok() const {
    return degree_q_in_t4 == 3 && main_branch_degree == 6 && main_branch_leading_constant &&
           special_branch_degree == 3 && special_branch_leading_constant;
  }
};
EliminationReport elimination_check(const CharRing& ring);

}  // namespace sl3cv
