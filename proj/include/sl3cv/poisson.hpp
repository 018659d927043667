#pragma once
// Poisson bi-vectors on the character variety: the one induced by the
// three-holed sphere decomposition of the surface and the one induced by the
// one-holed torus, plus the coordinate contraction bracket and its checks.

#include <Eigen/Dense>
#include <map>
#include <utility>

#include "sl3cv/char_ring.hpp"

namespace sl3cv {

// An antisymmetric coefficient table V = sum a_{i,j} d_i ^ d_j over ordered
// coordinate pairs (storage order on slots). Accumulating at (j, i) with
// i before j stores the negated coefficient at (i, j).
class BiVector {
 public:
  using PairKey = std::pair<int, int>;  // slots, first < second

  void accumulate(VarIndex i, VarIndex j, const RingElement& coeff);
  // Signed coefficient at (i, j); zero element when absent. i == j gives 0.
  RingElement coefficient(VarIndex i, VarIndex j) const;
  const std::map<PairKey, RingElement>& pairs() const { return pairs_; }

  // Matrix of coefficient values at a numeric point, 9x9 antisymmetric.
  Eigen::MatrixXcd matrix_at(const Point9& point) const;

 private:
  std::map<PairKey, RingElement> pairs_;
};

// Apply a group-ring element to the wedge coeff * d_i ^ d_j: each term maps
// the coefficient through the index symmetry and transports both directions,
// with the orientation sign when the transported pair arrives out of order.
void accumulate_wedge_orbit(BiVector& out, const CharRing& ring, const GroupRingElement& s,
                            VarIndex i, VarIndex j, const RingElement& coeff);

// Boundary traces t(+-1), t(+-2), t(+-3) are Casimirs; the only interactions
// are within {t(4), t(-4), t(5)}.
BiVector build_bivector_pants(const CharRing& ring);
// Boundary trace is t(5) (and its companion P - t(5)); built from four seed
// wedges spread over the symmetry group.
BiVector build_bivector_torus(const CharRing& ring);

// Contraction {f, g} = sum a_{i,j} (d_i f d_j g - d_j f d_i g), reduced.
RingElement bracket(const CharRing& ring, const BiVector& v, const RingElement& f,
                    const RingElement& g);
// Same on arbitrary polynomial representatives (not reduced first); used to
// check that the bracket of the defining relation with anything dies in the
// quotient, which is what makes the bracket well defined there.
RingElement bracket(const CharRing& ring, const BiVector& v, const Poly& f, const Poly& g);

// True when {f, t_i} is identically zero for all nine coordinates.
bool casimir_check(const CharRing& ring, const BiVector& v, const RingElement& f);

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}; identically zero iff Jacobi holds on
// the triple.
RingElement jacobi_defect(const CharRing& ring, const BiVector& v, const RingElement& f,
                          const RingElement& g, const RingElement& h);

// Rank of the coefficient matrix at a numeric point (even by antisymmetry).
int bivector_rank_at(const BiVector& v, const Point9& point, double tol);

}  // namespace sl3cv
