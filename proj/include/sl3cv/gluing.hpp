#pragma once
// The algebra endomorphism q* induced by gluing two boundary circles of the
// three-holed sphere into the one-holed torus: substitute each coordinate by
// its image polynomial. The image table is machine-read from a fixture and
// numerically certified against trace words before any theorem suite uses it.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sl3cv/poisson.hpp"
#include "sl3cv/trace_oracle.hpp"

namespace sl3cv {

struct QStarTable {
  std::array<RingElement, VarIndex::kCount> images;  // slot order
  double certification_residual = 0.0;               // worst image-vs-word gap

  const RingElement& image(VarIndex v) const { return images[v.slot()]; }
};

// The trace word certifying image(v): the defining word of v with the second
// generator replaced by b a^(-1) b^(-1), freely reduced. E.g. the image of
// t(4) is certified against tr of "abaB".
Word qstar_word(VarIndex v);

// The bundled fixture text (nine lines "t(i) -> polynomial").
std::string_view embedded_qstar_fixture();

// Parse a fixture, check the structural facts (t(1), t(-1) fixed; t(2),
// t(-2) swapped to t(-1), t(1); t(3) to t(5); t(-3) to P - t(5)), and
// certify all nine images numerically. Throws std::runtime_error with the
// offending image on certification failure (the signature of a transcription
// error in the fixture).
QStarTable build_qstar(const CharRing& ring, std::string_view fixture_text, int samples,
                       std::uint64_t seed, double tol);
QStarTable build_qstar(const CharRing& ring, int samples = 100, std::uint64_t seed = 0,
                       double tol = 1e-8);

// f composed with the gluing: substitute all nine generators by their
// images and reduce. An algebra homomorphism.
RingElement apply_qstar(const CharRing& ring, const QStarTable& table, const RingElement& f);
// Same on a plain polynomial (may involve t(5)), reduced afterwards.
RingElement apply_qstar_poly(const CharRing& ring, const QStarTable& table, const Poly& p);

// For every unordered generator pair, whether
//   bracket(q*f, q*g, torus) + s * q*(bracket(f, g, pants))
// vanishes identically, for s = +1 and s = -1. The theorem demands one
// uniform sign; the orientation convention leaves which one to measurement.
struct AntiPoissonResult {
  struct PairCheck {
    VarIndex i, j;
    bool plus_vanishes, minus_vanishes;
  };
  std::vector<PairCheck> pairs;  // the 36 unordered pairs
  int sign = 0;                  // +1 or -1 when uniform; 0 when neither works

  bool uniform() const { return sign != 0; }
};
AntiPoissonResult verify_anti_poisson(const CharRing& ring, const BiVector& pants,
                                      const BiVector& torus, const QStarTable& table,
                                      bool parallel = true);

// The torus bracket restricted to the image subalgebra, spanned by the
// images of t(4), t(-4), t(5): a 3x3 antisymmetric matrix with entries
// a = {q*t4, q*t-4}, b = {q*t4, q*t5}, c = {q*t-4, q*t5}.
struct RestrictedBiVector {
  RingElement a, b, c;
};
RestrictedBiVector build_restricted_bivector(const CharRing& ring, const BiVector& torus,
                                             const QStarTable& table);
int restricted_bivector_rank(const RestrictedBiVector& r, const Point9& point, double tol);

}  // namespace sl3cv
