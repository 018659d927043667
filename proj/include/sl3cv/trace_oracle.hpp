#pragma once
// Numeric ground truth. Random SL(3,C) pairs give honest points of the
// character variety; symbolic claims are certified by evaluating both sides
// at many such points. Everything is deterministic in (seed, index).

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sl3cv/char_ring.hpp"

namespace sl3cv {

using Matrix3 = Eigen::Matrix3cd;

// A word in the two free-group generators. Letters are +-1 (first generator
// and its inverse) and +-2 (second); text form uses a/A/b/B.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);     // validates letters
  static Word parse(std::string_view text);    // throws std::invalid_argument

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word freely_reduced() const;
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

  std::string str() const;  // "abAB"; "" for the empty word

 private:
  std::vector<int> letters_;
};

// Replace each generator by a word and freely reduce; the image of w under
// the endomorphism x1 -> img1, x2 -> img2.
Word substitute_generators(const Word& w, const Word& img1, const Word& img2);

// The free-group automorphism realizing an index symmetry, as generator
// images (built from the element's generator word).
struct FreeAut {
  Word x1, x2;
};
FreeAut automorphism_of(const D4Element& g);

// The words whose traces the nine coordinates are, in slot order:
// a, A, b, B, ab, AB, aB, Ab, abAB.
const std::array<Word, VarIndex::kCount>& defining_words();

// Deterministic random stream for one task: (seed, index) fixes the draws.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t index);
  double uniform();  // U[-1, 1]

 private:
  std::mt19937_64 engine_;
};

// Random SL(3,C) matrix: uniform complex entries, rejected while the
// determinant is nearly singular, then scaled by the principal cube root of
// 1/det. Throws after too many rejections (never seen in practice).
Matrix3 sample_sl3(RngStream& rng);

Matrix3 word_eval(const Word& w, const Matrix3& first, const Matrix3& second);

// A numeric point of the variety, remembering where it came from.
struct CharacterPoint {
  Point9 coords;
  Matrix3 first, second;
  double residual;  // relative defect of the defining relation at the point
};

// Trace coordinates of a matrix pair. The relation residual is checked
// against `gate`; a violation means the ring data is wrong, so it throws.
CharacterPoint character_point(const CharRing& ring, const Matrix3& first,
                               const Matrix3& second, double gate = 1e-8);
CharacterPoint sample_character_point(const CharRing& ring, std::uint64_t seed,
                                      std::uint64_t index, double gate = 1e-8);

// Magnitude-aware evaluation: |p(pt)| relative to 1 + the sum of the term
// magnitudes, so a residual near machine epsilon certifies a zero identity.
double zero_residual(const Poly& p, const Point9& point);

// Max over samples of the relative gap between the polynomial and the trace
// of the word at sampled points.
double certify_identity(const CharRing& ring, const Poly& claim, const Word& w,
                        int samples, std::uint64_t seed);
// Max over samples of the relative magnitude of a claimed-zero polynomial.
double certify_zero(const CharRing& ring, const Poly& claim, int samples, std::uint64_t seed);

// Classify how a symmetry acts on the commutator trace by applying its free
// automorphism to the commutator word: either tr stays t(5) or it becomes
// P - t(5). Throws if samples are inconsistent or match neither.
enum class T5Action { Fixed, Flipped };
T5Action determine_t5_action(const CharRing& ring, const D4Element& g, int samples,
                             std::uint64_t seed);

}  // namespace sl3cv
