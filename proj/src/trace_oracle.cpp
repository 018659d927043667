#include "sl3cv/trace_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace sl3cv {

namespace {

bool valid_letter(int v) { return v == 1 || v == -1 || v == 2 || v == -2; }

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int v : letters_)
    if (!valid_letter(v)) throw std::invalid_argument("Word: invalid letter " + std::to_string(v));
}

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': letters.push_back(1); break;
      case 'A': letters.push_back(-1); break;
      case 'b': letters.push_back(2); break;
      case 'B': letters.push_back(-2); break;
      default:
        throw std::invalid_argument(std::string("Word: invalid character '") + c +
                                    "' (expected a, A, b, B)");
    }
  }
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& v : out) v = -v;
  return Word(std::move(out));
}

Word Word::freely_reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int v : letters_) {
    if (!out.empty() && out.back() == -v)
      out.pop_back();
    else
      out.push_back(v);
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (int v : letters_) {
    switch (v) {
      case 1: out += 'a'; break;
      case -1: out += 'A'; break;
      case 2: out += 'b'; break;
      case -2: out += 'B'; break;
    }
  }
  return out;
}

Word substitute_generators(const Word& w, const Word& img1, const Word& img2) {
  const Word inv1 = img1.inverse(), inv2 = img2.inverse();
  std::vector<int> out;
  for (int v : w.letters()) {
    const Word& piece = v == 1 ? img1 : v == -1 ? inv1 : v == 2 ? img2 : inv2;
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word(std::move(out)).freely_reduced();
}

FreeAut automorphism_of(const D4Element& g) {
  FreeAut aut{Word::parse("a"), Word::parse("b")};
  const auto& word = g.word();
  // Rightmost generator acts first; fold from the right, composing on the left.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Word g1, g2;
    if (*it == D4Element::Gen::SwapGens) {
      g1 = Word::parse("b");
      g2 = Word::parse("a");
    } else {
      g1 = Word::parse("A");
      g2 = Word::parse("b");
    }
    aut.x1 = substitute_generators(aut.x1, g1, g2);
    aut.x2 = substitute_generators(aut.x2, g1, g2);
  }
  return aut;
}

const std::array<Word, VarIndex::kCount>& defining_words() {
  static const std::array<Word, VarIndex::kCount> words = {
      Word::parse("a"),  Word::parse("A"),  Word::parse("b"),    Word::parse("B"),
      Word::parse("ab"), Word::parse("AB"), Word::parse("aB"),   Word::parse("Ab"),
      Word::parse("abAB")};
  return words;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform() {
  return std::uniform_real_distribution<double>(-1.0, 1.0)(engine_);
}

Matrix3 sample_sl3(RngStream& rng) {
  constexpr int kMaxRejections = 1000;
  constexpr double kMinAbsDet = 0.05;
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Matrix3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        double re = rng.uniform();
        double im = rng.uniform();
        m(r, c) = Complex(re, im);
      }
    Complex det = m.determinant();
    if (std::abs(det) < kMinAbsDet) continue;
    return m * std::pow(det, Complex(-1.0 / 3.0));  // principal branch
  }
  throw std::runtime_error("sample_sl3: rejection sampling failed to terminate");
}

Matrix3 word_eval(const Word& w, const Matrix3& first, const Matrix3& second) {
  const Matrix3 inv_first = first.inverse();
  const Matrix3 inv_second = second.inverse();
  Matrix3 out = Matrix3::Identity();
  for (int v : w.letters()) {
    switch (v) {
      case 1: out *= first; break;
      case -1: out *= inv_first; break;
      case 2: out *= second; break;
      case -2: out *= inv_second; break;
    }
  }
  return out;
}

CharacterPoint character_point(const CharRing& ring, const Matrix3& first,
                               const Matrix3& second, double gate) {
  CharacterPoint pt;
  pt.first = first;
  pt.second = second;
  const auto& words = defining_words();
  for (int s = 0; s < VarIndex::kCount; ++s)
    pt.coords[s] = word_eval(words[s], first, second).trace();
  pt.residual = ring.relation_residual(pt.coords);
  if (!(pt.residual <= gate))
    throw std::runtime_error("character_point: defining relation violated (residual " +
                             std::to_string(pt.residual) + ")");
  return pt;
}

CharacterPoint sample_character_point(const CharRing& ring, std::uint64_t seed,
                                      std::uint64_t index, double gate) {
  RngStream rng(seed, index);
  Matrix3 first = sample_sl3(rng);
  Matrix3 second = sample_sl3(rng);
  return character_point(ring, first, second, gate);
}

double zero_residual(const Poly& p, const Point9& point) {
  Complex sum = 0.0;
  double scale = 0.0;
  for (const auto& [m, c] : p.terms()) {
    Complex t = c.to_double();
    for (int s = 0; s < VarIndex::kCount; ++s)
      for (unsigned k = 0; k < m.exponent_at_slot(s); ++k) t *= point[s];
    sum += t;
    scale += std::abs(t);
  }
  return std::abs(sum) / (1.0 + scale);
}

double certify_identity(const CharRing& ring, const Poly& claim, const Word& w,
                        int samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    CharacterPoint pt = sample_character_point(ring, seed, static_cast<std::uint64_t>(k));
    Complex traced = word_eval(w, pt.first, pt.second).trace();
    double gap = std::abs(claim.eval(pt.coords) - traced) / (1.0 + std::abs(traced));
    worst = std::max(worst, gap);
  }
  return worst;
}

double certify_zero(const CharRing& ring, const Poly& claim, int samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    CharacterPoint pt = sample_character_point(ring, seed, static_cast<std::uint64_t>(k));
    worst = std::max(worst, zero_residual(claim, pt.coords));
  }
  return worst;
}

T5Action determine_t5_action(const CharRing& ring, const D4Element& g, int samples,
                             std::uint64_t seed) {
  const Word commutator = Word::parse("abAB");
  const FreeAut aut = automorphism_of(g);
  const Word image = substitute_generators(commutator, aut.x1, aut.x2);

  bool always_fixed = true, always_flipped = true;
  for (int k = 0; k < samples; ++k) {
    CharacterPoint pt = sample_character_point(ring, seed, static_cast<std::uint64_t>(k));
    Complex traced = word_eval(image, pt.first, pt.second).trace();
    Complex t5 = pt.coords[var(5).slot()];
    double scale = 1.0 + std::abs(t5);
    if (std::abs(traced - t5) > 1e-8 * scale) always_fixed = false;
    if (std::abs(traced - (ring.P().eval(pt.coords) - t5)) > 1e-8 * scale) always_flipped = false;
  }
  if (always_fixed == always_flipped)
    throw std::runtime_error("determine_t5_action: samples are inconclusive for element " +
                             g.name());
  return always_fixed ? T5Action::Fixed : T5Action::Flipped;
}

}  // namespace sl3cv
