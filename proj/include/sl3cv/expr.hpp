#pragma once
// Expression parsing and lowering for the CLI and fixture files. Grammar:
// rational literals, variables t(i), trace words tr(w) over a/A/b/B,
// operators + - * ^ (non-negative integer exponent), parentheses.
// Precedence ^ > * > unary- > binary +/-, left associative.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sl3cv/char_ring.hpp"
#include "sl3cv/trace_oracle.hpp"

namespace sl3cv {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// Resolves trace words to ring elements, up to free reduction and cyclic
// rotation (trace is a conjugation invariant). Seeded with the nine defining
// words; certified fixture images may be added on top. Unknown words stay
// unknown: there is no general trace rewriter here.
class TraceWordTable {
 public:
  explicit TraceWordTable(const CharRing& ring);

  // Throws std::logic_error if the word is already present with a different
  // element (two certified sources disagreeing would be a build bug).
  void add(const Word& w, const RingElement& image);
  const RingElement* lookup(const Word& w) const;

 private:
  static std::string cyclic_key(const Word& w);
  std::map<std::string, RingElement> table_;
};

class Expression {
 public:
  struct Node;  // parse-tree node; defined in the implementation

  static Expression parse(std::string_view text);  // throws ParseError

  // Lower to a canonical residue. Trace words resolve through the table;
  // unknown ones raise ParseError at the word's position.
  RingElement lower(const CharRing& ring, const TraceWordTable& words) const;

  // Lower to a plain polynomial; trace words are rejected. Used for fixture
  // lines, which are pure polynomial text.
  Poly to_poly() const;

 private:
  std::shared_ptr<const Node> root_;
};

// Parse canonical polynomial text (no trace words).
Poly parse_polynomial(std::string_view text);

}  // namespace sl3cv
