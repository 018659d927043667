#include "sl3cv/expr.hpp"

#include <cctype>

namespace sl3cv {

struct Expression::Node {
  enum class Kind { Number, Var, Trace, Neg, Add, Sub, Mul, Pow };
  Kind kind;
  std::size_t offset = 0;
  Rational number;
  int var_value = 0;
  Word word;
  std::shared_ptr<const Node> lhs, rhs;
  unsigned exponent = 0;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

std::shared_ptr<Node> make(Node::Kind kind, std::size_t offset) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->offset = offset;
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    NodePtr node = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return node;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
  }

  unsigned long long parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a digit", pos_);
    unsigned long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
      if (value > (1ull << 62)) throw ParseError("number too large", pos_);
      ++pos_;
    }
    return value;
  }

  NodePtr parse_expr() {
    skip_ws();
    std::size_t offset = pos_;
    bool negated = consume('-');
    NodePtr node = parse_term();
    if (negated) {
      auto neg = make(Node::Kind::Neg, offset);
      neg->lhs = node;
      node = neg;
    }
    for (;;) {
      skip_ws();
      std::size_t op_at = pos_;
      if (consume('+') || consume('-')) {
        auto bin = make(text_[op_at] == '+' ? Node::Kind::Add : Node::Kind::Sub, op_at);
        bin->lhs = node;
        bin->rhs = parse_term();
        node = bin;
      } else {
        return node;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr node = parse_factor();
    for (;;) {
      skip_ws();
      std::size_t op_at = pos_;
      if (consume('*')) {
        auto bin = make(Node::Kind::Mul, op_at);
        bin->lhs = node;
        bin->rhs = parse_factor();
        node = bin;
      } else {
        return node;
      }
    }
  }

  NodePtr parse_factor() {
    NodePtr node = parse_primary();
    skip_ws();
    std::size_t op_at = pos_;
    if (consume('^')) {
      auto pow = make(Node::Kind::Pow, op_at);
      pow->lhs = node;
      pow->exponent = static_cast<unsigned>(parse_uint());
      return pow;
    }
    return node;
  }

  NodePtr parse_primary() {
    skip_ws();
    std::size_t offset = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      skip_ws();
      expect(')', "to close the parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = static_cast<long>(parse_uint());
      auto node = make(Node::Kind::Number, offset);
      skip_ws();
      if (consume('/')) {
        long den = static_cast<long>(parse_uint());
        if (den == 0) throw ParseError("zero denominator", offset);
        node->number = Rational(num, den);
      } else {
        node->number = Rational(num);
      }
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (std::isalpha(static_cast<unsigned char>(peek()))) ident += text_[pos_++];
      if (ident == "t") {
        skip_ws();
        expect('(', "after t");
        skip_ws();
        bool neg = consume('-');
        long value = static_cast<long>(parse_uint());
        if (neg) value = -value;
        skip_ws();
        expect(')', "to close t(...)");
        auto node = make(Node::Kind::Var, offset);
        try {
          node->var_value = VarIndex::of(static_cast<int>(value)).value();
        } catch (const std::invalid_argument&) {
          throw ParseError("unknown variable t(" + std::to_string(value) + ")", offset);
        }
        return node;
      }
      if (ident == "tr") {
        skip_ws();
        expect('(', "after tr");
        std::string letters;
        while (peek() != ')' && peek() != '\0') letters += text_[pos_++];
        expect(')', "to close tr(...)");
        auto node = make(Node::Kind::Trace, offset);
        try {
          node->word = Word::parse(letters);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), offset);
        }
        return node;
      }
      throw ParseError("unknown identifier '" + ident + "'", offset);
    }
    throw ParseError("expected a number, t(i), tr(word), or '('", offset);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

RingElement lower_node(const Node& node, const CharRing& ring, const TraceWordTable& words) {
  switch (node.kind) {
    case Node::Kind::Number:
      return ring.constant(node.number);
    case Node::Kind::Var:
      return ring.generator(VarIndex::of(node.var_value));
    case Node::Kind::Trace: {
      const RingElement* found = words.lookup(node.word);
      if (!found)
        throw ParseError("unknown trace word tr(" + node.word.str() + ")", node.offset);
      return *found;
    }
    case Node::Kind::Neg:
      return -lower_node(*node.lhs, ring, words);
    case Node::Kind::Add:
      return lower_node(*node.lhs, ring, words) + lower_node(*node.rhs, ring, words);
    case Node::Kind::Sub:
      return lower_node(*node.lhs, ring, words) - lower_node(*node.rhs, ring, words);
    case Node::Kind::Mul:
      return ring.ring_mul(lower_node(*node.lhs, ring, words),
                           lower_node(*node.rhs, ring, words));
    case Node::Kind::Pow:
      return ring.ring_pow(lower_node(*node.lhs, ring, words), node.exponent);
  }
  throw std::logic_error("lower: bad node");
}

Poly poly_node(const Node& node) {
  switch (node.kind) {
    case Node::Kind::Number:
      return Poly(node.number);
    case Node::Kind::Var:
      return Poly::variable(VarIndex::of(node.var_value));
    case Node::Kind::Trace:
      throw ParseError("trace words are not allowed in polynomial text", node.offset);
    case Node::Kind::Neg:
      return -poly_node(*node.lhs);
    case Node::Kind::Add:
      return poly_node(*node.lhs) + poly_node(*node.rhs);
    case Node::Kind::Sub:
      return poly_node(*node.lhs) - poly_node(*node.rhs);
    case Node::Kind::Mul:
      return poly_node(*node.lhs) * poly_node(*node.rhs);
    case Node::Kind::Pow:
      return poly_node(*node.lhs).pow(node.exponent);
  }
  throw std::logic_error("to_poly: bad node");
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.root_ = Parser(text).run();
  return e;
}

RingElement Expression::lower(const CharRing& ring, const TraceWordTable& words) const {
  return lower_node(*root_, ring, words);
}

Poly Expression::to_poly() const { return poly_node(*root_); }

Poly parse_polynomial(std::string_view text) { return Expression::parse(text).to_poly(); }

TraceWordTable::TraceWordTable(const CharRing& ring) {
  add(Word(), ring.constant(Rational(3)));  // trace of the identity
  const auto& words = defining_words();
  for (int s = 0; s < VarIndex::kCount; ++s)
    add(words[s], ring.generator(VarIndex::at_slot(s)));
}

std::string TraceWordTable::cyclic_key(const Word& w) {
  std::vector<int> letters = w.freely_reduced().letters();
  // Cyclically reduce: a trace is invariant under conjugation.
  while (letters.size() >= 2 && letters.front() == -letters.back()) {
    letters.erase(letters.begin());
    letters.pop_back();
  }
  if (letters.empty()) return "";
  std::string best;
  for (std::size_t r = 0; r < letters.size(); ++r) {
    std::vector<int> rotated(letters.begin() + static_cast<long>(r), letters.end());
    rotated.insert(rotated.end(), letters.begin(), letters.begin() + static_cast<long>(r));
    std::string key = Word(rotated).str();
    if (best.empty() || key < best) best = key;
  }
  return best;
}

void TraceWordTable::add(const Word& w, const RingElement& image) {
  std::string key = cyclic_key(w);
  auto [it, inserted] = table_.emplace(key, image);
  if (!inserted && it->second != image)
    throw std::logic_error("TraceWordTable: conflicting images for tr(" + w.str() + ")");
}

const RingElement* TraceWordTable::lookup(const Word& w) const {
  auto it = table_.find(cyclic_key(w));
  return it == table_.end() ? nullptr : &it->second;
}

}  // namespace sl3cv
