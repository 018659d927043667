#include "sl3cv/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace sl3cv {

namespace {

constexpr std::array<int, VarIndex::kCount> kSlotToValue = {1, -1, 2, -2, 3, -3, 4, -4, 5};

int value_to_slot(int value) {
  switch (value) {
    case 1: return 0;
    case -1: return 1;
    case 2: return 2;
    case -2: return 3;
    case 3: return 4;
    case -3: return 5;
    case 4: return 6;
    case -4: return 7;
    case 5: return 8;
    default: return -1;
  }
}

}  // namespace

VarIndex VarIndex::of(int value) {
  if (value_to_slot(value) < 0)
    throw std::invalid_argument("VarIndex: no coordinate t(" + std::to_string(value) + ")");
  return VarIndex(value);
}

VarIndex VarIndex::at_slot(int slot) {
  if (slot < 0 || slot >= kCount)
    throw std::invalid_argument("VarIndex: slot out of range");
  return VarIndex(kSlotToValue[slot]);
}

const std::array<VarIndex, VarIndex::kCount>& VarIndex::all() {
  static const std::array<VarIndex, kCount> vars = {
      VarIndex(1), VarIndex(-1), VarIndex(2), VarIndex(-2), VarIndex(3),
      VarIndex(-3), VarIndex(4), VarIndex(-4), VarIndex(5)};
  return vars;
}

int VarIndex::slot() const { return value_to_slot(value_); }

VarIndex VarIndex::partner() const {
  if (!has_partner()) throw std::invalid_argument("VarIndex: t(5) has no partner");
  return VarIndex(-value_);
}

std::string VarIndex::str() const { return "t(" + std::to_string(value_) + ")"; }

Monomial Monomial::power(VarIndex v, unsigned e) {
  Monomial m;
  m.e_[v.slot()] = static_cast<std::uint16_t>(e);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int s = 0; s < VarIndex::kCount; ++s)
    m.e_[s] = static_cast<std::uint16_t>(e_[s] + o.e_[s]);
  return m;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? -1 : 1;
  for (int s = 0; s < VarIndex::kCount; ++s) {
    if (a.e_[s] != b.e_[s]) return a.e_[s] > b.e_[s] ? -1 : 1;
  }
  return 0;
}

std::string Monomial::str() const {
  if (is_constant()) return "1";
  std::string out;
  for (int s = 0; s < VarIndex::kCount; ++s) {
    if (e_[s] == 0) continue;
    if (!out.empty()) out += "*";
    out += VarIndex::at_slot(s).str();
    if (e_[s] > 1) out += "^" + std::to_string(e_[s]);
  }
  return out;
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly Poly::variable(VarIndex v) { return term(Rational(1), Monomial::power(v, 1)); }

Poly Poly::term(const Rational& c, const Monomial& m) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

int Poly::degree() const {
  // Leading (first) term has maximal degree under the graded order.
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Poly::degree_in(VarIndex v) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return static_cast<int>(d);
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  Poly p;
  if (c.is_zero()) return p;
  for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
  return p;
}

Poly Poly::pow(unsigned n) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

Poly Poly::partial(VarIndex v) const {
  Poly p;
  const int slot = v.slot();
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent_at_slot(slot);
    if (e == 0) continue;
    Monomial lowered;
    for (int s = 0; s < VarIndex::kCount; ++s) {
      unsigned k = m.exponent_at_slot(s);
      if (s == slot) --k;
      if (k > 0) lowered = lowered * Monomial::power(VarIndex::at_slot(s), k);
    }
    p.add_term(lowered, c * Rational(static_cast<long>(e)));
  }
  return p;
}

Poly Poly::coefficient_of(VarIndex v, unsigned k) const {
  Poly p;
  const int slot = v.slot();
  for (const auto& [m, c] : terms_) {
    if (m.exponent_at_slot(slot) != k) continue;
    Monomial rest;
    for (int s = 0; s < VarIndex::kCount; ++s) {
      if (s == slot) continue;
      unsigned e = m.exponent_at_slot(s);
      if (e > 0) rest = rest * Monomial::power(VarIndex::at_slot(s), e);
    }
    p.add_term(rest, c);
  }
  return p;
}

Poly Poly::substitute(const Substitution& images) const {
  Poly result;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    for (int s = 0; s < VarIndex::kCount; ++s) {
      unsigned e = m.exponent_at_slot(s);
      if (e == 0) continue;
      VarIndex v = VarIndex::at_slot(s);
      auto it = images.find(v.value());
      if (it == images.end())
        throw std::invalid_argument("substitute: no image for " + v.str());
      term *= it->second.pow(e);
    }
    result += term;
  }
  return result;
}

Complex Poly::eval(const Point9& point) const {
  Complex sum = 0.0;
  for (const auto& [m, c] : terms_) {
    Complex t = c.to_double();
    for (int s = 0; s < VarIndex::kCount; ++s)
      for (unsigned k = 0; k < m.exponent_at_slot(s); ++k) t *= point[s];
    sum += t;
  }
  return sum;
}

Rational Poly::eval_exact(const std::array<Rational, VarIndex::kCount>& point) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int s = 0; s < VarIndex::kCount; ++s)
      for (unsigned k = 0; k < m.exponent_at_slot(s); ++k) t *= point[s];
    sum += t;
  }
  return sum;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    if (m.is_constant()) {
      out << a.str();
    } else if (a.is_one()) {
      out << m.str();
    } else {
      out << a.str() << " * " << m.str();
    }
  }
  return out.str();
}

}  // namespace sl3cv
