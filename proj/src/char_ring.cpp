#include "sl3cv/char_ring.hpp"

#include <stdexcept>

namespace sl3cv {

namespace {

using Gen = D4Element::Gen;
using Factors = std::vector<std::pair<int, unsigned>>;

Poly table_poly(const std::vector<std::pair<long, Factors>>& rows) {
  Poly p;
  for (const auto& [c, factors] : rows) {
    Monomial m;
    for (auto [v, e] : factors) m = m * Monomial::power(var(v), e);
    p += Poly::term(Rational(c), m);
  }
  return p;
}

// Seed whose full symmetrization, scaled by 1/8 and shifted by -3, gives the
// linear relation coefficient of the variety's defining equation.
const std::vector<std::pair<long, Factors>> kSeedP = {
    {1, {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}}},
    {-4, {{1, 1}, {-2, 1}, {-4, 1}}},
    {2, {{1, 1}, {-1, 1}}},
    {2, {{3, 1}, {-3, 1}}},
};

// Seed for the constant coefficient: symmetrize the 1/8 multiple, add 9.
const std::vector<std::pair<long, Factors>> kSeedQ = {
    {2, {{-2, 1}, {-1, 2}, {1, 2}, {2, 1}}},
    {4, {{1, 2}, {2, 2}, {3, 1}}},
    {-4, {{1, 3}, {-2, 1}, {2, 1}}},
    {-8, {{-4, 1}, {-2, 1}, {-1, 1}, {1, 2}}},
    {-4, {{4, 1}, {3, 1}, {2, 1}, {1, 1}, {-2, 1}}},
    {8, {{1, 1}, {3, 1}, {-4, 2}}},
    {8, {{-4, 1}, {1, 1}, {2, 2}}},
    {-8, {{3, 2}, {2, 1}, {1, 1}}},
    {4, {{4, 1}, {-3, 1}, {2, 2}}},
    {1, {{-2, 1}, {-1, 1}, {2, 1}, {1, 1}}},
    {1, {{-3, 1}, {-4, 1}, {3, 1}, {4, 1}}},
    {4, {{-3, 1}, {-1, 1}, {3, 1}, {1, 1}}},
    {4, {{1, 3}}},
    {4, {{3, 3}}},
    {12, {{-4, 1}, {-2, 1}, {1, 1}}},
    {-12, {{-4, 1}, {2, 1}, {3, 1}}},
    {-12, {{1, 1}, {-1, 1}}},
    {-12, {{3, 1}, {-3, 1}}},
};

}  // namespace

D4Group::D4Group() {
  auto raw_compose = [](const D4Element& g, const D4Element& h, std::string name) {
    D4Element out;
    for (int s = 0; s < 8; ++s) out.perm_[s] = g.perm_[h.perm_[s]];
    out.flip_ = g.flip_ != h.flip_;
    out.name_ = std::move(name);
    out.word_ = g.word_;
    out.word_.insert(out.word_.end(), h.word_.begin(), h.word_.end());
    return out;
  };

  D4Element e;
  for (int s = 0; s < 8; ++s) e.perm_[s] = static_cast<std::int8_t>(s);
  e.name_ = "e";

  // Swap the two group generators: t(1)<->t(2), t(-1)<->t(-2), t(4)<->t(-4).
  D4Element s;
  s.perm_ = {2, 3, 0, 1, 4, 5, 7, 6};
  s.flip_ = true;
  s.name_ = "s";
  s.word_ = {Gen::SwapGens};

  // Invert the first generator: t(1)<->t(-1), t(3)<->t(-4), t(-3)<->t(4).
  D4Element i1;
  i1.perm_ = {1, 0, 2, 3, 7, 6, 5, 4};
  i1.flip_ = true;
  i1.name_ = "i1";
  i1.word_ = {Gen::InvFirst};

  D4Element i2 = raw_compose(s, raw_compose(i1, s, ""), "i2");
  D4Element i12 = raw_compose(i1, i2, "i12");
  D4Element si1 = raw_compose(s, i1, "si1");
  D4Element i1s = raw_compose(i1, s, "i1s");
  D4Element i1si1 = raw_compose(i1, raw_compose(s, i1, ""), "i1si1");

  elements_ = {e, s, i1, i2, i12, si1, i1s, i1si1};

  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (elements_[a] == elements_[b])
        throw std::logic_error("D4Group: duplicate element in construction");
  for (const auto& g : elements_)
    for (const auto& h : elements_)
      index_of(canonical(raw_compose(g, h, "")));  // throws if not closed
}

const D4Element& D4Group::inv_second() const { return elements_[3]; }
const D4Element& D4Group::inv_both() const { return elements_[4]; }

const D4Element& D4Group::canonical(const D4Element& g) const {
  for (const auto& e : elements_)
    if (e == g) return e;
  throw std::logic_error("D4Group: element not in group");
}

int D4Group::index_of(const D4Element& g) const {
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k] == g) return static_cast<int>(k);
  throw std::logic_error("D4Group: element not in group");
}

const D4Element& D4Group::compose(const D4Element& g, const D4Element& h) const {
  D4Element out;
  for (int s = 0; s < 8; ++s) out.perm_[s] = g.perm_[h.perm_[s]];
  out.flip_ = g.flip_ != h.flip_;
  return canonical(out);
}

GroupRingElement GroupRingElement::scaled(const Rational& c) const {
  GroupRingElement out;
  for (const auto& t : terms_) out.add(t.coeff * c, t.element);
  return out;
}

GroupRingElement GroupRingElement::multiplied(const GroupRingElement& o,
                                              const D4Group& group) const {
  GroupRingElement out;
  for (const auto& x : terms_)
    for (const auto& y : o.terms_)
      out.add(x.coeff * y.coeff, group.compose(x.element, y.element));
  return out;
}

GroupRingElement GroupRingElement::collected(const D4Group& group) const {
  std::array<Rational, 8> coeffs{};
  for (const auto& t : terms_) coeffs[group.index_of(t.element)] += t.coeff;
  GroupRingElement out;
  for (int k = 0; k < 8; ++k)
    if (!coeffs[k].is_zero()) out.add(coeffs[k], group.elements()[k]);
  return out;
}

RingElement::RingElement(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.contains(var(5)) || b_.contains(var(5)))
    throw std::invalid_argument("RingElement: parts must be free of t(5)");
}

Poly RingElement::lift() const { return a_ + b_ * Poly::variable(var(5)); }

CharRing::CharRing() {
  Poly symP = symmetrized({{Rational(1), table_poly(kSeedP)}});
  P_ = symP.scaled(Rational(1, 8)) + Poly(Rational(-3));
  Poly symQ = symmetrized({{Rational(1, 8), table_poly(kSeedQ)}});
  Q_ = symQ + Poly(Rational(9));

  Poly t5 = Poly::variable(var(5));
  relation_ = t5 * t5 - P_ * t5 + Q_;
}

Poly CharRing::symmetrized(const std::vector<std::pair<Rational, Poly>>& seeds) const {
  Poly out;
  for (const auto& [c, seed] : seeds)
    for (const auto& g : group_.elements()) out += d4_apply_poly(g, seed).scaled(c);
  return out;
}

RingElement CharRing::generator(VarIndex v) const {
  if (v.value() == 5) return RingElement(Poly(), Poly(Rational(1)));
  return RingElement(Poly::variable(v), Poly());
}

RingElement CharRing::reduce(const Poly& p) const {
  const VarIndex t5 = var(5);
  int top = p.degree_in(t5);
  if (top <= 0) return RingElement(p, Poly());
  std::vector<Poly> coeffs(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) coeffs[k] = p.coefficient_of(t5, static_cast<unsigned>(k));
  for (int n = top; n >= 2; --n) {
    if (coeffs[n].is_zero()) continue;
    coeffs[n - 1] += coeffs[n] * P_;
    coeffs[n - 2] -= coeffs[n] * Q_;
    coeffs[n] = Poly();
  }
  return RingElement(coeffs[0], coeffs[1]);
}

RingElement CharRing::ring_mul(const RingElement& x, const RingElement& y) const {
  // (a1 + b1 t5)(a2 + b2 t5) with t5^2 = P t5 - Q.
  Poly bb = x.b() * y.b();
  Poly a = x.a() * y.a() - bb * Q_;
  Poly b = x.a() * y.b() + x.b() * y.a() + bb * P_;
  return RingElement(std::move(a), std::move(b));
}

RingElement CharRing::ring_pow(const RingElement& x, unsigned n) const {
  RingElement result = constant(Rational(1));
  RingElement base = x;
  while (n > 0) {
    if (n & 1u) result = ring_mul(result, base);
    base = ring_mul(base, base);
    n >>= 1u;
  }
  return result;
}

Poly CharRing::d4_apply_poly(const D4Element& g, const Poly& p) const {
  const VarIndex t5 = var(5);
  Poly permuted;
  for (const auto& [m, c] : p.terms()) {
    Monomial image;
    for (int s = 0; s < VarIndex::kCount; ++s) {
      unsigned e = m.exponent_at_slot(s);
      if (e > 0) image = image * Monomial::power(g.apply(VarIndex::at_slot(s)), e);
    }
    permuted += Poly::term(c, image);
  }
  if (!g.flips_t5() || permuted.degree_in(t5) <= 0) return permuted;
  Poly::Substitution images;
  for (VarIndex v : VarIndex::all()) images.emplace(v.value(), Poly::variable(v));
  images[5] = P_ - Poly::variable(t5);
  return permuted.substitute(images);
}

RingElement CharRing::d4_apply(const D4Element& g, const RingElement& f) const {
  Poly ga = d4_apply_poly(g, f.a());
  Poly gb = d4_apply_poly(g, f.b());
  if (!g.flips_t5()) return RingElement(std::move(ga), std::move(gb));
  return RingElement(ga + gb * P_, -gb);
}

RingElement CharRing::groupring_apply(const GroupRingElement& s, const RingElement& f) const {
  RingElement out;
  for (const auto& t : s.terms()) out += d4_apply(t.element, f).scaled(t.coeff);
  return out;
}

double CharRing::relation_residual(const Point9& point) const {
  const Complex t5 = point[var(5).slot()];
  return std::abs(relation_.eval(point)) / (1.0 + std::norm(t5));
}

CharRing::Projection CharRing::branched_projection(const Point9& point, double tol) const {
  double res = relation_residual(point);
  if (!(res <= tol))
    throw std::invalid_argument("branched_projection: point is off the variety (residual " +
                                std::to_string(res) + ")");
  Projection proj;
  for (int s = 0; s < 8; ++s) proj.base[s] = point[s];
  proj.companion = P_.eval(point) - point[var(5).slot()];
  return proj;
}

Complex CharRing::discriminant(const Point9& point) const {
  Complex p = P_.eval(point);
  return p * p - 4.0 * Q_.eval(point);
}

}  // namespace sl3cv
