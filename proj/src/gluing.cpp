#include "sl3cv/gluing.hpp"

#include <sstream>
#include <stdexcept>

#include "sl3cv/expr.hpp"
#include "sl3cv/parallel.hpp"

namespace sl3cv {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Word qstar_word(VarIndex v) {
  // Gluing sends the generator pair (x1, x2) to (x1, x2 x1^(-1) x2^(-1)).
  return substitute_generators(defining_words()[v.slot()], Word::parse("a"), Word::parse("bAB"));
}

QStarTable build_qstar(const CharRing& ring, std::string_view fixture_text, int samples,
                       std::uint64_t seed, double tol) {
  std::array<bool, VarIndex::kCount> seen{};
  QStarTable table;

  std::istringstream lines{std::string(fixture_text)};
  std::string raw;
  while (std::getline(lines, raw)) {
    std::string_view line = trimmed(raw);
    if (line.empty() || line.front() == '#') continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw std::runtime_error("q* fixture: missing '->' in line: " + std::string(line));
    std::string_view lhs = trimmed(line.substr(0, arrow));
    if (lhs.size() < 4 || lhs.substr(0, 2) != "t(" || lhs.back() != ')')
      throw std::runtime_error("q* fixture: left side must be t(i), got: " + std::string(lhs));
    int value = 0;
    try {
      value = std::stoi(std::string(lhs.substr(2, lhs.size() - 3)));
    } catch (const std::exception&) {
      throw std::runtime_error("q* fixture: bad index in: " + std::string(lhs));
    }
    VarIndex v = VarIndex::of(value);
    if (seen[v.slot()])
      throw std::runtime_error("q* fixture: duplicate image for " + v.str());
    seen[v.slot()] = true;
    table.images[v.slot()] = ring.reduce(parse_polynomial(line.substr(arrow + 2)));
  }
  for (VarIndex v : VarIndex::all())
    if (!seen[v.slot()]) throw std::runtime_error("q* fixture: missing image for " + v.str());

  // Structural facts the fixture must reproduce before certification.
  auto expect = [&](VarIndex v, const RingElement& want, const char* what) {
    if (table.image(v) != want)
      throw std::runtime_error("q* fixture: image of " + v.str() +
                               " must be " + std::string(what));
  };
  expect(var(1), ring.generator(var(1)), "t(1)");
  expect(var(-1), ring.generator(var(-1)), "t(-1)");
  expect(var(2), ring.generator(var(-1)), "t(-1)");
  expect(var(-2), ring.generator(var(1)), "t(1)");
  expect(var(3), ring.generator(var(5)), "t(5)");
  expect(var(-3), ring.reduce(ring.P() - Poly::variable(var(5))), "P - t(5)");

  for (VarIndex v : VarIndex::all()) {
    double residual =
        certify_identity(ring, table.image(v).lift(), qstar_word(v), samples, seed);
    if (!(residual <= tol))
      throw std::runtime_error("q* certification failed for " + v.str() + ": residual " +
                               std::to_string(residual) + " against tr(" +
                               qstar_word(v).str() + ")");
    table.certification_residual = std::max(table.certification_residual, residual);
  }
  return table;
}

QStarTable build_qstar(const CharRing& ring, int samples, std::uint64_t seed, double tol) {
  return build_qstar(ring, embedded_qstar_fixture(), samples, seed, tol);
}

RingElement apply_qstar_poly(const CharRing& ring, const QStarTable& table, const Poly& p) {
  Poly::Substitution images;
  for (VarIndex v : VarIndex::all()) images.emplace(v.value(), table.image(v).lift());
  return ring.reduce(p.substitute(images));
}

RingElement apply_qstar(const CharRing& ring, const QStarTable& table, const RingElement& f) {
  return apply_qstar_poly(ring, table, f.lift());
}

AntiPoissonResult verify_anti_poisson(const CharRing& ring, const BiVector& pants,
                                      const BiVector& torus, const QStarTable& table,
                                      bool parallel) {
  std::vector<std::pair<VarIndex, VarIndex>> pairs;
  for (int a = 0; a < VarIndex::kCount; ++a)
    for (int b = a + 1; b < VarIndex::kCount; ++b)
      pairs.emplace_back(VarIndex::at_slot(a), VarIndex::at_slot(b));

  AntiPoissonResult result;
  result.pairs.resize(pairs.size(),
                      AntiPoissonResult::PairCheck{var(1), var(1), false, false});
  parallel_for(pairs.size(), parallel, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    RingElement lhs = bracket(ring, torus, table.image(i), table.image(j));
    RingElement rhs =
        apply_qstar(ring, table, bracket(ring, pants, ring.generator(i), ring.generator(j)));
    result.pairs[k] = {i, j, (lhs + rhs).is_zero(), (lhs - rhs).is_zero()};
  });

  bool all_plus = true, all_minus = true;
  for (const auto& p : result.pairs) {
    all_plus = all_plus && p.plus_vanishes;
    all_minus = all_minus && p.minus_vanishes;
  }
  result.sign = all_plus ? 1 : all_minus ? -1 : 0;
  return result;
}

RestrictedBiVector build_restricted_bivector(const CharRing& ring, const BiVector& torus,
                                             const QStarTable& table) {
  return RestrictedBiVector{
      bracket(ring, torus, table.image(var(4)), table.image(var(-4))),
      bracket(ring, torus, table.image(var(4)), table.image(var(5))),
      bracket(ring, torus, table.image(var(-4)), table.image(var(5)))};
}

int restricted_bivector_rank(const RestrictedBiVector& r, const Point9& point, double tol) {
  Complex a = r.a.eval(point), b = r.b.eval(point), c = r.c.eval(point);
  Eigen::Matrix3cd m;
  m << 0, a, b, -a, 0, c, -b, -c, 0;
  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  int rank = 0;
  for (int k = 0; k < 3; ++k)
    if (sv(k) > tol * sv(0)) ++rank;
  return rank;
}

}  // namespace sl3cv
