#include "sl3cv/leaves.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sl3cv/linalg.hpp"

namespace sl3cv {

std::array<Complex, 6> boundary_pants(const Point9& point) {
  std::array<Complex, 6> out;
  for (int s = 0; s < 6; ++s) out[s] = point[s];
  return out;
}

std::array<Complex, 2> boundary_torus(const CharRing& ring, const Point9& point) {
  Complex t5 = point[var(5).slot()];
  return {t5, ring.P().eval(point) - t5};
}

LeafSpec leaf_through(const CharRing& ring, const Point9& point, Surface surface) {
  LeafSpec spec;
  spec.surface = surface;
  if (surface == Surface::Pants) {
    auto level = boundary_pants(point);
    spec.level.assign(level.begin(), level.end());
  } else {
    auto level = boundary_torus(ring, point);
    spec.level.assign(level.begin(), level.end());
  }
  return spec;
}

namespace {

Eigen::MatrixXcd leaf_jacobian(const CharRing& ring, const Point9& point, Surface surface) {
  const int rows = surface == Surface::Pants ? 7 : 3;
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(rows, VarIndex::kCount);
  for (VarIndex v : VarIndex::all())
    jac(0, v.slot()) = ring.relation().partial(v).eval(point);
  if (surface == Surface::Pants) {
    // Boundary coordinate functions t(+-1), t(+-2), t(+-3).
    for (int s = 0; s < 6; ++s) jac(1 + s, s) = 1.0;
  } else {
    // t(5) - a and (P - t(5)) - b.
    jac(1, var(5).slot()) = 1.0;
    for (VarIndex v : VarIndex::all()) jac(2, v.slot()) = ring.P().partial(v).eval(point);
    jac(2, var(5).slot()) -= 1.0;
  }
  return jac;
}

}  // namespace

TangentBasis tangent_space(const CharRing& ring, const Point9& point, const LeafSpec& spec,
                           double tol) {
  KernelResult kr = kernel_basis(leaf_jacobian(ring, point, spec.surface), tol);
  TangentBasis out;
  out.basis = std::move(kr.basis);
  out.singular_values = std::move(kr.singular_values);
  out.smallest_kept = kr.smallest_kept;
  return out;
}

TangentReport transversality_check(const CharRing& ring, const Point9& point, double tol) {
  TangentReport report;
  report.discriminant_abs = std::abs(ring.discriminant(point));

  KernelResult pants = kernel_basis(leaf_jacobian(ring, point, Surface::Pants), tol);
  KernelResult torus = kernel_basis(leaf_jacobian(ring, point, Surface::Torus), tol);
  report.dim_pants = static_cast<int>(pants.basis.cols());
  report.dim_torus = static_cast<int>(torus.basis.cols());

  Eigen::MatrixXcd stacked(VarIndex::kCount, pants.basis.cols() + torus.basis.cols());
  stacked << pants.basis, torus.basis;
  report.dim_sum = numeric_rank(stacked, tol);
  report.dim_intersection = report.dim_pants + report.dim_torus - report.dim_sum;

  report.smallest_kept_sv = std::min(pants.smallest_kept, torus.smallest_kept);
  report.pants_projection_rank = numeric_rank(pants.basis.bottomRows(3), tol);

  constexpr double kGenericityCut = 1e-6;
  std::ostringstream why;
  if (report.discriminant_abs < kGenericityCut) {
    report.generic = false;
    why << "branch-locus proximity |P^2-4Q| = " << report.discriminant_abs;
  } else if (report.smallest_kept_sv < kGenericityCut) {
    report.generic = false;
    why << "small retained singular value " << report.smallest_kept_sv;
  }
  report.diagnostic = why.str();
  return report;
}

namespace {

// Polynomials in two extra formal variables C, D (the boundary levels of the
// two leaves) with coefficients in the coordinate ring: enough structure to
// run the elimination symbolically without enlarging the main variable set.
using XKey = std::pair<unsigned, unsigned>;  // (degree in C, degree in D)
using XPoly = std::map<XKey, Poly>;

void xp_add(XPoly& x, const XKey& k, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = x.emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) x.erase(it);
  }
}

XPoly xp_mul(const XPoly& x, const XPoly& y) {
  XPoly out;
  for (const auto& [kx, px] : x)
    for (const auto& [ky, py] : y)
      xp_add(out, {kx.first + ky.first, kx.second + ky.second}, px * py);
  return out;
}

XPoly xp_pow(const XPoly& x, unsigned n) {
  XPoly out{{XKey{0, 0}, Poly(1)}};
  for (unsigned k = 0; k < n; ++k) out = xp_mul(out, x);
  return out;
}

std::string xp_str(const XPoly& x) {
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, p] : x) {
    if (!first) out << " + ";
    first = false;
    std::string vars;
    if (k.first > 0) {
      vars += "C";
      if (k.first > 1) vars += "^" + std::to_string(k.first);
    }
    if (k.second > 0) {
      if (!vars.empty()) vars += "*";
      vars += "D";
      if (k.second > 1) vars += "^" + std::to_string(k.second);
    }
    if (vars.empty())
      out << "(" << p.str() << ")";
    else
      out << vars << "*(" << p.str() << ")";
  }
  return out.str();
}

// Leading coefficient of an XPoly in the coordinate v: the XPoly of
// coefficients of v^deg.
std::pair<int, XPoly> xp_leading_in(const XPoly& x, VarIndex v) {
  int deg = -1;
  for (const auto& [k, p] : x) deg = std::max(deg, p.degree_in(v));
  XPoly lead;
  for (const auto& [k, p] : x) {
    Poly c = p.coefficient_of(v, static_cast<unsigned>(deg));
    if (!c.is_zero()) xp_add(lead, k, c);
  }
  return {deg, lead};
}

bool xp_is_constant(const XPoly& x, std::string* text) {
  if (x.size() == 1) {
    const auto& [k, p] = *x.begin();
    if (k == XKey{0, 0} && p.degree() == 0) {
      *text = p.str();
      return true;
    }
  }
  *text = xp_str(x);
  return false;
}

}  // namespace

EliminationReport elimination_check(const CharRing& ring) {
  EliminationReport report;
  const VarIndex t4 = var(4), tm4 = var(-4);
  const Poly& P = ring.P();
  const Poly& Q = ring.Q();

  report.degree_q_in_t4 = Q.degree_in(t4);

  // P is linear in t(4): P = P0 + t(4) * A with A = t(-4) - t(-1)t(2), so on
  // the locus P = C (A nonzero) the solved value is t(4) = (C - P0) / A.
  // Substitute into Q - D and clear A^3 (cube: the t(4)-degree of Q).
  Poly A = P.partial(t4);
  Poly P0 = P - Poly::variable(t4) * A;
  XPoly numerator;                          // C - P0
  xp_add(numerator, {1, 0}, Poly(1));
  xp_add(numerator, {0, 0}, -P0);

  XPoly cleared;
  for (unsigned k = 0; k <= 3; ++k) {
    Poly qk = Q.coefficient_of(t4, k);
    if (qk.is_zero()) continue;
    XPoly term = xp_mul(xp_pow(numerator, k), XPoly{{XKey{0, 0}, qk * A.pow(3 - k)}});
    for (const auto& [key, p] : term) xp_add(cleared, key, p);
  }
  xp_add(cleared, {0, 1}, -A.pow(3));  // the -D * A^3 part of (Q - D) * A^3

  auto [main_deg, main_lead] = xp_leading_in(cleared, tm4);
  report.main_branch_degree = main_deg;
  report.main_branch_leading_constant = xp_is_constant(main_lead, &report.main_branch_leading);

  // Special branch A = 0, i.e. t(-4) = t(-1) t(2): there Q - D itself is the
  // intersection polynomial, in the remaining free coordinate t(4).
  Poly::Substitution branch;
  for (VarIndex v : VarIndex::all()) branch.emplace(v.value(), Poly::variable(v));
  branch[tm4.value()] = Poly::variable(var(-1)) * Poly::variable(var(2));
  Poly q_branch = Q.substitute(branch);
  report.special_branch_degree = q_branch.degree_in(t4);
  Poly special_lead = q_branch.coefficient_of(t4, static_cast<unsigned>(
                                                      std::max(report.special_branch_degree, 0)));
  report.special_branch_leading_constant = special_lead.degree() == 0 && !special_lead.is_zero();
  report.special_branch_leading = special_lead.str();
  return report;
}

}  // namespace sl3cv
