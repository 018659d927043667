#pragma once
// The verification suites behind `verify ...`. Each builds what it needs,
// runs its checks (fanning sample- or pair-indexed work across threads), and
// returns a Report whose content is independent of the thread count.

#include <cstdint>
#include <vector>

#include "sl3cv/char_ring.hpp"
#include "sl3cv/gluing.hpp"
#include "sl3cv/poisson.hpp"
#include "sl3cv/report.hpp"

namespace sl3cv {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int samples = 200;
  double tol_sym = 1e-8;
  double tol_rank = 1e-8;
  bool parallel = true;
};

// Exact: boundary traces are Casimirs of their surface's bracket, and a
// non-boundary control is not.
Report run_casimirs(const CharRing& ring, const BiVector& pants, const BiVector& torus,
                    const SuiteOptions& opts);

// Exact: antisymmetry and Leibniz on random reduced elements, the Jacobi
// defect for all 84 generator triples, and centrality of the relation —
// for both bi-vectors.
Report run_jacobi(const CharRing& ring, const BiVector& pants, const BiVector& torus,
                  const SuiteOptions& opts);

// Oracle statistics: relation residual at sampled points, symmetry-group
// integrity (order, invariance of P and Q, t(5) action vs flip parity), and
// P against the commutator traces.
Report run_identities(const CharRing& ring, const SuiteOptions& opts);

// The gluing theorems: certified q* table, homomorphism checks, the global
// anti-Poisson sign over all 36 pairs, and rank preservation statistics.
Report run_anti_poisson(const CharRing& ring, const BiVector& pants, const BiVector& torus,
                        const SuiteOptions& opts);

// Leaf tangent statistics: dimensions, transversality, diagnostics on
// flagged points.
Report run_transversality(const CharRing& ring, const SuiteOptions& opts);

// Exact symbolic elimination degrees and leading coefficients.
Report run_elimination(const CharRing& ring, const SuiteOptions& opts);

std::vector<Report> run_all(const CharRing& ring, const SuiteOptions& opts);

}  // namespace sl3cv
