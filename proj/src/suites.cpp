#include "sl3cv/suites.hpp"

#include <array>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "sl3cv/leaves.hpp"
#include "sl3cv/parallel.hpp"
#include "sl3cv/trace_oracle.hpp"

namespace sl3cv {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string sci(double x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(3) << x;
  return out.str();
}

std::string freq(int hits, int total) {
  return std::to_string(hits) + "/" + std::to_string(total);
}

bool at_least_95_percent(int hits, int total) { return total > 0 && 20 * hits >= 19 * total; }

Report make_report(const char* suite, const SuiteOptions& opts, int samples_used) {
  Report report;
  report.suite = suite;
  report.seed = opts.seed;
  report.samples = samples_used;
  report.tol_sym = opts.tol_sym;
  report.tol_rank = opts.tol_rank;
  return report;
}

// Deterministic pseudo-random reduced element: a few small terms, possibly
// involving t(5), pushed through reduce. Used to fuzz the ring axioms.
RingElement random_element(const CharRing& ring, std::uint64_t seed, std::uint64_t index) {
  RngStream rng(seed, index);
  auto draw_int = [&](int lo, int hi) {
    double u = (rng.uniform() + 1.0) / 2.0;
    int span = hi - lo + 1;
    return lo + std::min(span - 1, static_cast<int>(u * span));
  };
  Poly p;
  for (int term = 0; term < 3; ++term) {
    long c = draw_int(-3, 3);
    if (c == 0) c = 1;
    Monomial m;
    int factors = draw_int(1, 2);
    for (int f = 0; f < factors; ++f)
      m = m * Monomial::power(VarIndex::at_slot(draw_int(0, VarIndex::kCount - 1)), 1);
    p += Poly::term(Rational(c), m);
  }
  return ring.reduce(p);
}

std::array<RingElement, VarIndex::kCount> generators(const CharRing& ring) {
  std::array<RingElement, VarIndex::kCount> gens;
  for (VarIndex v : VarIndex::all()) gens[v.slot()] = ring.generator(v);
  return gens;
}

}  // namespace

Report run_casimirs(const CharRing& ring, const BiVector& pants, const BiVector& torus,
                    const SuiteOptions& opts) {
  Timer timer;
  Report report = make_report("casimirs", opts, 0);
  for (int v : {1, -1, 2, -2, 3, -3})
    report.add("pants casimir t(" + std::to_string(v) + ")",
               casimir_check(ring, pants, ring.generator(var(v))), "exact");
  report.add("torus casimir t(5)", casimir_check(ring, torus, ring.generator(var(5))), "exact");
  report.add("torus casimir P - t(5)",
             casimir_check(ring, torus, ring.reduce(ring.P() - Poly::variable(var(5)))),
             "exact");
  report.add("pants control: t(4) is not a casimir",
             !casimir_check(ring, pants, ring.generator(var(4))));
  report.add("torus control: t(1) is not a casimir",
             !casimir_check(ring, torus, ring.generator(var(1))));
  report.seconds = timer.seconds();
  return report;
}

Report run_jacobi(const CharRing& ring, const BiVector& pants, const BiVector& torus,
                  const SuiteOptions& opts) {
  constexpr int kRandomPairs = 50;
  Timer timer;
  Report report = make_report("jacobi", opts, kRandomPairs);
  const auto gens = generators(ring);

  const std::array<std::pair<const char*, const BiVector*>, 2> surfaces = {
      {{"pants", &pants}, {"torus", &torus}}};

  for (std::size_t surf = 0; surf < surfaces.size(); ++surf) {
    const auto& [name, biv] = surfaces[surf];
    std::vector<std::uint8_t> anti_ok(kRandomPairs, 0), leibniz_ok(kRandomPairs, 0);
    parallel_for(kRandomPairs, opts.parallel, [&](std::size_t k) {
      std::uint64_t base = 1000000 * (surf + 1);
      RingElement f = random_element(ring, opts.seed, base + 3 * k);
      RingElement g = random_element(ring, opts.seed, base + 3 * k + 1);
      RingElement h = random_element(ring, opts.seed, base + 3 * k + 2);
      anti_ok[k] = (bracket(ring, *biv, f, g) + bracket(ring, *biv, g, f)).is_zero();
      RingElement defect = bracket(ring, *biv, f, ring.ring_mul(g, h)) -
                           ring.ring_mul(bracket(ring, *biv, f, g), h) -
                           ring.ring_mul(g, bracket(ring, *biv, f, h));
      leibniz_ok[k] = defect.is_zero();
    });
    int anti = 0, leibniz = 0;
    for (int k = 0; k < kRandomPairs; ++k) {
      anti += anti_ok[k];
      leibniz += leibniz_ok[k];
    }
    std::string sname = name;
    report.add(sname + " antisymmetry on random elements", anti == kRandomPairs,
               "exact, " + freq(anti, kRandomPairs));
    report.add(sname + " Leibniz rule on random elements", leibniz == kRandomPairs,
               "exact, " + freq(leibniz, kRandomPairs));
  }

  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < VarIndex::kCount; ++a)
    for (int b = a + 1; b < VarIndex::kCount; ++b)
      for (int c = b + 1; c < VarIndex::kCount; ++c) triples.push_back({a, b, c});

  for (const auto& [name, biv] : surfaces) {
    std::vector<std::uint8_t> ok(triples.size(), 0);
    parallel_for(triples.size(), opts.parallel, [&](std::size_t k) {
      const auto& [a, b, c] = triples[k];
      ok[k] = jacobi_defect(ring, *biv, gens[a], gens[b], gens[c]).is_zero();
    });
    int hits = 0;
    std::string failing;
    for (std::size_t k = 0; k < triples.size(); ++k) {
      hits += ok[k];
      if (!ok[k]) {
        failing += failing.empty() ? "failing: " : ", ";
        failing += "(" + VarIndex::at_slot(triples[k][0]).str() + "," +
                   VarIndex::at_slot(triples[k][1]).str() + "," +
                   VarIndex::at_slot(triples[k][2]).str() + ")";
      }
    }
    report.add(std::string(name) + " Jacobi defect zero for all 84 generator triples",
               hits == static_cast<int>(triples.size()),
               failing.empty() ? "exact, " + freq(hits, 84) : failing);
  }

  for (const auto& [name, biv] : surfaces) {
    bool central = true;
    for (VarIndex v : VarIndex::all())
      central =
          central && bracket(ring, *biv, ring.relation(), Poly::variable(v)).is_zero();
    report.add(std::string(name) + " relation centrality {t(5)^2 - P t(5) + Q, t(i)} = 0",
               central, "exact");
  }

  report.seconds = timer.seconds();
  return report;
}

Report run_identities(const CharRing& ring, const SuiteOptions& opts) {
  Timer timer;
  Report report = make_report("identities", opts, opts.samples);

  report.add("symmetry group has order 8 and closes",
             ring.group().elements().size() == 8);

  bool p_inv = true, q_inv = true;
  for (const auto& g : ring.group().elements()) {
    p_inv = p_inv && ring.d4_apply_poly(g, ring.P()) == ring.P();
    q_inv = q_inv && ring.d4_apply_poly(g, ring.Q()) == ring.Q();
  }
  report.add("P invariant under all 8 index symmetries", p_inv, "exact");
  report.add("Q invariant under all 8 index symmetries", q_inv, "exact");

  std::array<Rational, VarIndex::kCount> threes;
  threes.fill(Rational(3));
  report.add("P has degree 4 and value 6 at the all-threes point",
             ring.P().degree() == 4 && ring.P().eval_exact(threes) == Rational(6),
             "deg = " + std::to_string(ring.P().degree()) + ", value = " +
                 ring.P().eval_exact(threes).str());
  report.add("Q has degree 6 and value 9 at the all-threes point",
             ring.Q().degree() == 6 && ring.Q().eval_exact(threes) == Rational(9),
             "deg = " + std::to_string(ring.Q().degree()) + ", value = " +
                 ring.Q().eval_exact(threes).str());

  const int n = opts.samples;
  std::vector<double> residuals(n, 0.0);
  std::vector<std::uint8_t> errored(n, 0);
  parallel_for(n, opts.parallel, [&](std::size_t i) {
    try {
      residuals[i] = sample_character_point(ring, opts.seed, i, 1e300).residual;
    } catch (const std::exception&) {
      errored[i] = 1;
    }
  });
  double max_res = 0.0;
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    max_res = std::max(max_res, residuals[i]);
    bad += errored[i];
  }
  report.add("defining relation holds at sampled points (relative 1e-6)",
             bad == 0 && max_res <= 1e-6, "max residual = " + sci(max_res));

  double self_test = 0.0;
  const auto& words = defining_words();
  for (int s = 0; s < VarIndex::kCount; ++s)
    self_test = std::max(self_test,
                         certify_identity(ring, Poly::variable(VarIndex::at_slot(s)),
                                          words[s], std::min(50, n), opts.seed));
  report.add("coordinate functions match their trace words (self-test)",
             self_test <= 1e-10, "max residual = " + sci(self_test));

  // P is the sum of the two commutator traces.
  const Word forward = Word::parse("abAB"), backward = Word::parse("baBA");
  double p_gap = 0.0;
  for (int i = 0; i < std::min(100, n); ++i) {
    CharacterPoint pt = sample_character_point(ring, opts.seed, i);
    Complex sum = word_eval(forward, pt.first, pt.second).trace() +
                  word_eval(backward, pt.first, pt.second).trace();
    p_gap = std::max(p_gap,
                     std::abs(ring.P().eval(pt.coords) - sum) / (1.0 + std::abs(sum)));
  }
  report.add("P equals tr[A,B] + tr[B,A] at sampled points", p_gap <= opts.tol_sym,
             "max residual = " + sci(p_gap));

  double inv_comm = certify_identity(ring, ring.P() - Poly::variable(var(5)),
                                     Word::parse("AbaB"), std::min(100, n), opts.seed);
  report.add("tr of the reversed commutator equals P - t(5)", inv_comm <= opts.tol_sym,
             "max residual = " + sci(inv_comm));

  bool parity_ok = true;
  std::string actions;
  for (const auto& g : ring.group().elements()) {
    T5Action action;
    try {
      action = determine_t5_action(ring, g, 50, opts.seed);
    } catch (const std::exception&) {
      parity_ok = false;
      actions += g.name() + ":inconclusive ";
      continue;
    }
    bool matches = (action == T5Action::Flipped) == g.flips_t5();
    parity_ok = parity_ok && matches;
    actions += g.name() + (action == T5Action::Flipped ? ":flipped " : ":fixed ");
  }
  if (!actions.empty()) actions.pop_back();
  report.add("t(5) action matches generator-word parity for all 8 elements (50 samples)",
             parity_ok, actions);

  report.seconds = timer.seconds();
  return report;
}

Report run_anti_poisson(const CharRing& ring, const BiVector& pants, const BiVector& torus,
                        const SuiteOptions& opts) {
  Timer timer;
  Report report = make_report("anti-poisson", opts, opts.samples);

  QStarTable table;
  try {
    table = build_qstar(ring, 100, opts.seed, opts.tol_sym);
  } catch (const std::exception& e) {
    report.add("q* images certified against trace words (100 samples)", false, e.what());
    report.seconds = timer.seconds();
    return report;
  }
  report.add("q* images certified against trace words (100 samples)", true,
             "max residual = " + sci(table.certification_residual));

  constexpr int kHomPairs = 20;
  std::vector<std::uint8_t> hom_ok(kHomPairs, 0);
  parallel_for(kHomPairs, opts.parallel, [&](std::size_t k) {
    RingElement f = random_element(ring, opts.seed, 5000000 + 2 * k);
    RingElement g = random_element(ring, opts.seed, 5000000 + 2 * k + 1);
    bool mul = apply_qstar(ring, table, ring.ring_mul(f, g)) ==
               ring.ring_mul(apply_qstar(ring, table, f), apply_qstar(ring, table, g));
    bool add = apply_qstar(ring, table, f + g) ==
               apply_qstar(ring, table, f) + apply_qstar(ring, table, g);
    hom_ok[k] = mul && add;
  });
  int hom = 0;
  for (int k = 0; k < kHomPairs; ++k) hom += hom_ok[k];
  report.add("q* is an algebra homomorphism on random elements", hom == kHomPairs,
             "exact, " + freq(hom, kHomPairs));

  Poly t3m3 = Poly::variable(var(3)) * Poly::variable(var(-3));
  report.add("q*(t(3) t(-3)) = Q",
             apply_qstar_poly(ring, table, t3m3) == ring.reduce(ring.Q()), "exact");
  report.add("q* annihilates the defining relation",
             apply_qstar_poly(ring, table, ring.relation()).is_zero(), "exact");

  AntiPoissonResult anti = verify_anti_poisson(ring, pants, torus, table, opts.parallel);
  if (anti.uniform()) report.sign = anti.sign;
  std::string detail;
  if (anti.uniform()) {
    detail = std::string("s = ") + (anti.sign > 0 ? "+1" : "-1") + " for all 36 pairs, exact";
  } else {
    detail = "no uniform sign; failing pairs:";
    for (const auto& p : anti.pairs)
      if (!p.plus_vanishes && !p.minus_vanishes)
        detail += " (" + p.i.str() + "," + p.j.str() + ")";
  }
  report.add("a single global sign makes q* an anti-Poisson map on all 36 generator pairs",
             anti.uniform(), detail);

  RestrictedBiVector restricted = build_restricted_bivector(ring, torus, table);
  const int n = opts.samples;
  std::vector<int> rank_restricted(n, -1), rank_pants(n, -1), rank_torus(n, -1);
  parallel_for(n, opts.parallel, [&](std::size_t i) {
    try {
      CharacterPoint pt = sample_character_point(ring, opts.seed, i);
      rank_restricted[i] = restricted_bivector_rank(restricted, pt.coords, opts.tol_rank);
      rank_pants[i] = bivector_rank_at(pants, pt.coords, opts.tol_rank);
      rank_torus[i] = bivector_rank_at(torus, pt.coords, opts.tol_rank);
    } catch (const std::exception&) {
      // ranks stay -1 and count as misses
    }
  });
  int r2 = 0, p2 = 0, t6 = 0;
  for (int i = 0; i < n; ++i) {
    r2 += rank_restricted[i] == 2;
    p2 += rank_pants[i] == 2;
    t6 += rank_torus[i] == 6;
  }
  report.add("restricted 3x3 bi-vector has rank 2 at >= 95% of samples",
             at_least_95_percent(r2, n), freq(r2, n));
  report.add("pants bi-vector has rank 2 at >= 95% of samples", at_least_95_percent(p2, n),
             freq(p2, n));
  report.add("torus bi-vector has rank 6 at >= 95% of samples", at_least_95_percent(t6, n),
             freq(t6, n));

  report.seconds = timer.seconds();
  return report;
}

Report run_transversality(const CharRing& ring, const SuiteOptions& opts) {
  Timer timer;
  Report report = make_report("transversality", opts, opts.samples);

  const int n = opts.samples;
  std::vector<TangentReport> reports(n);
  std::vector<std::uint8_t> errored(n, 0);
  parallel_for(n, opts.parallel, [&](std::size_t i) {
    try {
      CharacterPoint pt = sample_character_point(ring, opts.seed, i);
      reports[i] = transversality_check(ring, pt.coords, opts.tol_rank);
    } catch (const std::exception&) {
      errored[i] = 1;
    }
  });

  int evaluated = 0, generic = 0, transversal = 0, pants2 = 0, torus6 = 0, proj2 = 0;
  bool grassmann = true, diagnosed = true;
  for (int i = 0; i < n; ++i) {
    if (errored[i]) continue;
    ++evaluated;
    const TangentReport& r = reports[i];
    grassmann = grassmann && r.dim_sum <= 8 && r.dim_intersection >= 0;
    if (!r.generic) {
      diagnosed = diagnosed && !r.diagnostic.empty();
      continue;
    }
    ++generic;
    transversal += r.transversal();
    pants2 += r.dim_pants == 2;
    torus6 += r.dim_torus == 6;
    proj2 += r.pants_projection_rank == 2;
  }

  report.add("all samples evaluated", evaluated == n, freq(evaluated, n));
  report.add("transversality (2, 6, 8, 0) at >= 95% of generic samples",
             at_least_95_percent(transversal, generic),
             freq(transversal, generic) + " generic (" + freq(generic, n) + " of all)");
  report.add("pants leaf tangent dimension 2 at >= 95% of generic samples",
             at_least_95_percent(pants2, generic), freq(pants2, generic));
  report.add("torus leaf tangent dimension 6 at >= 95% of generic samples",
             at_least_95_percent(torus6, generic), freq(torus6, generic));
  report.add("pants kernel projects with rank 2 onto the glued coordinates",
             at_least_95_percent(proj2, generic), freq(proj2, generic));
  report.add("dimension sum and intersection stay within Grassmann bounds", grassmann,
             "dim_sum <= 8 and dim_int >= 0 at every sample");
  report.add("every non-generic point carries a singularity diagnostic", diagnosed);

  report.seconds = timer.seconds();
  return report;
}

Report run_elimination(const CharRing& ring, const SuiteOptions& opts) {
  Timer timer;
  Report report = make_report("elimination", opts, 0);
  EliminationReport elim = elimination_check(ring);
  report.add("degree of Q in t(4) is 3", elim.degree_q_in_t4 == 3,
             "got " + std::to_string(elim.degree_q_in_t4));
  report.add("cleared main-branch polynomial has degree 6 in t(-4)",
             elim.main_branch_degree == 6,
             "got " + std::to_string(elim.main_branch_degree) +
                 "; bounds a generic leaf intersection at 6 points");
  report.add("main-branch leading coefficient is a nonzero constant",
             elim.main_branch_leading_constant, "leading = " + elim.main_branch_leading);
  report.add("special branch t(-4) = t(-1)t(2) has degree 3 in t(4)",
             elim.special_branch_degree == 3,
             "got " + std::to_string(elim.special_branch_degree));
  report.add("special-branch leading coefficient is a nonzero constant",
             elim.special_branch_leading_constant,
             "leading = " + elim.special_branch_leading);
  report.seconds = timer.seconds();
  return report;
}

std::vector<Report> run_all(const CharRing& ring, const SuiteOptions& opts) {
  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);
  std::vector<Report> reports;
  reports.push_back(run_casimirs(ring, pants, torus, opts));
  reports.push_back(run_jacobi(ring, pants, torus, opts));
  reports.push_back(run_identities(ring, opts));
  reports.push_back(run_anti_poisson(ring, pants, torus, opts));
  reports.push_back(run_transversality(ring, opts));
  reports.push_back(run_elimination(ring, opts));
  return reports;
}

}  // namespace sl3cv
