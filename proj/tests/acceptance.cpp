// End-to-end acceptance gate. Each numbered criterion prints exactly one
// [PASS]/[FAIL] line with its evidence; the exit status is nonzero when any
// fail. Tolerances are pinned here on purpose: changing them is a visible,
// reviewable act.
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sl3cv/gluing.hpp"
#include "sl3cv/leaves.hpp"
#include "sl3cv/parallel.hpp"
#include "sl3cv/poisson.hpp"
#include "sl3cv/trace_oracle.hpp"

using namespace sl3cv;

namespace {

constexpr double kTolSym = 1e-8;       // symbolic-vs-oracle certification gap
constexpr double kTolRank = 1e-8;      // relative singular-value cutoff
constexpr double kTolRelation = 1e-6;  // relation residual at sampled points
constexpr int kSamples = 200;
constexpr std::uint64_t kSeed = 0;

int g_failures = 0;

void criterion(int n, const std::string& what, bool pass, const std::string& evidence = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what;
  if (!evidence.empty()) std::cout << " (" << evidence << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

std::string sci(double x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(3) << x;
  return out.str();
}

std::string freq(int hits, int total) {
  return std::to_string(hits) + "/" + std::to_string(total);
}

bool at_least_95_percent(int hits, int total) { return total > 0 && 20 * hits >= 19 * total; }

// Small random reduced element, deterministic in (seed, index).
RingElement random_element(const CharRing& ring, std::uint64_t index) {
  RngStream rng(kSeed, index);
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

std::string run_cli(const std::string& args, int& exit_code) {
  std::string cmd = std::string("\"") + SL3CV_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main() {
  std::cout << "acceptance: exact ring + oracle + gluing gate, seed " << kSeed << ", "
            << kSamples << " samples\n";

  CharRing ring;
  std::array<Rational, VarIndex::kCount> threes;
  threes.fill(Rational(3));

  // 1. Exact construction of the ring data.
  {
    bool ok = ring.P().term_count() == 10 && ring.P().degree() == 4 &&
              ring.Q().term_count() == 73 && ring.Q().degree() == 6 &&
              ring.P().eval_exact(threes) == Rational(6) &&
              ring.Q().eval_exact(threes) == Rational(9) &&
              ring.Q().coefficient_of(var(4), 3) == Poly(1) &&
              ring.relation().coefficient_of(var(5), 2) == Poly(1);
    criterion(1,
              "P (10 terms, degree 4, value 6) and Q (73 terms, degree 6, value 9) are built "
              "exactly and the relation is monic in t(5)",
              ok, "exact rational arithmetic");
  }

  // 2. The relation vanishes at sampled representation points.
  {
    std::vector<double> residuals(kSamples, 0.0);
    std::vector<std::uint8_t> errored(kSamples, 0);
    parallel_for(kSamples, true, [&](std::size_t i) {
      try {
        residuals[i] = sample_character_point(ring, kSeed, i, 1e300).residual;
      } catch (const std::exception&) {
        errored[i] = 1;
      }
    });
    double max_res = 0.0;
    bool sampled = true;
    for (int i = 0; i < kSamples; ++i) {
      max_res = std::max(max_res, residuals[i]);
      sampled = sampled && !errored[i];
    }
    criterion(2, "the defining relation vanishes at 200 sampled SL(3,C) pairs (relative 1e-6)",
              sampled && max_res <= kTolRelation, "max residual = " + sci(max_res));
  }

  // 3. The symmetry group: order, invariance, and the t(5) action.
  {
    bool ok = ring.group().elements().size() == 8;
    for (const auto& g : ring.group().elements()) {
      ok = ok && ring.d4_apply_poly(g, ring.P()) == ring.P() &&
           ring.d4_apply_poly(g, ring.Q()) == ring.Q();
    }
    std::string actions;
    for (const auto& g : ring.group().elements()) {
      try {
        T5Action action = determine_t5_action(ring, g, 50, kSeed);
        ok = ok && (action == T5Action::Flipped) == g.flips_t5();
        actions += g.name() + (action == T5Action::Flipped ? ":flip " : ":fix ");
      } catch (const std::exception&) {
        ok = false;
        actions += g.name() + ":? ";
      }
    }
    if (!actions.empty()) actions.pop_back();
    criterion(3,
              "the order-8 index symmetry fixes P and Q exactly and flips t(5) exactly on "
              "odd generator words (50 samples each)",
              ok, actions);
  }

  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);

  // 4. Both brackets are Poisson brackets on the quotient.
  {
    const std::array<std::pair<const char*, const BiVector*>, 2> surfaces = {
        {{"pants", &pants}, {"torus", &torus}}};
    bool ok = true;
    std::string bad;

    for (std::size_t surf = 0; surf < surfaces.size(); ++surf) {
      const auto* biv = surfaces[surf].second;
      constexpr int kPairs = 50;
      std::vector<std::uint8_t> pair_ok(kPairs, 0);
      parallel_for(kPairs, true, [&](std::size_t k) {
        std::uint64_t base = 7000000 * (surf + 1);
        RingElement f = random_element(ring, base + 3 * k);
        RingElement g = random_element(ring, base + 3 * k + 1);
        RingElement h = random_element(ring, base + 3 * k + 2);
        bool anti = (bracket(ring, *biv, f, g) + bracket(ring, *biv, g, f)).is_zero();
        bool leibniz = (bracket(ring, *biv, f, ring.ring_mul(g, h)) -
                        ring.ring_mul(bracket(ring, *biv, f, g), h) -
                        ring.ring_mul(g, bracket(ring, *biv, f, h)))
                           .is_zero();
        pair_ok[k] = anti && leibniz;
      });
      for (int k = 0; k < kPairs; ++k)
        if (!pair_ok[k]) {
          ok = false;
          bad += std::string(" ") + surfaces[surf].first + "-pair-" + std::to_string(k);
        }
    }

    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < VarIndex::kCount; ++a)
      for (int b = a + 1; b < VarIndex::kCount; ++b)
        for (int c = b + 1; c < VarIndex::kCount; ++c) triples.push_back({a, b, c});
    for (const auto& [name, biv] : surfaces) {
      std::vector<std::uint8_t> tri_ok(triples.size(), 0);
      parallel_for(triples.size(), true, [&](std::size_t k) {
        tri_ok[k] = jacobi_defect(ring, *biv, ring.generator(VarIndex::at_slot(triples[k][0])),
                                  ring.generator(VarIndex::at_slot(triples[k][1])),
                                  ring.generator(VarIndex::at_slot(triples[k][2])))
                        .is_zero();
      });
      for (std::size_t k = 0; k < triples.size(); ++k)
        if (!tri_ok[k]) {
          ok = false;
          bad += std::string(" ") + name + "-jacobi-" + std::to_string(k);
        }
      for (VarIndex v : VarIndex::all())
        if (!bracket(ring, *biv, ring.relation(), Poly::variable(v)).is_zero()) {
          ok = false;
          bad += std::string(" ") + name + "-centrality-" + v.str();
        }
    }
    criterion(4,
              "antisymmetry and Leibniz on 50 random pairs, a zero Jacobi defect on all 84 "
              "coordinate triples, and a central relation hold exactly for both brackets",
              ok, ok ? "exact" : "failing:" + bad);
  }

  // 5. Casimirs of both structures.
  {
    bool ok = true;
    for (int v : {1, -1, 2, -2, 3, -3})
      ok = ok && casimir_check(ring, pants, ring.generator(var(v)));
    ok = ok && casimir_check(ring, torus, ring.generator(var(5)));
    ok = ok && casimir_check(ring, torus, ring.reduce(ring.P() - Poly::variable(var(5))));
    ok = ok && !casimir_check(ring, pants, ring.generator(var(4)));
    ok = ok && !casimir_check(ring, torus, ring.generator(var(1)));
    criterion(5,
              "boundary traces are Casimirs (six for the pants bracket; t(5) and P - t(5) for "
              "the torus bracket) and the controls are not",
              ok, "exact");
  }

  // 6. The q* image table certifies against its trace words.
  QStarTable qstar;
  bool have_qstar = false;
  {
    std::string evidence;
    try {
      qstar = build_qstar(ring, 100, kSeed, kTolSym);
      have_qstar = true;
      evidence = "max residual = " + sci(qstar.certification_residual);
    } catch (const std::exception& e) {
      evidence = e.what();
    }
    bool structural =
        have_qstar && qstar.image(var(2)) == ring.generator(var(-1)) &&
        qstar.image(var(-2)) == ring.generator(var(1)) &&
        qstar.image(var(3)) == ring.generator(var(5)) &&
        qstar.image(var(-3)) == ring.reduce(ring.P() - Poly::variable(var(5))) &&
        apply_qstar_poly(ring, qstar, ring.relation()).is_zero();
    criterion(6,
              "all nine gluing images certify against their substituted trace words at 100 "
              "samples (tol 1e-8) and kill the relation",
              structural, evidence);
  }

  // 7. One global sign makes the gluing map anti-Poisson on all 36 pairs.
  {
    bool ok = false;
    std::string evidence = "q* table unavailable";
    if (have_qstar) {
      AntiPoissonResult anti = verify_anti_poisson(ring, pants, torus, qstar, true);
      ok = anti.uniform();
      if (ok) {
        evidence = std::string("s = ") + (anti.sign > 0 ? "+1" : "-1") + ", exact on 36 pairs";
      } else {
        evidence = "failing pairs:";
        for (const auto& p : anti.pairs)
          if (!p.plus_vanishes && !p.minus_vanishes)
            evidence += " (" + p.i.str() + "," + p.j.str() + ")";
      }
    }
    criterion(7, "a single global sign relates the two brackets through the gluing map", ok,
              evidence);
  }

  // 8. Rank statistics at sampled points.
  {
    bool ok = false;
    std::string evidence = "q* table unavailable";
    if (have_qstar) {
      RestrictedBiVector restricted = build_restricted_bivector(ring, torus, qstar);
      std::vector<int> rr(kSamples, -1), rp(kSamples, -1), rt(kSamples, -1);
      parallel_for(kSamples, true, [&](std::size_t i) {
        try {
          CharacterPoint pt = sample_character_point(ring, kSeed, i);
          rr[i] = restricted_bivector_rank(restricted, pt.coords, kTolRank);
          rp[i] = bivector_rank_at(pants, pt.coords, kTolRank);
          rt[i] = bivector_rank_at(torus, pt.coords, kTolRank);
        } catch (const std::exception&) {
        }
      });
      int r2 = 0, p2 = 0, t6 = 0;
      for (int i = 0; i < kSamples; ++i) {
        r2 += rr[i] == 2;
        p2 += rp[i] == 2;
        t6 += rt[i] == 6;
      }
      ok = at_least_95_percent(r2, kSamples) && at_least_95_percent(p2, kSamples) &&
           at_least_95_percent(t6, kSamples);
      evidence = "restricted rank 2: " + freq(r2, kSamples) + ", pants rank 2: " +
                 freq(p2, kSamples) + ", torus rank 6: " + freq(t6, kSamples);
    }
    criterion(8,
              "generic ranks: 2 for the pants bracket, 6 for the torus bracket, 2 for the "
              "restricted 3x3 block, each at >= 95% of 200 samples",
              ok, evidence);
  }

  // 9. Leaf transversality with diagnostics on flagged points.
  {
    std::vector<TangentReport> reps(kSamples);
    std::vector<std::uint8_t> errored(kSamples, 0);
    parallel_for(kSamples, true, [&](std::size_t i) {
      try {
        CharacterPoint pt = sample_character_point(ring, kSeed, i);
        reps[i] = transversality_check(ring, pt.coords, kTolRank);
      } catch (const std::exception&) {
        errored[i] = 1;
      }
    });
    int generic = 0, transversal = 0;
    bool diagnosed = true, evaluated = true;
    for (int i = 0; i < kSamples; ++i) {
      if (errored[i]) {
        evaluated = false;
        continue;
      }
      if (!reps[i].generic) {
        diagnosed = diagnosed && !reps[i].diagnostic.empty();
        continue;
      }
      ++generic;
      transversal += reps[i].transversal();
    }
    bool ok = evaluated && diagnosed && at_least_95_percent(transversal, generic);
    criterion(9,
              "leaf tangents meet transversally, dimensions (2, 6, 8, 0), at >= 95% of "
              "generic samples; every flagged point carries a diagnostic",
              ok, freq(transversal, generic) + " transversal among generic");
  }

  // 10. The symbolic elimination degree bound.
  {
    EliminationReport elim = elimination_check(ring);
    criterion(10,
              "eliminating the glued coordinates is exact: Q is cubic in t(4), the cleared "
              "polynomial is degree 6 in t(-4) with constant lead, the special branch is "
              "cubic with constant lead",
              elim.ok(),
              "main lead = " + elim.main_branch_leading +
                  ", special lead = " + elim.special_branch_leading);
  }

  // 11. CLI reproducibility: identical bytes across reruns and thread counts.
  {
    int code1 = 0, code2 = 0, code3 = 0;
    std::string out1 = run_cli("verify all --seed 7 --json", code1);
    std::string out2 = run_cli("verify all --seed 7 --json", code2);
    std::string out3 = run_cli("verify all --seed 7 --json --serial", code3);
    bool ok = code1 == 0 && code2 == 0 && code3 == 0 && !out1.empty() && out1 == out2 &&
              out1 == out3;
    std::string evidence = "exit codes " + std::to_string(code1) + "/" + std::to_string(code2) +
                           "/" + std::to_string(code3) + ", " + std::to_string(out1.size()) +
                           " bytes" + (out1 == out2 ? ", rerun identical" : ", rerun differs") +
                           (out1 == out3 ? ", serial identical" : ", serial differs");
    criterion(11,
              "verify all --seed 7 --json emits byte-identical reports across reruns and "
              "across the threaded/serial paths, exit 0",
              ok, evidence);
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all 11 criteria pass\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return 1;
}
