#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl3cv/suites.hpp"

using namespace sl3cv;

namespace {

SuiteOptions small_opts(bool parallel) {
  SuiteOptions opts;
  opts.seed = 3;
  opts.samples = 20;
  opts.parallel = parallel;
  return opts;
}

}  // namespace

TEST_CASE("casimir and elimination suites pass") {
  CharRing ring;
  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);
  Report casimirs = run_casimirs(ring, pants, torus, small_opts(true));
  CHECK(casimirs.pass());
  CHECK(casimirs.checks.size() == 10);
  Report elim = run_elimination(ring, small_opts(true));
  CHECK(elim.pass());
}

TEST_CASE("identity and transversality suites pass on a small sample") {
  CharRing ring;
  CHECK(run_identities(ring, small_opts(true)).pass());
  CHECK(run_transversality(ring, small_opts(true)).pass());
}

TEST_CASE("report JSON is identical between the threaded and serial paths") {
  CharRing ring;
  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);

  Report par_t = run_transversality(ring, small_opts(true));
  Report ser_t = run_transversality(ring, small_opts(false));
  CHECK(par_t.to_json() == ser_t.to_json());

  Report par_a = run_anti_poisson(ring, pants, torus, small_opts(true));
  Report ser_a = run_anti_poisson(ring, pants, torus, small_opts(false));
  CHECK(par_a.pass());
  CHECK(par_a.to_json() == ser_a.to_json());
  CHECK(par_a.sign.has_value());
  CHECK(*par_a.sign == 1);
}

TEST_CASE("report JSON carries the reproducibility surface, not timings") {
  CharRing ring;
  Report r = run_elimination(ring, small_opts(true));
  r.seconds = 123.0;
  auto j = r.to_json();
  CHECK(j["schema"] == "sl3cv-report/1");
  CHECK(j["suite"] == "elimination");
  CHECK(j.contains("pass"));
  CHECK(j.contains("checks"));
  CHECK(j.dump().find("seconds") == std::string::npos);

  auto all = reports_json({r});
  CHECK(all["schema"] == "sl3cv-report/1");
  CHECK(all["reports"].size() == 1);
  CHECK(all.contains("pass"));
}
