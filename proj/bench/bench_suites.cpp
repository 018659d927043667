// Times the parallel verification kernels against the serial reference path
// and checks that both produce identical report bytes. Usage:
//   bench_suites [samples] [seed]
#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "sl3cv/suites.hpp"

using namespace sl3cv;

namespace {

double time_once(const std::function<Report()>& fn, Report& out) {
  auto start = std::chrono::steady_clock::now();
  out = fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions serial, threaded;
  serial.samples = threaded.samples = argc > 1 ? std::atoi(argv[1]) : 200;
  serial.seed = threaded.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0;
  serial.parallel = false;
  threaded.parallel = true;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "samples = " << serial.samples << ", seed = " << serial.seed
            << ", threads = " << threads << "\n\n";
  std::cout << std::left << std::setw(16) << "suite" << std::right << std::setw(12)
            << "serial [s]" << std::setw(14) << "threaded [s]" << std::setw(10) << "speedup"
            << "  identical\n";

  CharRing ring;
  BiVector pants = build_bivector_pants(ring);
  BiVector torus = build_bivector_torus(ring);

  struct Bench {
    const char* name;
    std::function<Report(const SuiteOptions&)> run;
  };
  const Bench benches[] = {
      {"jacobi", [&](const SuiteOptions& o) { return run_jacobi(ring, pants, torus, o); }},
      {"identities", [&](const SuiteOptions& o) { return run_identities(ring, o); }},
      {"anti-poisson",
       [&](const SuiteOptions& o) { return run_anti_poisson(ring, pants, torus, o); }},
      {"transversality", [&](const SuiteOptions& o) { return run_transversality(ring, o); }},
  };

  bool all_identical = true;
  for (const Bench& b : benches) {
    Report r_serial, r_threaded;
    double s = time_once([&] { return b.run(serial); }, r_serial);
    double t = time_once([&] { return b.run(threaded); }, r_threaded);
    bool identical = r_serial.to_json() == r_threaded.to_json();
    all_identical = all_identical && identical;
    std::cout << std::left << std::setw(16) << b.name << std::right << std::fixed
              << std::setprecision(3) << std::setw(12) << s << std::setw(14) << t
              << std::setprecision(2) << std::setw(9) << (t > 0 ? s / t : 0.0) << "x  "
              << (identical ? "yes" : "NO") << "\n";
  }
  return all_identical ? 0 : 1;
}
