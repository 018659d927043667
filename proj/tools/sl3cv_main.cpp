// Command-line front end: exact ring data, bracket evaluation, rank and
// sampling statistics, and the verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sl3cv/expr.hpp"
#include "sl3cv/gluing.hpp"
#include "sl3cv/leaves.hpp"
#include "sl3cv/poisson.hpp"
#include "sl3cv/suites.hpp"
#include "sl3cv/trace_oracle.hpp"

namespace {

using namespace sl3cv;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string fixed17(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json matrix_json(const Matrix3& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < 3; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Defining words plus the certified images of the glued coordinates, so the
// bracket command also understands e.g. tr(AbaB).
TraceWordTable word_table(const CharRing& ring, const QStarTable& qstar) {
  TraceWordTable table(ring);
  for (int s = 0; s < VarIndex::kCount; ++s) {
    VarIndex v = VarIndex::at_slot(s);
    table.add(qstar_word(v), qstar.image(v));
  }
  return table;
}

int cmd_ring_dump(bool json) {
  CharRing ring;
  std::string p = ring.P().str();
  std::string q = ring.Q().str();
  std::string rel = ring.relation().str();
  if (json) {
    ordered_json j;
    j["schema"] = "sl3cv-ring/1";
    j["P"] = p;
    j["Q"] = q;
    j["relation"] = rel;
    emit(j);
  } else {
    std::cout << "P = " << p << "\n";
    std::cout << "Q = " << q << "\n";
    std::cout << "relation: " << rel << " = 0\n";
  }
  return kExitPass;
}

int cmd_bracket(const std::string& surface, const std::string& lhs_text,
                const std::string& rhs_text, bool json) {
  CharRing ring;
  BiVector bv = surface == "pants" ? build_bivector_pants(ring) : build_bivector_torus(ring);
  QStarTable qstar = build_qstar(ring);
  TraceWordTable table = word_table(ring, qstar);
  RingElement lhs = Expression::parse(lhs_text).lower(ring, table);
  RingElement rhs = Expression::parse(rhs_text).lower(ring, table);
  RingElement result = bracket(ring, bv, lhs, rhs);
  if (json) {
    ordered_json j;
    j["schema"] = "sl3cv-bracket/1";
    j["surface"] = surface;
    j["lhs"] = lhs_text;
    j["rhs"] = rhs_text;
    j["result"] = result.str();
    emit(j);
  } else {
    std::cout << result.str() << "\n";
  }
  return kExitPass;
}

int cmd_rank(const std::string& surface, int samples, std::uint64_t seed, double tol_rank,
             bool json) {
  CharRing ring;
  BiVector bv = surface == "pants" ? build_bivector_pants(ring) : build_bivector_torus(ring);
  std::map<int, int> histogram;
  for (int i = 0; i < samples; ++i) {
    CharacterPoint pt = sample_character_point(ring, seed, static_cast<std::uint64_t>(i));
    ++histogram[bivector_rank_at(bv, pt.coords, tol_rank)];
  }
  if (json) {
    ordered_json j;
    j["schema"] = "sl3cv-rank/1";
    j["surface"] = surface;
    j["seed"] = seed;
    j["samples"] = samples;
    ordered_json h = ordered_json::object();
    for (const auto& [rank, count] : histogram) h[std::to_string(rank)] = count;
    j["histogram"] = h;
    emit(j);
  } else {
    std::cout << "bi-vector rank over " << samples << " sampled points (" << surface << "):\n";
    for (const auto& [rank, count] : histogram)
      std::cout << "  rank " << rank << ": " << count << "\n";
  }
  return kExitPass;
}

int cmd_sample(int count, std::uint64_t seed, const std::string& format) {
  CharRing ring;
  if (format == "json") {
    ordered_json j;
    j["schema"] = "sl3cv-samples/1";
    j["seed"] = seed;
    j["count"] = count;
    ordered_json points = ordered_json::array();
    for (int i = 0; i < count; ++i) {
      CharacterPoint pt = sample_character_point(ring, seed, static_cast<std::uint64_t>(i));
      ordered_json p;
      p["index"] = i;
      ordered_json coords = ordered_json::array();
      for (const Complex& z : pt.coords) coords.push_back(complex_json(z));
      p["coords"] = coords;
      p["first"] = matrix_json(pt.first);
      p["second"] = matrix_json(pt.second);
      p["residual"] = pt.residual;
      points.push_back(p);
    }
    j["points"] = points;
    emit(j);
  } else {
    static const char* kNames[VarIndex::kCount] = {"t(1)",  "t(-1)", "t(2)", "t(-2)", "t(3)",
                                                   "t(-3)", "t(4)",  "t(-4)", "t(5)"};
    std::cout << "index";
    for (const char* name : kNames) std::cout << "," << name << "_re," << name << "_im";
    for (const char* m : {"first", "second"})
      for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c)
          std::cout << "," << m << "_" << r << c << "_re," << m << "_" << r << c << "_im";
    std::cout << ",residual\n";
    for (int i = 0; i < count; ++i) {
      CharacterPoint pt = sample_character_point(ring, seed, static_cast<std::uint64_t>(i));
      std::cout << i;
      for (const Complex& z : pt.coords)
        std::cout << "," << fixed17(z.real()) << "," << fixed17(z.imag());
      for (const Matrix3* m : {&pt.first, &pt.second})
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) {
            const Complex& z = (*m)(r, c);
            std::cout << "," << fixed17(z.real()) << "," << fixed17(z.imag());
          }
      std::cout << "," << fixed17(pt.residual) << "\n";
    }
  }
  return kExitPass;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, bool json) {
  CharRing ring;
  std::vector<Report> reports;
  if (suite == "all") {
    reports = run_all(ring, opts);
  } else if (suite == "casimirs" || suite == "jacobi") {
    BiVector pants = build_bivector_pants(ring);
    BiVector torus = build_bivector_torus(ring);
    reports.push_back(suite == "casimirs" ? run_casimirs(ring, pants, torus, opts)
                                          : run_jacobi(ring, pants, torus, opts));
  } else if (suite == "identities") {
    reports.push_back(run_identities(ring, opts));
  } else if (suite == "anti-poisson") {
    BiVector pants = build_bivector_pants(ring);
    BiVector torus = build_bivector_torus(ring);
    reports.push_back(run_anti_poisson(ring, pants, torus, opts));
  } else if (suite == "transversality") {
    reports.push_back(run_transversality(ring, opts));
  } else {
    reports.push_back(run_elimination(ring, opts));
  }
  bool all_pass = true;
  for (const Report& r : reports) all_pass = all_pass && r.pass();
  if (json) {
    emit(reports_json(reports));
  } else {
    for (const Report& r : reports) {
      r.print_text(std::cout);
      std::cout << "\n";
    }
    std::cout << (all_pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  }
  return all_pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Poisson structures and numeric verification for the SL(3,C) character "
               "variety of the rank-2 free group"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int samples = 200;
  int count = 1;
  double tol_sym = 1e-8;
  double tol_rank = 1e-8;
  bool json = false;
  bool serial = false;
  std::string surface;
  std::string expr1, expr2;
  std::string format = "json";
  std::string suite;

  CLI::App* ring_cmd = app.add_subcommand("ring", "exact ring data");
  ring_cmd->require_subcommand(1);
  CLI::App* dump_cmd =
      ring_cmd->add_subcommand("dump", "print P, Q, and the trace relation in canonical form");
  dump_cmd->add_flag("--json", json, "emit JSON");

  CLI::App* bracket_cmd =
      app.add_subcommand("bracket", "Poisson bracket of two expressions, as a canonical residue");
  bracket_cmd->add_option("--surface", surface, "which bracket")
      ->required()
      ->check(CLI::IsMember({"pants", "torus"}));
  bracket_cmd->add_option("expr1", expr1, "first expression")->required();
  bracket_cmd->add_option("expr2", expr2, "second expression")->required();
  bracket_cmd->add_flag("--json", json, "emit JSON");

  CLI::App* rank_cmd = app.add_subcommand("rank", "bi-vector rank histogram at sampled points");
  rank_cmd->add_option("--surface", surface, "which bracket")
      ->required()
      ->check(CLI::IsMember({"pants", "torus"}));
  rank_cmd->add_option("--samples", samples, "number of sampled points");
  rank_cmd->add_option("--seed", seed, "base seed");
  rank_cmd->add_option("--tol-rank", tol_rank, "relative singular-value cutoff");
  rank_cmd->add_flag("--json", json, "emit JSON");

  CLI::App* sample_cmd =
      app.add_subcommand("sample", "sample variety points with their matrix provenance");
  sample_cmd->add_option("--count", count, "number of points")->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--seed", seed, "base seed");
  sample_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "which suite")
      ->required()
      ->check(CLI::IsMember({"casimirs", "jacobi", "anti-poisson", "identities",
                             "transversality", "elimination", "all"}));
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--samples", samples, "samples per statistical check");
  verify_cmd->add_option("--tol-sym", tol_sym, "symbolic-vs-numeric certification tolerance");
  verify_cmd->add_option("--tol-rank", tol_rank, "relative singular-value cutoff");
  verify_cmd->add_flag("--json", json, "emit JSON report");
  verify_cmd->add_flag("--serial", serial, "single-threaded reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (dump_cmd->parsed()) return cmd_ring_dump(json);
    if (bracket_cmd->parsed()) return cmd_bracket(surface, expr1, expr2, json);
    if (rank_cmd->parsed()) return cmd_rank(surface, samples, seed, tol_rank, json);
    if (sample_cmd->parsed()) return cmd_sample(count, seed, format);
    SuiteOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    opts.tol_sym = tol_sym;
    opts.tol_rank = tol_rank;
    opts.parallel = !serial;
    return cmd_verify(suite, opts, json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
