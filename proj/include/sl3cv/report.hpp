#pragma once
// Verification reports. The JSON form is the reproducibility surface: for a
// fixed seed and tool version it is byte-identical across reruns and thread
// counts, so wall-clock timings appear only in the human-readable text form.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sl3cv {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  double tol_sym = 1e-8;
  double tol_rank = 1e-8;
  std::optional<int> sign;  // anti-Poisson global sign, when measured
  std::vector<Check> checks;
  double seconds = 0.0;  // excluded from JSON

  bool pass() const;
  Check& add(std::string name, bool pass, std::string detail = "");

  nlohmann::ordered_json to_json() const;
  void print_text(std::ostream& out) const;
};

nlohmann::ordered_json reports_json(const std::vector<Report>& reports);

}  // namespace sl3cv
