#include "sl3cv/report.hpp"

#include <iomanip>

namespace sl3cv {

namespace {
constexpr const char* kSchema = "sl3cv-report/1";
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Check& Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back(Check{std::move(name), pass, std::move(detail)});
  return checks.back();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["suite"] = suite;
  j["seed"] = seed;
  j["samples"] = samples;
  j["tol_sym"] = tol_sym;
  j["tol_rank"] = tol_rank;
  if (sign) j["sign"] = *sign;
  j["pass"] = pass();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    arr.push_back(std::move(jc));
  }
  return j;
}

void Report::print_text(std::ostream& out) const {
  out << "suite " << suite << " (seed " << seed << ", samples " << samples << ")\n";
  for (const auto& c : checks) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  if (sign) out << "  sign s = " << (*sign > 0 ? "+" : "") << *sign << "\n";
  out << "  " << (pass() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, "
      << std::fixed << std::setprecision(2) << seconds << " s)\n";
  out.unsetf(std::ios::floatfield);
}

nlohmann::ordered_json reports_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  bool all = true;
  auto& arr = j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.pass();
    arr.push_back(r.to_json());
  }
  j["pass"] = all;
  return j;
}

}  // namespace sl3cv
