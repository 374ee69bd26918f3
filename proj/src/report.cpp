#include "phl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace phl {

void CheckReport::add(CheckResult result) {
  if (find(result.name) != nullptr) throw std::logic_error("duplicate check name: " + result.name);
  checks_.push_back(std::move(result));
}

void CheckReport::add(CheckFragment fragment) {
  for (auto& r : fragment) add(std::move(r));
}

const CheckResult* CheckReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckResult& r) { return r.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool CheckReport::all_passed() const { return failed_count() == 0; }

std::size_t CheckReport::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& r) { return !r.passed; }));
}

Json CheckReport::to_json() const {
  Json checks = Json::array();
  for (const auto& r : checks_) {
    Json c;
    c["name"] = r.name;
    c["status"] = r.passed ? "pass" : "fail";
    c["witnesses"] = r.witnesses;
    c["data"] = r.data;
    checks.push_back(std::move(c));
  }
  Json out;
  out["checks"] = std::move(checks);
  return out;
}

std::string CheckReport::summary() const {
  std::string out;
  char line[256];
  for (const auto& r : checks_) {
    std::snprintf(line, sizeof line, "%-4s %-40s %9.1f ms\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                  r.elapsed_ms);
    out += line;
  }
  std::snprintf(line, sizeof line, "%zu/%zu checks passed\n", checks_.size() - failed_count(), checks_.size());
  out += line;
  return out;
}

}  // namespace phl
