#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace phl {

using Json = nlohmann::ordered_json;

/// Outcome of one named check. Witnesses hold offending data; `data` holds
/// measurements that are reported regardless of the outcome.
struct CheckResult {
  std::string name;
  bool passed = true;
  Json witnesses = Json::array();
  Json data = Json::object();
  double elapsed_ms = 0.0;

  explicit CheckResult(std::string n) : name(std::move(n)) {}

  void fail(Json witness) {
    passed = false;
    witnesses.push_back(std::move(witness));
  }
  /// Records `witness` as a failure when `ok` is false.
  void expect(bool ok, Json witness) {
    if (!ok) fail(std::move(witness));
  }
};

using CheckFragment = std::vector<CheckResult>;

/// Ordered collection of uniquely named check results.
class CheckReport {
 public:
  /// Throws std::logic_error if a check with the same name is already present.
  void add(CheckResult result);
  void add(CheckFragment fragment);

  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const;
  bool all_passed() const;
  std::size_t failed_count() const;

  /// {"checks": [{"name", "status", "witnesses", "data"}]}. Timings are left
  /// out so the serialization is reproducible.
  Json to_json() const;
  /// One line per check with status and timing.
  std::string summary() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Runs `fn` (returning CheckResult) and stamps its wall time.
template <typename Fn>
CheckResult timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = fn();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace phl
