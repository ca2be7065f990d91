#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pdgrid {

/// Outcome of a named check. `witness` names the offending vertices, edges
/// or faces (with coordinates where relevant) for the first failure found.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t failures = 0;
  std::string witness;
};

struct Report {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  /// Returns the entry, creating a passing one on first use.
  CheckResult& check(const std::string& name);
  void fail(const std::string& name, const std::string& witness);
  void merge(const Report& other);
};

std::string serialize_report(const Report& r);

}  // namespace pdgrid
