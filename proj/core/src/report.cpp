#include "pdgrid/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace pdgrid {

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckResult& Report::check(const std::string& name) {
  for (auto& c : checks) {
    if (c.name == name) return c;
  }
  checks.push_back({name, true, 0, {}});
  return checks.back();
}

void Report::fail(const std::string& name, const std::string& witness) {
  CheckResult& c = check(name);
  if (c.pass) c.witness = witness;
  c.pass = false;
  ++c.failures;
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) {
    CheckResult& mine = check(c.name);
    if (!c.pass) {
      if (mine.pass) mine.witness = c.witness;
      mine.pass = false;
      mine.failures += c.failures;
    }
  }
}

std::string serialize_report(const Report& r) {
  using nlohmann::json;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry = {{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) {
      entry["failures"] = c.failures;
      entry["witness"] = c.witness;
    }
    checks.push_back(std::move(entry));
  }
  return json{{"format", 1}, {"pass", r.ok()}, {"checks", std::move(checks)}}.dump(1);
}

}  // namespace pdgrid
