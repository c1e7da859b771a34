// Validation reports: a flat list of named checks.

#pragma once

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace gmhs {

enum class Outcome { pass, fail, unknown };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

struct Check {
  std::string name;
  Outcome outcome = Outcome::pass;
  std::string detail;
};

class ValidationReport {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(detail)});
  }
  void add(Check c) { checks_.push_back(std::move(c)); }
  void merge(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_)
      checks_.push_back({prefix.empty() ? c.name : prefix + ": " + c.name, c.outcome, c.detail});
  }

  [[nodiscard]] bool ok() const {
    return std::none_of(checks_.begin(), checks_.end(),
                        [](const Check& c) { return c.outcome != Outcome::pass; });
  }
  [[nodiscard]] std::vector<Check> failures() const {
    std::vector<Check> out;
    std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out),
                 [](const Check& c) { return c.outcome != Outcome::pass; });
    return out;
  }
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  [[nodiscard]] std::size_t size() const { return checks_.size(); }

  /// True when some failing check name contains `needle`.
  [[nodiscard]] bool fails_with(const std::string& needle) const {
    return std::any_of(checks_.begin(), checks_.end(), [&](const Check& c) {
      return c.outcome == Outcome::fail &&
             (c.name.find(needle) != std::string::npos || c.detail.find(needle) != std::string::npos);
    });
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace gmhs
