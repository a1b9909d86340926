#pragma once

#include <string>
#include <vector>

namespace catefs {

/// One violated law, identified by a stable code plus human-readable detail.
struct Violation {
  std::string code;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

/// Validator output.  Empty means the instance satisfies every checked axiom.
struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string code, std::string detail) {
    violations.push_back({std::move(code), std::move(detail)});
  }

  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& v : other.violations)
      violations.push_back({v.code, prefix.empty() ? v.detail : prefix + ": " + v.detail});
  }

  std::string to_string() const {
    std::string out;
    for (const auto& v : violations) {
      out += v.code;
      out += ": ";
      out += v.detail;
      out += '\n';
    }
    return out;
  }
};

}  // namespace catefs
