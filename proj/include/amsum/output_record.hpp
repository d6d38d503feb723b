#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace amsum {

/// One CLI result: the query echo, the exact value string and, when a
/// command compares several evaluation routes, the per-method values and the
/// equality verdict. Text and JSON renderings carry the same fields; JSON is
/// one object per line.
struct OutputRecord {
  std::string op;
  std::vector<std::pair<std::string, std::string>> args;
  std::string value;
  std::vector<std::pair<std::string, std::string>> methods;
  std::optional<std::string> verdict;

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace amsum
