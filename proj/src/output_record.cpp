#include "amsum/output_record.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace amsum {

std::string OutputRecord::to_text() const {
  std::ostringstream os;
  os << value;
  if (!methods.empty()) {
    os << "\n";
    for (const auto& [name, val] : methods) os << "  " << name << ": " << val << "\n";
    if (verdict) os << "verdict: " << *verdict;
  }
  return os.str();
}

std::string OutputRecord::to_json() const {
  nlohmann::json j;
  j["op"] = op;
  nlohmann::json a = nlohmann::json::object();
  for (const auto& [name, val] : args) a[name] = val;
  j["args"] = a;
  j["value"] = value;
  if (!methods.empty()) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [name, val] : methods) m[name] = val;
    j["methods"] = m;
  }
  if (verdict) j["verdict"] = *verdict;
  return j.dump();
}

}  // namespace amsum
