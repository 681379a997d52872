#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace twocat {

uint64_t fnv1aDigest(const std::string& bytes);
std::string digestHex(const std::string& bytes);

// Deterministic machine-readable report: fixed section/check order, exact
// numbers as strings, no timestamps in the payload (timing goes to stderr).
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}
  void setInput(const std::string& name, const std::string& bytes) {
    inputName_ = name;
    inputDigest_ = digestHex(bytes);
  }
  void table(const std::string& name, const std::vector<std::string>& lines);
  void check(const std::string& name, bool pass, const std::string& detail = "");
  bool allPass() const { return allPass_; }
  std::string text() const;
  nlohmann::json json() const;

 private:
  std::string command_, inputName_, inputDigest_;
  std::vector<std::pair<std::string, std::vector<std::string>>> sections_;
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks_;
  bool allPass_ = true;
};

}  // namespace twocat
