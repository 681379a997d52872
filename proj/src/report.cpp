#include "twocat/report.hpp"

#include <sstream>

#include "twocat/error.hpp"

namespace twocat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "parse-error";
    case Errc::invalid_window: return "invalid-window";
    case Errc::invalid_quiver: return "invalid-quiver";
    case Errc::invalid_relation: return "invalid-relation";
    case Errc::out_of_window: return "out-of-window";
    case Errc::margin_violation: return "margin-violation";
    case Errc::contract_violation: return "contract-violation";
    case Errc::unsupported: return "unsupported";
    case Errc::unsupported_label: return "unsupported-label";
    case Errc::infinite_parabolic: return "infinite-parabolic";
    case Errc::bad_inclusion: return "bad-inclusion";
    case Errc::invalid_chain: return "invalid-chain";
    case Errc::resource_limit: return "resource-limit";
    case Errc::not_in_cell_rep: return "not-in-cell-rep";
    case Errc::coalgebra_mismatch: return "coalgebra-mismatch";
    case Errc::locality_failed: return "locality-failed";
    case Errc::equivalence_failed: return "equivalence-failed";
    case Errc::construction_bug: return "construction-bug";
    case Errc::indeterminate_cell: return "indeterminate-cell";
  }
  return "unknown";
}

uint64_t fnv1aDigest(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digestHex(const std::string& bytes) {
  std::ostringstream os;
  os << std::hex << fnv1aDigest(bytes);
  return os.str();
}

void Report::table(const std::string& name, const std::vector<std::string>& lines) {
  sections_.emplace_back(name, lines);
}

void Report::check(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back({name, pass, detail});
  if (!pass) allPass_ = false;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "# twocat report v1\n";
  os << "command: " << command_ << "\n";
  if (!inputName_.empty()) os << "input: " << inputName_ << " digest=fnv1a:" << inputDigest_ << "\n";
  for (const auto& [name, lines] : sections_) {
    os << "[" << name << "]\n";
    for (const auto& l : lines) os << l << "\n";
  }
  for (const auto& c : checks_)
    os << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL")
       << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  os << "result: " << (allPass_ ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json Report::json() const {
  nlohmann::json j;
  j["report"] = "twocat-v1";
  j["command"] = command_;
  if (!inputName_.empty()) {
    j["input"] = inputName_;
    j["digest"] = "fnv1a:" + inputDigest_;
  }
  nlohmann::json sections = nlohmann::json::object();
  for (const auto& [name, lines] : sections_) sections[name] = lines;
  j["sections"] = sections;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["result"] = allPass_ ? "PASS" : "FAIL";
  return j;
}

}  // namespace twocat
