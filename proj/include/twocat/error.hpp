#pragma once

#include <stdexcept>
#include <string>

namespace twocat {

// Error codes mirror the failure modes of the public operations; the CLI maps
// parse errors to exit 2 and check failures to exit 1.
enum class Errc {
  parse_error,
  invalid_window,
  invalid_quiver,
  invalid_relation,
  out_of_window,
  margin_violation,
  contract_violation,
  unsupported,
  unsupported_label,
  infinite_parabolic,
  bad_inclusion,
  invalid_chain,
  resource_limit,
  not_in_cell_rep,
  coalgebra_mismatch,
  locality_failed,
  equivalence_failed,
  construction_bug,
  indeterminate_cell,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace twocat
