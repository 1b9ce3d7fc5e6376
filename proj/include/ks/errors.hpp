#pragma once

#include <stdexcept>
#include <string>

namespace ks {

// Error kinds; the CLI maps validation -> exit 2, numeric -> exit 3.
enum class errc {
  degenerate_triple,
  degenerate_config,
  disks_not_disjoint,
  not_separating,
  nonpositive_ratio,
  nonpositive_delta,
  bad_k,
  invalid_params,
  too_few_disks,
  too_few_bridges,
  no_bridge,
  single_type_dominates,
  elementary_group,
  not_in_rf,
  unknown_artifact_kind,
  io_error,
  numeric_failure,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }
  // true for input/precondition problems, false for numerical breakdowns
  bool is_validation() const { return code_ != errc::numeric_failure; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ks
