#pragma once

#include <stdexcept>
#include <string>

namespace schurmult {

enum class ErrorCode {
  Parse,
  Invalid,
  Param,
  NotCovered,
  Bound,
  Dimension,
  Consistency,
  Internal,
};

/// Stable short identifier printed by the CLI, e.g. "E_PARSE".
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schurmult
