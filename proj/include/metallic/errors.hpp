#pragma once

#include <stdexcept>
#include <string>

namespace metallic {

enum class ErrorCode {
  kInvalidArgument,
  kParamsMismatch,
  kCapExceeded,
  kInvalidRemovalCount,
  kPolicyIndexMismatch,
  kEmptyFractal,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code lets the command-line front end pick an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metallic
