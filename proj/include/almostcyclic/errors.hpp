#pragma once

#include <stdexcept>
#include <string>

namespace acyc {

enum class ErrorCode {
  InvalidType,
  RankMismatch,
  NotDominant,
  InvalidArgument,
  NotInLattice,
  Unsupported,
  SpinEvaluation,
  ContextMismatch,
  NotRegular,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace acyc
