#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jenga {

enum class ErrorCode {
  MalformedHeader,
  LineLength,
  EmptyLevel,
  BadCharacter,
  ParamOutOfRange,
  NotOdd,
  InvalidSurface,
  Disconnected,
  NonIntegral,
  UnsupportedCensus,
  Mismatch,
  IllegalMove,
  IllegalOperation,
  Incompatible,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so callers (and the CLI)
// can tell domain errors apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jenga
