#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hessgkm {

enum class Errc {
  ParseError,
  NotWeaklyIncreasing,
  BelowDiagonal,
  OutOfRange,
  IndexOutOfRange,
  SizeMismatch,
  CapExceeded,
  InvalidCardinality,
  NotConnected,
  PreconditionUnmet,
  BudgetExceeded,
  NonIntegralSolution,
};

std::string_view errc_name(Errc code);

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hessgkm
