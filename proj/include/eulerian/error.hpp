#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerian {

enum class Errc {
  ZeroPolynomial,
  NotPalindromic,
  NotTypeA,
  TooSmallForD,
  NotApplicable,
  BudgetExceeded,
  InternalNonIntegral,
  SymmetryViolated,
  NotInSpan,
  FactorizationUnavailable,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eulerian
