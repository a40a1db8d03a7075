#pragma once

#include <stdexcept>
#include <string>

namespace lieb {

enum class ErrorCode {
  Domain,           // argument outside the mathematical domain
  InvalidArgument,  // malformed configuration or input
  NonConvergent,    // subdivision budget exhausted
  DivergentTail,    // integrand does not decay fast enough at infinity
  ScreenRejected,   // convergence screen refused the integral
  Diverged,         // fixed-point iteration blew up
  NonPositive,      // iterate lost positivity
  Parse,            // form / config / JSON text could not be parsed
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lieb
