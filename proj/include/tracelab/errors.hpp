#pragma once

#include <stdexcept>
#include <string>

namespace tracelab {

enum class Errc {
  SyntaxError,
  EmptyAfterReduction,
  NotAlternatingReducible,
  DivisionByZero,
  ZeroPolynomial,
  DegenerateParameter,
  ClosureFailure,
  NoRepresentationFound,
  BadOrder,
  NotStable,
  CensusMismatch,
  RelatorNotKilled,
  IdentityViolated,
  PreconditionViolated,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tracelab
