#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

// Every failure mode the library can report.  The CLI maps these to exit
// codes: TheoremViolation / InternalInconsistency signal a bug in the engine
// itself (exit 1), everything else is an input or precondition problem
// (exit 2).
enum class Errc {
  ParseError,
  EmptyScheme,
  ZeroRowOrColumn,
  NegativeMultiplicity,
  CoordinateArityMismatch,
  CoordinateCollision,
  IndexOutOfRange,
  UnequalWeight,
  NotConjugatePair,
  NotCollinear,
  NotAcm,
  UnknownEntries,
  MissingCoordinates,
  BadPrime,
  SingularChart,
  BadArgument,
  InternalInconsistency,
  TheoremViolation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace fatpoints
