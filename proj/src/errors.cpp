#include "fatpoints/errors.hpp"

namespace fatpoints {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError:
      return "ParseError";
    case Errc::EmptyScheme:
      return "EmptyScheme";
    case Errc::ZeroRowOrColumn:
      return "ZeroRowOrColumn";
    case Errc::NegativeMultiplicity:
      return "NegativeMultiplicity";
    case Errc::CoordinateArityMismatch:
      return "CoordinateArityMismatch";
    case Errc::CoordinateCollision:
      return "CoordinateCollision";
    case Errc::IndexOutOfRange:
      return "IndexOutOfRange";
    case Errc::UnequalWeight:
      return "UnequalWeight";
    case Errc::NotConjugatePair:
      return "NotConjugatePair";
    case Errc::NotCollinear:
      return "NotCollinear";
    case Errc::NotAcm:
      return "NotAcm";
    case Errc::UnknownEntries:
      return "UnknownEntries";
    case Errc::MissingCoordinates:
      return "MissingCoordinates";
    case Errc::BadPrime:
      return "BadPrime";
    case Errc::SingularChart:
      return "SingularChart";
    case Errc::BadArgument:
      return "BadArgument";
    case Errc::InternalInconsistency:
      return "InternalInconsistency";
    case Errc::TheoremViolation:
      return "TheoremViolation";
  }
  return "UnknownError";
}

}  // namespace fatpoints
