#include "rothe/error.hpp"

namespace rothe {

const char *to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::DuplicateValue: return "DuplicateValue";
  case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
  case ErrorCode::SquareNotInDiagram: return "SquareNotInDiagram";
  case ErrorCode::NotThreeTwoOneAvoiding: return "NotThreeTwoOneAvoiding";
  case ErrorCode::NotApplicable: return "NotApplicable";
  case ErrorCode::NonExactDivision: return "NonExactDivision";
  case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorCode::RingMismatch: return "RingMismatch";
  case ErrorCode::EmptySequence: return "EmptySequence";
  case ErrorCode::No1432Occurrence: return "No1432Occurrence";
  case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
  case ErrorCode::MethodNotApplicable: return "MethodNotApplicable";
  case ErrorCode::ResourceCap: return "ResourceCap";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace rothe
