#include "prc/error.hpp"

namespace prc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidWord: return "InvalidWord";
    case ErrorCode::kDuplicateWord: return "DuplicateWord";
    case ErrorCode::kInvalidPolarity: return "InvalidPolarity";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownWord: return "UnknownWord";
    case ErrorCode::kDuplicateParticipant: return "DuplicateParticipant";
    case ErrorCode::kInvalidSelection: return "InvalidSelection";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kInsufficientProducts: return "InsufficientProducts";
    case ErrorCode::kDuplicateProduct: return "DuplicateProduct";
    case ErrorCode::kMissingAttribute: return "MissingAttribute";
    case ErrorCode::kInvalidOrdering: return "InvalidOrdering";
    case ErrorCode::kDegenerateProfile: return "DegenerateProfile";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kEmptyIntersection: return "EmptyIntersection";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Error";
}

}  // namespace prc
