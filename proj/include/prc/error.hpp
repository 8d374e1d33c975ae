#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prc {

enum class ErrorCode {
  kInvalidWord,
  kDuplicateWord,
  kInvalidPolarity,
  kParseError,
  kUnknownWord,
  kDuplicateParticipant,
  kInvalidSelection,
  kInvalidRank,
  kInsufficientProducts,
  kDuplicateProduct,
  kMissingAttribute,
  kInvalidOrdering,
  kDegenerateProfile,
  kInvalidProfile,
  kEmptyIntersection,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All validation failures in the toolkit surface as this exception. The CLI
// maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace prc
