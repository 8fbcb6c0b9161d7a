#ifndef NERALIGN_ERRORS_HPP
#define NERALIGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace neralign {

// Stable machine-readable reasons for domain-level failures. The CLI maps
// these to exit code 3 (negative verdict / unusable input data), while
// malformed files map to ParseError and exit code 2.
enum class ErrorCode {
  kUnitLabel,
  kEmptyInput,
  kUnknownGenerator,
  kUnknownVertex,
  kNotConnected,
  kNotAligned,
  kNotCartier,
  kNoZeroVertex,
  kZeroThicknessEdge,
  kDegenerateTrait,
  kNoCorner,
  kNoExactExpansion,
  kEmptySide,
  kNotInA,
  kWindowTooSmall,
  kZeroWidth,
  kBadInput,
};

const char* error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace neralign

#endif  // NERALIGN_ERRORS_HPP
