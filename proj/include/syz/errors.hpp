#ifndef SYZ_ERRORS_HPP
#define SYZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syz {

// Stable error codes; the CLI maps DomainError -> exit 1, ParseError -> exit 2.
enum class ErrorCode {
  ParallelLines,
  UnsupportedOrientation,
  MismatchedDegree,
  MismatchedClass,
  DisconnectedResult,
  UnsupportedClassification,
  NoLift,
  Precondition,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParallelLines: return "parallel-lines";
    case ErrorCode::UnsupportedOrientation: return "unsupported-orientation";
    case ErrorCode::MismatchedDegree: return "mismatched-degree";
    case ErrorCode::MismatchedClass: return "mismatched-class";
    case ErrorCode::DisconnectedResult: return "disconnected-result";
    case ErrorCode::UnsupportedClassification: return "unsupported-classification";
    case ErrorCode::NoLift: return "no-lift";
    case ErrorCode::Precondition: return "precondition";
  }
  return "unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error("parse: " + message) {}
};

}  // namespace syz

#endif
