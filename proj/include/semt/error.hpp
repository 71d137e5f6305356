#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semt {

enum class ErrorKind {
  EvenCycle,
  BadShape,
  NotBijective,
  NotConsecutive,
  ConstraintViolated,
  KTooSmall,
  NotValid,
  Overflow,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EvenCycle: return "EvenCycle";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotConsecutive: return "NotConsecutive";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::NotValid: return "NotValid";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// Every domain failure in the library surfaces as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semt
