#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ugg {

enum class ErrorKind {
  IndexOutOfRange,
  EqualIndices,
  InvalidSize,
  SizeTooLarge,
  IntervalTooSmall,
  DegenerateEdge,
  InvalidS,
  PreconditionViolated,
  DomainMismatch,
  SizeMismatch,
  InternalInvariantBroken,
  NotACaterpillar,
  NotTwoChord,
  NoRealizingPair,
  NoSpanningCycle,
  MalformedInput,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EqualIndices: return "EqualIndices";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::IntervalTooSmall: return "IntervalTooSmall";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::InvalidS: return "InvalidS";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorKind::NotACaterpillar: return "NotACaterpillar";
    case ErrorKind::NotTwoChord: return "NotTwoChord";
    case ErrorKind::NoRealizingPair: return "NoRealizingPair";
    case ErrorKind::NoSpanningCycle: return "NoSpanningCycle";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` carries the category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace detail
}  // namespace ugg
