#pragma once

#include <stdexcept>
#include <string>

namespace parkgram {

enum class ErrorKind {
  BadParameter,
  ParseError,
  ZeroToNegativePower,
  UnassignedVariable,
  OrderTooLarge,
  ShapeViolation,
  LengthMismatch,
  TooLarge,
  EntryOutOfRange,
  NotAParkingFunction,
  GcdViolation,
  NonIntegralShift,
  NonIntegerResult,
  ZeroArgument,
  DegenerateParameter,
  ModViolation,
  UnknownGrammar,
};

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::NotAParkingFunction: return "NotAParkingFunction";
    case ErrorKind::GcdViolation: return "GcdViolation";
    case ErrorKind::NonIntegralShift: return "NonIntegralShift";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::ModViolation: return "ModViolation";
    case ErrorKind::UnknownGrammar: return "UnknownGrammar";
  }
  return "Error";
}

/// All library failures carry a machine-checkable kind plus a human message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace parkgram
