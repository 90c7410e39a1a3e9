#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace renyi {

enum class ErrorCode {
  NegativeComponent,
  NotNormalized,
  ZeroSum,
  EmptyVector,
  BadK,
  NegativeOrder,
  UnsortedGrid,
  BadInterp,
  OutOfRange,
  NoRootInUnitInterval,
  MultipleRoots,
  EqualOrders,
  OrderOutsideValidity,
  Disordered,
  BadBins,
  BadCount,
  BadGrid,
  LevelOutOfRange,
  DegenerateOrders,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Input validation failure. Every error raised by the library for bad
/// user-supplied data is one of these; anything else is an internal fault.
class EntropyError : public std::invalid_argument {
 public:
  EntropyError(ErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace renyi
