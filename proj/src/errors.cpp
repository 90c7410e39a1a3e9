#include "renyi/errors.hpp"

namespace renyi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeComponent: return "NegativeComponent";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::NegativeOrder: return "NegativeOrder";
    case ErrorCode::UnsortedGrid: return "UnsortedGrid";
    case ErrorCode::BadInterp: return "BadInterp";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoRootInUnitInterval: return "NoRootInUnitInterval";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::EqualOrders: return "EqualOrders";
    case ErrorCode::OrderOutsideValidity: return "OrderOutsideValidity";
    case ErrorCode::Disordered: return "Disordered";
    case ErrorCode::BadBins: return "BadBins";
    case ErrorCode::BadCount: return "BadCount";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::DegenerateOrders: return "DegenerateOrders";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace renyi
