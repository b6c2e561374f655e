#include "chipfire/error.hpp"

namespace chipfire {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::ZeroOutdegree: return "ZeroOutdegree";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ColumnsNotZeroSum: return "ColumnsNotZeroSum";
    case ErrorCode::NotLaplacian: return "NotLaplacian";
    case ErrorCode::NotCoEulerian: return "NotCoEulerian";
    case ErrorCode::NegativeChips: return "NegativeChips";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NotRecurrent: return "NotRecurrent";
    case ErrorCode::UnequalTotals: return "UnequalTotals";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace chipfire
