#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

enum class ErrorCode {
  NotSquare,
  NegativeMultiplicity,
  ZeroOutdegree,
  NotStronglyConnected,
  VertexOutOfRange,
  DimensionMismatch,
  SingularMatrix,
  RankDeficient,
  ColumnsNotZeroSum,
  NotLaplacian,
  NotCoEulerian,
  NegativeChips,
  NotStable,
  NotRecurrent,
  UnequalTotals,
  TooLarge,
};

const char* to_string(ErrorCode code);

// Every contract violation in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chipfire
