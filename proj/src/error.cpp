#include "lcs/error.hpp"

#include <numeric>

#include "lcs/types.hpp"

namespace lcs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::DegenerateSignal: return "DegenerateSignal";
    case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::InvalidBudget: return "InvalidBudget";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::EmptyAfterFilter: return "EmptyAfterFilter";
    case ErrorCode::InvalidSplit: return "InvalidSplit";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

double squared_norm(const std::vector<Complex>& v) noexcept {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return acc;
}

}  // namespace lcs
