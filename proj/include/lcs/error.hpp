#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcs {

enum class ErrorCode {
  InvalidShape,
  InvalidIndex,
  DegenerateSignal,
  EmptyTrainingSet,
  InvalidBudget,
  TooLarge,
  InvalidParams,
  BudgetTooSmall,
  EmptyAfterFilter,
  InvalidSplit,
  EmptyInput,
  Io,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can classify it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // IO and parse failures are environmental; everything else is a validation error.
  bool is_io() const noexcept { return code_ == ErrorCode::Io || code_ == ErrorCode::Parse; }

 private:
  ErrorCode code_;
};

}  // namespace lcs
