#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivfg {

enum class ErrorCode {
  // document parsing
  SyntaxError,
  UnknownField,
  BadNumber,
  // graph queries
  UnknownVertex,
  LoopQuery,
  InvalidGraph,
  // constructions
  SeparatorCollision,
  NonDisjointVertexSets,
  // morphisms
  PartialMapping,
  NotBijective,
  BudgetExceeded,
  // complement family
  NotComplete,
  HypothesisNotMet,
  // arithmetic
  Overflow,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::BadNumber: return "BadNumber";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::LoopQuery: return "LoopQuery";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::SeparatorCollision: return "SeparatorCollision";
    case ErrorCode::NonDisjointVertexSets: return "NonDisjointVertexSets";
    case ErrorCode::PartialMapping: return "PartialMapping";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Single exception type for the library; callers branch on `code()`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ivfg
