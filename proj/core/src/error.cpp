#include "precond/error.hpp"

namespace precond {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::MissingBound: return "MissingBound";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAPrecomplementation: return "NotAPrecomplementation";
    case ErrorCode::NotAnOrthocomplementation: return "NotAnOrthocomplementation";
    case ErrorCode::NotResiduated: return "NotResiduated";
    case ErrorCode::NotAPreconditional: return "NotAPreconditional";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::EmbeddingNotVerified: return "EmbeddingNotVerified";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotBoolean: return "NotBoolean";
    case ErrorCode::ConditioningOnNull: return "ConditioningOnNull";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace precond
