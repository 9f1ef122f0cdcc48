#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace combsphere {

enum class ErrorCode {
  EmptyInput,
  NonPure,
  DuplicateVertexInFacet,
  LabelOutOfRange,
  VertexNotPresent,
  NonPureResult,
  VertexSetsOverlap,
  NotProperSubcomplex,
  RidgeInThreeFacets,
  DimensionTooLow,
  FreshVertexCollision,
  NotClosedPseudomanifold,
  LinkNotStandardSphere,
  SigmaAlreadyFace,
  MovePreconditionFailed,
  NotStacked,
  NotStackedBall,
  NotSphere,
  NotBall,
  FactorJoinMismatch,
  FactorNotSphere,
  NoDegreeDVertex,
  TooFewVertices,
  NotFlag,
  NotDisc,
  IntermediateClaimFailed,
  TooFewPoints,
  DegenerateSpan,
  NotSimplicial,
  NotGeneralPosition,
  TypeMismatch,
  PerturbationBudgetExhausted,
  UnknownName,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPure: return "NonPure";
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::VertexNotPresent: return "VertexNotPresent";
    case ErrorCode::NonPureResult: return "NonPureResult";
    case ErrorCode::VertexSetsOverlap: return "VertexSetsOverlap";
    case ErrorCode::NotProperSubcomplex: return "NotProperSubcomplex";
    case ErrorCode::RidgeInThreeFacets: return "RidgeInThreeFacets";
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::FreshVertexCollision: return "FreshVertexCollision";
    case ErrorCode::NotClosedPseudomanifold: return "NotClosedPseudomanifold";
    case ErrorCode::LinkNotStandardSphere: return "LinkNotStandardSphere";
    case ErrorCode::SigmaAlreadyFace: return "SigmaAlreadyFace";
    case ErrorCode::MovePreconditionFailed: return "MovePreconditionFailed";
    case ErrorCode::NotStacked: return "NotStacked";
    case ErrorCode::NotStackedBall: return "NotStackedBall";
    case ErrorCode::NotSphere: return "NotSphere";
    case ErrorCode::NotBall: return "NotBall";
    case ErrorCode::FactorJoinMismatch: return "FactorJoinMismatch";
    case ErrorCode::FactorNotSphere: return "FactorNotSphere";
    case ErrorCode::NoDegreeDVertex: return "NoDegreeDVertex";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotFlag: return "NotFlag";
    case ErrorCode::NotDisc: return "NotDisc";
    case ErrorCode::IntermediateClaimFailed: return "IntermediateClaimFailed";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::PerturbationBudgetExhausted: return "PerturbationBudgetExhausted";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Raised for every contract violation in the library; `code()` identifies
/// which precondition failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace combsphere
