#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace probekit {

enum class ErrorKind {
  ZeroVector,
  NotPrimitive,
  DimensionMismatch,
  FieldMismatch,
  DivisionByZero,
  NotDelzant,
  InfeasibleEmpty,
  NotUnimodular,
  DuplicateFacet,
  NotInterior,
  AssumptionNotAcknowledged,
  UnboundedRay,
  HitsLowerFace,
  NotTransverse,
  NotOnProbe,
  BaseNotInGraph,
  NotReductionType,
  NonPositiveEntry,
  LengthMismatch,
  RankNotOne,
  NotEquivalent,
  WordSearchExhausted,
  PreconditionViolated,
  SliceMissesPolytope,
  NotAdmissible,
  SliceInsideFacet,
  InducedNotPrimitive,
  NormalsDoNotSpan,
  UnknownPreset,
  NotInClosedForm,
  ParseError,
  ValidationError,
  NotPlanar,
};

std::string_view to_string(ErrorKind k);

// Every library failure is reported through this one type so callers
// (the CLI in particular) can map kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace probekit
