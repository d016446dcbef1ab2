#include "probekit/errors.hpp"

namespace probekit {

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotDelzant: return "NotDelzant";
    case ErrorKind::InfeasibleEmpty: return "InfeasibleEmpty";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DuplicateFacet: return "DuplicateFacet";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::AssumptionNotAcknowledged: return "AssumptionNotAcknowledged";
    case ErrorKind::UnboundedRay: return "UnboundedRay";
    case ErrorKind::HitsLowerFace: return "HitsLowerFace";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NotOnProbe: return "NotOnProbe";
    case ErrorKind::BaseNotInGraph: return "BaseNotInGraph";
    case ErrorKind::NotReductionType: return "NotReductionType";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::RankNotOne: return "RankNotOne";
    case ErrorKind::NotEquivalent: return "NotEquivalent";
    case ErrorKind::WordSearchExhausted: return "WordSearchExhausted";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SliceMissesPolytope: return "SliceMissesPolytope";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::SliceInsideFacet: return "SliceInsideFacet";
    case ErrorKind::InducedNotPrimitive: return "InducedNotPrimitive";
    case ErrorKind::NormalsDoNotSpan: return "NormalsDoNotSpan";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::NotInClosedForm: return "NotInClosedForm";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NotPlanar: return "NotPlanar";
  }
  return "Unknown";
}

}  // namespace probekit
