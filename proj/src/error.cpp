#include "toposcalc/error.hpp"

namespace toposcalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::CorpusMissing: return "CorpusMissing";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotFullSubcategory: return "NotFullSubcategory";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::NotASheaf: return "NotASheaf";
    case ErrorKind::NaturalityViolation: return "NaturalityViolation";
    case ErrorKind::SiteNotLocallyConnected: return "SiteNotLocallyConnected";
    case ErrorKind::NotAtomicSite: return "NotAtomicSite";
    case ErrorKind::NotAnAtom: return "NotAnAtom";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::LawViolation:
    case ErrorKind::UnknownObject:
    case ErrorKind::UnknownElement:
    case ErrorKind::UnboundVariable:
    case ErrorKind::ArityMismatch:
    case ErrorKind::CorpusMissing:
      return true;
    default:
      return false;
  }
}

}  // namespace toposcalc
