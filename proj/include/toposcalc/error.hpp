#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toposcalc {

enum class ErrorKind {
  // Input is structurally wrong; the CLI maps these to exit status 2.
  MalformedInput,
  LawViolation,
  UnknownObject,
  UnknownElement,
  UnboundVariable,
  ArityMismatch,
  CorpusMissing,
  // Input parses but violates an operation's precondition; exit status 3.
  BaseMismatch,
  NotFullSubcategory,
  NotATopology,
  NotASheaf,
  NaturalityViolation,
  SiteNotLocallyConnected,
  NotAtomicSite,
  NotAnAtom,
  SignatureMismatch,
  LengthMismatch,
  GroupTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// True for the kinds that describe malformed input rather than a
/// violated precondition.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toposcalc
