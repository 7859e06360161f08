#pragma once

#include <stdexcept>
#include <string>

namespace dd {

// Domain error taxonomy shared by all modules. The CLI maps these to exit
// code 2; anything else (bad flags, unparsable input) is a usage error.
enum class Errc {
  EmptyDigitSet,
  OnlyZeroDigit,
  DigitOutOfRange,
  EnumerationTooLarge,
  NearCandidatePole,
  PreconditionViolated,
  OutsideHalfPlane,
  TooCloseToPole,
  DepthInsufficient,
  NotN1System,
  IsRiemannZeta,
  NearZeroOfE,
  UnsupportedCase,
  NearPoleOfC,
  DefmuUndefined,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace dd
