#include "dd/errors.hpp"

namespace dd {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyDigitSet: return "EmptyDigitSet";
    case Errc::OnlyZeroDigit: return "OnlyZeroDigit";
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NearCandidatePole: return "NearCandidatePole";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::OutsideHalfPlane: return "OutsideHalfPlane";
    case Errc::TooCloseToPole: return "TooCloseToPole";
    case Errc::DepthInsufficient: return "DepthInsufficient";
    case Errc::NotN1System: return "NotN1System";
    case Errc::IsRiemannZeta: return "IsRiemannZeta";
    case Errc::NearZeroOfE: return "NearZeroOfE";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::NearPoleOfC: return "NearPoleOfC";
    case Errc::DefmuUndefined: return "DefmuUndefined";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dd
