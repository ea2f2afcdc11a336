#include "dioph/error.hpp"

namespace dioph {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidField: return "InvalidField";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotRealEmbeddable: return "NotRealEmbeddable";
    case Errc::InvalidTuple: return "InvalidTuple";
    case Errc::WrongArity: return "WrongArity";
    case Errc::NotADPair: return "NotADPair";
    case Errc::NotADTriple: return "NotADTriple";
    case Errc::NonIntegralRoots: return "NonIntegralRoots";
    case Errc::NotOrderable: return "NotOrderable";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::IdentityViolation: return "IdentityViolation";
    case Errc::NotASolution: return "NotASolution";
    case Errc::DegreeLawViolation: return "DegreeLawViolation";
    case Errc::BoundsTooLarge: return "BoundsTooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::MixedRadicands: return "MixedRadicands";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& what)
    : Error(Errc::SyntaxError, what + " at offset " + std::to_string(position)),
      position_(position) {}

}  // namespace dioph
