#ifndef DIOPH_ERROR_HPP
#define DIOPH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

enum class Errc {
  InvalidField,
  MixedFields,
  DivisionByZero,
  NotRealEmbeddable,
  InvalidTuple,
  WrongArity,
  NotADPair,
  NotADTriple,
  NonIntegralRoots,
  NotOrderable,
  PreconditionFailed,
  IdentityViolation,
  NotASolution,
  DegreeLawViolation,
  BoundsTooLarge,
  SyntaxError,
  MixedRadicands,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parser failure; `position` is the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dioph

#endif  // DIOPH_ERROR_HPP
