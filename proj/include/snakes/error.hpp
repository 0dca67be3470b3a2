#ifndef SNAKES_ERROR_HPP
#define SNAKES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace snakes {

enum class Errc {
  EmptyWord,
  TooShort,
  BadWordText,
  BadBlockText,
  InvalidWord,
  NotReducible,
  NotDeletable,
  ParamsUndefined,
  BadInsertionIndex,
  BoundExceeded,
  CorruptCache,
  Io,
  InvalidTableau,
  ModelUndefined,
  BadExponents,
  BadIndex,
  Precondition,
};

/// Domain error carrying one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace snakes

#endif  // SNAKES_ERROR_HPP
