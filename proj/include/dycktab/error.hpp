#pragma once

#include <stdexcept>
#include <string>

namespace dycktab {

/// Error categories raised by the library. The CLI maps these names to
/// exit diagnostics, so they are part of the public surface.
enum class Errc {
  LexError,
  GrammarError,
  NotDyck,
  WeightTooLarge,
  PositionNotWeight,
  EmptyWord,
  NotADiamond,
  BadPositions,
  IndexOutOfRange,
  InvalidHistory,
  InvalidPermutation,
  PositionOutOfRange,
  SizeTooLarge,
  UnknownProposition,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  /// `index` is the 1-based token/letter index of the first offense for
  /// parse-type errors, 0 when there is no meaningful position.
  Error(Errc code, const std::string& message, int index = 0)
      : std::runtime_error(index > 0 ? message + " (token " + std::to_string(index) + ")"
                                     : message),
        code_(code),
        index_(index) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }
  int index() const { return index_; }

 private:
  Errc code_;
  int index_;
};

}  // namespace dycktab
