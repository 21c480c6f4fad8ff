#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locdom {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EdgeOutOfRange,
  TooLarge,
  BadLength,
  BadCharacter,
  HeaderMismatch,
  BadSyntax,
  NotConnected,
  Infeasible,
  NotATree,
  EdgeTwins,
  DiameterTooSmall,
  EmptyFamily,
  TooSmall,
  UnknownName,
  SpecTooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to a diagnostic and exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace locdom
