#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hibound {

enum class ErrorCode {
  InvalidParams,
  EdgeWrongSize,
  VertexOutOfRange,
  DuplicateEdge,
  InfeasibleParams,
  AttemptsExhausted,
  DomainError,
  OutOfRange,
  WrongUniformity,
  MalformedHeader,
  EdgeArity,
  IndexOutOfRange,
  DuplicateEdgeLine,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. Parse errors carry the 1-based line
/// number of the offending input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace hibound
