#pragma once

#include <stdexcept>
#include <string>

namespace berge {

enum class ErrorCode {
  parse,
  invalid_vertex,
  invalid_argument,
  precondition,
  guardrail,
  // A proven property failed to hold; always an implementation bug.
  theorem_violation,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace berge
