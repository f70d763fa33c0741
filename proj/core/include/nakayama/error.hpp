#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

enum class ErrorCode {
  invalid_size,
  invalid_kupisch,
  invalid_module,
  out_of_range,
  unknown_vertex,
  not_applicable,
  unsupported_input,
  not_tilting,
  not_a_summand,
  duplicate_module,
  parse_error,
  internal_inconsistency,
  verification_failed,
};

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nakayama
