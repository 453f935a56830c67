#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sylsync {

enum class Errc {
  degree_mismatch,
  invalid_permutation,
  order_exceeds_cap,
  not_normal,
  tuple_space_too_large,
  wrong_hypothesis,
  hypothesis_fails,
  not_a_cover,
  redundant,
  prime_too_small,
  not_semidirect,
  sylow_too_large,
  parse_error,
  validation_error,
  invalid_argument,
};

std::string_view to_string(Errc code);

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sylsync
