#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valleyforge {

enum class errc {
  bad_symbol,
  unbalanced_word,
  negative_prefix,
  not_in_class,
  unsupported_params,
  empty_path,
  cap_exceeded,
  domain_violation,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::bad_symbol: return "BadSymbol";
    case errc::unbalanced_word: return "UnbalancedWord";
    case errc::negative_prefix: return "NegativePrefix";
    case errc::not_in_class: return "NotInClass";
    case errc::unsupported_params: return "UnsupportedParams";
    case errc::empty_path: return "EmptyPath";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::domain_violation: return "DomainViolation";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported through this type;
/// `code()` identifies which contract was violated.
class error : public std::invalid_argument {
 public:
  error(errc code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace valleyforge
