#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class errc {
  invalid_argument,
  gcd_not_one,
  not_coprime,
  overflow,
  bound_too_large,
  not_member,
  zero_element,
  not_three_generated,
  insufficient_data,
  no_representation,
  invalid_family_params,
  invalid_params,
  internal,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::not_coprime: return "NotCoprime";
    case errc::overflow: return "Overflow";
    case errc::bound_too_large: return "BoundTooLarge";
    case errc::not_member: return "NotMember";
    case errc::zero_element: return "ZeroElement";
    case errc::not_three_generated: return "NotThreeGenerated";
    case errc::insufficient_data: return "InsufficientData";
    case errc::no_representation: return "NoRepresentation";
    case errc::invalid_family_params: return "InvalidFamilyParams";
    case errc::invalid_params: return "InvalidParams";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace nsg
