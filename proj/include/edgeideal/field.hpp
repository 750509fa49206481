#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace edgeideal {

inline constexpr std::uint32_t kDefaultPrime = 32003;

// Coefficient field: the rationals or F_p for an odd prime p < 2^31.
struct Field {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t p = 0;

  static Field rationals() { return {Kind::Rational, 0}; }
  static Field prime(std::uint32_t p);

  bool operator==(const Field&) const = default;
};

// "q" or "p:<prime>"; throws Parse on anything else.
Field parse_field(std::string_view text);
std::string to_string(const Field& f);

bool is_prime(std::uint64_t n);

}  // namespace edgeideal
