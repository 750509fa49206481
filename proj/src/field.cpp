#include "edgeideal/field.hpp"

#include <charconv>

#include "edgeideal/error.hpp"

namespace edgeideal {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p == 2 || !is_prime(p) || p >= (1u << 31)) fail(ErrorKind::Parse, "field characteristic must be an odd prime below 2^31");
  return {Kind::Prime, p};
}

Field parse_field(std::string_view text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.size() > 2 && (text[0] == 'p' || text[0] == 'P') && text[1] == ':') {
    std::uint32_t p = 0;
    const auto body = text.substr(2);
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return Field::prime(p);
  }
  fail(ErrorKind::Parse, "field must be q or p:<prime>, got '" + std::string(text) + "'");
}

std::string to_string(const Field& f) {
  return f.kind == Field::Kind::Rational ? "q" : "p:" + std::to_string(f.p);
}

}  // namespace edgeideal
