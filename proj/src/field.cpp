#include "levelcomplex/field.hpp"

#include <charconv>

#include "levelcomplex/error.hpp"

namespace levelcomplex {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "q" || text == "QQ") return rationals();
  std::string digits = text;
  if (digits.rfind("GF", 0) == 0) digits = digits.substr(2);
  if (digits.rfind("p=", 0) == 0) digits = digits.substr(2);
  std::uint32_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InputError("unknown field '" + text + "' (expected Q or a prime)");
  }
  return prime(p);
}

std::string to_string(const FieldSpec& field) {
  return field.is_rationals() ? "Q" : "GF(" + std::to_string(field.characteristic()) + ")";
}

}  // namespace levelcomplex
