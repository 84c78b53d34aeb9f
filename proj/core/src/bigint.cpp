#include "pat1324/bigint.hpp"

#include <cctype>

#include "pat1324/errors.hpp"

namespace pat1324 {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw InvalidInputError("empty integer literal");
  BigInt out = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInputError("not a decimal integer: '" + std::string(text) + "'");
    }
    out *= 10;
    out += c - '0';
  }
  return out;
}

std::size_t heap_bytes(const BigInt& value) {
  // cpp_int keeps two limbs inline.
  const std::size_t limbs = value.backend().size();
  return limbs > 2 ? limbs * sizeof(boost::multiprecision::limb_type) : 0;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace pat1324
