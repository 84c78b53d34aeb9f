#ifndef PAT1324_BIGINT_HPP
#define PAT1324_BIGINT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pat1324 {

using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);

/// Parses an unsigned decimal string; throws InvalidInputError otherwise.
BigInt parse_decimal(std::string_view text);

/// Heap bytes owned by `value` beyond sizeof(BigInt); zero while the
/// magnitude fits the inline limbs.
std::size_t heap_bytes(const BigInt& value);

BigInt factorial(int n);

}  // namespace pat1324

#endif  // PAT1324_BIGINT_HPP
