#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace sierpinski {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Digit = std::uint32_t;

// Canonical representative of value mod m, always in [0, m).
Digit mod_reduce(std::int64_t value, int m);

std::optional<Digit> mod_inverse(std::int64_t value, int m);

// base^exponent mod m; a negative exponent uses the inverse of base and
// throws std::domain_error when base is not a unit.
Digit pow_mod(std::int64_t base, std::int64_t exponent, int m);

// Euler's totient, used to size the twist-family enumeration.
int totient(int m);

BigInt big_pow(int base, int exponent);

}  // namespace sierpinski
