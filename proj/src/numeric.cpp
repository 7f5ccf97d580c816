#include "sierpinski/numeric.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sierpinski {

Digit mod_reduce(std::int64_t value, int m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return static_cast<Digit>(r);
}

std::optional<Digit> mod_inverse(std::int64_t value, int m) {
  // Extended Euclid on the reduced value.
  std::int64_t a = mod_reduce(value, m);
  std::int64_t b = m;
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) return std::nullopt;
  return mod_reduce(x0, m);
}

Digit pow_mod(std::int64_t base, std::int64_t exponent, int m) {
  std::int64_t b = mod_reduce(base, m);
  if (exponent < 0) {
    const auto inv = mod_inverse(b, m);
    if (!inv) {
      throw std::domain_error("no multiplicative inverse of " + std::to_string(b) +
                              " mod " + std::to_string(m));
    }
    b = *inv;
    exponent = -exponent;
  }
  std::int64_t result = 1 % m;
  while (exponent > 0) {
    if (exponent & 1) result = (result * b) % m;
    b = (b * b) % m;
    exponent >>= 1;
  }
  return static_cast<Digit>(result);
}

int totient(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k) {
    if (std::gcd(k, m) == 1) ++count;
  }
  return count;
}

BigInt big_pow(int base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace sierpinski
