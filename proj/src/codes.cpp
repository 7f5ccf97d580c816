#include "sierpinski/codes.hpp"

#include <stdexcept>

#include "sierpinski/embeddings.hpp"

namespace sierpinski {

namespace {

void require_binary(const Vertex& v) {
  if (v.m() != 2) throw std::invalid_argument("binary coding needs m = 2, got m=" + std::to_string(v.m()));
}

}  // namespace

BigInt eta(const Vertex& bits) {
  require_binary(bits);
  BigInt value = 0;
  for (const Digit b : bits.digits()) value = value * 2 + b;
  return value;
}

Vertex eta_inverse(const BigInt& value, int n) {
  Shape{n, 2}.validate();
  if (value < 0 || value >= big_pow(2, n)) {
    throw std::invalid_argument("value " + value.str() + " outside [0, 2^" + std::to_string(n) + ")");
  }
  std::vector<Digit> digits(static_cast<std::size_t>(n));
  BigInt rest = value;
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<Digit>(static_cast<unsigned>(rest & 1));
    rest >>= 1;
  }
  return Vertex(std::move(digits), 2);
}

BigInt gamma(const Vertex& bits) {
  require_binary(bits);
  BigInt value = 0;
  Digit parity = 0;
  for (const Digit b : bits.digits()) {
    parity ^= b;
    value = value * 2 + parity;
  }
  return value;
}

std::vector<Vertex> gray_sequence(int n) {
  const std::uint64_t count = Shape{n, 2}.vertex_count();
  std::vector<Vertex> out;
  out.reserve(count);
  for (std::uint64_t l = 0; l < count; ++l) out.push_back(phi_forward(Vertex::from_index({n, 2}, l)));
  return out;
}

}  // namespace sierpinski
