#pragma once

#include <vector>

#include "sierpinski/numeric.hpp"
#include "sierpinski/vertex.hpp"

namespace sierpinski {

// Binary words are Vertex values with m = 2, most significant bit first.

/// Natural binary value sum_i 2^{n-1-i} v_i.
BigInt eta(const Vertex& bits);

/// The n-bit expansion of value; throws unless 0 <= value < 2^n.
Vertex eta_inverse(const BigInt& value, int n);

/// Position of a word in the reflected Gray order: eta(phi^{-1}(w)), i.e.
/// bit i of the index is the prefix parity w_0 + ... + w_i.
BigInt gamma(const Vertex& bits);

/// phi(eta^{-1}(l)) for l = 0 .. 2^n - 1.
std::vector<Vertex> gray_sequence(int n);

}  // namespace sierpinski
