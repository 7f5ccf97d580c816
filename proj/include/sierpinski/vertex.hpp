#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sierpinski/numeric.hpp"

namespace sierpinski {

// Graphs are materialized only below this many vertices.
inline constexpr std::uint64_t kMaxVertices = 10'000'000;

/// Dimensions of Z_m^n: n digits, each in {0, ..., m-1}.
struct Shape {
  int n = 1;
  int m = 2;

  /// Throws std::invalid_argument unless n >= 1 and m >= 2.
  void validate() const;

  /// m^n, refusing anything above kMaxVertices.
  std::uint64_t vertex_count() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// A point of Z_m^n, digits stored most-significant first (digit 0 is the
/// leftmost coordinate). In the Hanoi reading digit d is the peg of disc d,
/// disc 0 being the largest.
class Vertex {
 public:
  Vertex(std::vector<Digit> digits, int m);

  static Vertex constant(int n, int m, Digit value);
  static Vertex zero(int n, int m) { return constant(n, m, 0); }

  /// Base-m rank, most significant digit first; lexicographic order of
  /// vertices equals numeric order of their indices.
  static Vertex from_index(Shape shape, std::uint64_t index);

  /// "1201" when m <= 10, otherwise space separated digits ("12 0 7").
  static Vertex parse(std::string_view text, int m);

  std::uint64_t index() const;

  int n() const { return static_cast<int>(digits_.size()); }
  int m() const { return m_; }
  Shape shape() const { return {n(), m_}; }

  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const { return digits_; }

  bool is_constant() const;

  /// Inverse of parse().
  std::string str() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<Digit> digits_;
  int m_;
};

/// Number of coordinates in which u and v differ; throws on shape mismatch.
int hamming_distance(const Vertex& u, const Vertex& v);

void require_same_shape(const Vertex& u, const Vertex& v);

}  // namespace sierpinski
