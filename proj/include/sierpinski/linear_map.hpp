#pragma once

#include <string>
#include <vector>

#include "sierpinski/numeric.hpp"
#include "sierpinski/vertex.hpp"

namespace sierpinski {

/// Lower-triangular n x n matrix over Z_m. Row i expresses output
/// coordinate i in terms of input coordinates 0..i.
class LinearMap {
 public:
  /// Entries are reduced mod m; anything above the diagonal must be zero.
  LinearMap(int m, std::vector<std::vector<std::int64_t>> rows);

  static LinearMap identity(int n, int m);

  int n() const { return static_cast<int>(rows_.size()); }
  int m() const { return m_; }
  Digit at(int row, int col) const { return rows_[row][col]; }
  const std::vector<std::vector<Digit>>& rows() const { return rows_; }

  /// Every diagonal entry is a unit mod m.
  bool is_invertible() const;

  Vertex apply(const Vertex& v) const;

  /// Matrix product (*this) * rhs, i.e. apply rhs first.
  LinearMap compose(const LinearMap& rhs) const;

  bool is_identity() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  int m_;
  std::vector<std::vector<Digit>> rows_;
};

/// Forward substitution mod m; throws std::domain_error when a diagonal
/// entry has no inverse.
LinearMap invert_linear_map(const LinearMap& map);

/// Rows separated by newlines, entries by single spaces.
std::string format_rows(const LinearMap& map);

}  // namespace sierpinski
