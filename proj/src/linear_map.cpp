#include "sierpinski/linear_map.hpp"

#include <stdexcept>

namespace sierpinski {

LinearMap::LinearMap(int m, std::vector<std::vector<std::int64_t>> rows) : m_(m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  if (rows.empty()) throw std::invalid_argument("linear map needs at least one row");
  const std::size_t n = rows.size();
  rows_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    rows_[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      rows_[i][j] = mod_reduce(rows[i][j], m);
      if (j > i && rows_[i][j] != 0) {
        throw std::invalid_argument("matrix is not lower-triangular at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
    }
  }
}

LinearMap LinearMap::identity(int n, int m) {
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                              std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return LinearMap(m, std::move(rows));
}

bool LinearMap::is_invertible() const {
  for (int i = 0; i < n(); ++i) {
    if (!mod_inverse(rows_[i][i], m_)) return false;
  }
  return true;
}

Vertex LinearMap::apply(const Vertex& v) const {
  if (v.n() != n() || v.m() != m_) throw std::invalid_argument("vertex shape does not match map");
  std::vector<Digit> out(static_cast<std::size_t>(n()));
  for (int i = 0; i < n(); ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j <= i; ++j) acc = (acc + static_cast<std::int64_t>(rows_[i][j]) * v[j]) % m_;
    out[i] = static_cast<Digit>(acc);
  }
  return Vertex(std::move(out), m_);
}

LinearMap LinearMap::compose(const LinearMap& rhs) const {
  if (rhs.n() != n() || rhs.m_ != m_) throw std::invalid_argument("incompatible linear maps");
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(n()),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n()), 0));
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j <= i; ++j) {
      std::int64_t acc = 0;
      for (int k = j; k <= i; ++k) {
        acc = (acc + static_cast<std::int64_t>(rows_[i][k]) * rhs.rows_[k][j]) % m_;
      }
      out[i][j] = acc;
    }
  }
  return LinearMap(m_, std::move(out));
}

bool LinearMap::is_identity() const { return *this == identity(n(), m_); }

LinearMap invert_linear_map(const LinearMap& map) {
  const int n = map.n();
  const int m = map.m();
  std::vector<Digit> diag_inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto inv = mod_inverse(map.at(i, i), m);
    if (!inv) {
      throw std::domain_error("diagonal entry " + std::to_string(map.at(i, i)) + " at row " +
                              std::to_string(i) + " is not invertible mod " + std::to_string(m));
    }
    diag_inv[i] = *inv;
  }
  // Solve L X = I one row at a time: X[i][j] = d_i^{-1} (delta_ij - sum_{k<i} L[i][k] X[k][j]).
  std::vector<std::vector<std::int64_t>> inv(static_cast<std::size_t>(n),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      std::int64_t acc = (i == j) ? 1 : 0;
      for (int k = j; k < i; ++k) acc -= static_cast<std::int64_t>(map.at(i, k)) * inv[k][j] % m;
      inv[i][j] = static_cast<std::int64_t>(mod_reduce(acc, m)) * diag_inv[i] % m;
    }
  }
  return LinearMap(m, std::move(inv));
}

std::string format_rows(const LinearMap& map) {
  std::string out;
  for (int i = 0; i < map.n(); ++i) {
    for (int j = 0; j < map.n(); ++j) {
      if (j > 0) out.push_back(' ');
      out += std::to_string(map.at(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace sierpinski
