#include "sierpinski/vertex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sierpinski {

void Shape::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1 (got " + std::to_string(n) + ")");
  if (m < 2) throw std::invalid_argument("m must be at least 2 (got " + std::to_string(m) + ")");
}

std::uint64_t Shape::vertex_count() const {
  validate();
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(m);
    if (count > kMaxVertices) {
      throw std::invalid_argument("refusing to materialize " + std::to_string(m) + "^" +
                                  std::to_string(n) + " vertices (limit " +
                                  std::to_string(kMaxVertices) + ")");
    }
  }
  return count;
}

Vertex::Vertex(std::vector<Digit> digits, int m) : digits_(std::move(digits)), m_(m) {
  Shape{static_cast<int>(digits_.size()), m}.validate();
  for (const Digit d : digits_) {
    if (d >= static_cast<Digit>(m)) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for m=" +
                                  std::to_string(m));
    }
  }
}

Vertex Vertex::constant(int n, int m, Digit value) {
  return Vertex(std::vector<Digit>(static_cast<std::size_t>(std::max(n, 0)), value), m);
}

Vertex Vertex::from_index(Shape shape, std::uint64_t index) {
  shape.validate();
  std::vector<Digit> digits(static_cast<std::size_t>(shape.n));
  for (int i = shape.n - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<Digit>(index % shape.m);
    index /= static_cast<std::uint64_t>(shape.m);
  }
  if (index != 0) throw std::invalid_argument("vertex index out of range");
  return Vertex(std::move(digits), shape.m);
}

Vertex Vertex::parse(std::string_view text, int m) {
  std::vector<Digit> digits;
  if (m <= 10) {
    for (const char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("illegal digit '" + std::string(1, ch) + "' in \"" +
                                    std::string(text) + "\"");
      }
      digits.push_back(static_cast<Digit>(ch - '0'));
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      if (!std::all_of(token.begin(), token.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("illegal digit \"" + token + "\"");
      }
      digits.push_back(static_cast<Digit>(std::stoul(token)));
    }
  }
  if (digits.empty()) throw std::invalid_argument("empty position string");
  return Vertex(std::move(digits), m);
}

std::uint64_t Vertex::index() const {
  std::uint64_t idx = 0;
  for (const Digit d : digits_) idx = idx * static_cast<std::uint64_t>(m_) + d;
  return idx;
}

bool Vertex::is_constant() const {
  return std::all_of(digits_.begin(), digits_.end(), [&](Digit d) { return d == digits_[0]; });
}

std::string Vertex::str() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (m_ <= 10) {
      out.push_back(static_cast<char>('0' + digits_[i]));
    } else {
      if (i > 0) out.push_back(' ');
      out += std::to_string(digits_[i]);
    }
  }
  return out;
}

void require_same_shape(const Vertex& u, const Vertex& v) {
  if (u.shape() != v.shape()) {
    throw std::invalid_argument("vertex shape mismatch: (n=" + std::to_string(u.n()) + ", m=" +
                                std::to_string(u.m()) + ") vs (n=" + std::to_string(v.n()) +
                                ", m=" + std::to_string(v.m()) + ")");
  }
}

int hamming_distance(const Vertex& u, const Vertex& v) {
  require_same_shape(u, v);
  int distance = 0;
  for (int i = 0; i < u.n(); ++i) {
    if (u[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i)]) ++distance;
  }
  return distance;
}

}  // namespace sierpinski
