#include "sierpinski/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sierpinski {

namespace {

// powers[k] = m^k for k = 0..n.
std::vector<std::uint64_t> powers_of(int m, int n) {
  std::vector<std::uint64_t> powers(static_cast<std::size_t>(n) + 1, 1);
  for (int k = 1; k <= n; ++k) powers[k] = powers[k - 1] * static_cast<std::uint64_t>(m);
  return powers;
}

// Index of the all-ones word of length k, so that x * repunit(k) = x^k.
std::uint64_t repunit(const std::vector<std::uint64_t>& powers, int k) {
  std::uint64_t r = 0;
  for (int t = 0; t < k; ++t) r += powers[t];
  return r;
}

}  // namespace

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::sierpinski:
      return "sierpinski";
    case GraphKind::hamming:
      return "hamming";
    case GraphKind::single_twist:
      return "single-twist";
    case GraphKind::custom:
      return "custom";
  }
  return "custom";
}

GraphKind graph_kind_from_string(std::string_view name) {
  if (name == "sierpinski") return GraphKind::sierpinski;
  if (name == "hamming") return GraphKind::hamming;
  if (name == "single-twist" || name == "single_twist") return GraphKind::single_twist;
  if (name == "custom") return GraphKind::custom;
  throw std::invalid_argument("unknown graph kind \"" + std::string(name) + "\"");
}

Edge make_edge(std::uint64_t u, std::uint64_t v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex index " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(Shape shape, GraphKind kind, std::vector<Edge> edges)
    : shape_(shape), kind_(kind), vertex_count_(shape.vertex_count()), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    e = make_edge(e.a, e.b);
    if (e.b >= vertex_count_) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.b) + " outside Z_" +
                                  std::to_string(shape.m) + "^" + std::to_string(shape.n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(std::uint64_t u, std::uint64_t v) const {
  if (u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

bool Graph::has_edge(const Vertex& u, const Vertex& v) const {
  if (u.shape() != shape_ || v.shape() != shape_) {
    throw std::invalid_argument("vertex does not belong to this graph's shape");
  }
  return has_edge(u.index(), v.index());
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

std::uint32_t Graph::degree(const Vertex& v) const {
  if (v.shape() != shape_) throw std::invalid_argument("vertex does not belong to this graph");
  const std::uint64_t idx = v.index();
  std::uint32_t d = 0;
  for (const Edge& e : edges_) {
    if (e.a == idx || e.b == idx) ++d;
  }
  return d;
}

std::vector<std::vector<std::uint64_t>> Graph::adjacency() const {
  std::vector<std::vector<std::uint64_t>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool Graph::same_edges(const Graph& other) const {
  return shape_ == other.shape_ && edges_ == other.edges_;
}

bool is_sierpinski_edge(const Vertex& u, const Vertex& v) {
  require_same_shape(u, v);
  const std::size_t n = static_cast<std::size_t>(u.n());
  std::size_t h = 0;
  while (h < n && u[h] == v[h]) ++h;
  if (h == n) return false;
  for (std::size_t j = h + 1; j < n; ++j) {
    if (u[j] != v[h] || v[j] != u[h]) return false;
  }
  return true;
}

Graph build_sierpinski(int n, int m) {
  const Shape shape{n, m};
  shape.vertex_count();
  const auto pw = powers_of(m, n);
  std::vector<Edge> edges;
  for (int h = 1; h <= n; ++h) {
    const int suffix = n - h;
    const std::uint64_t rep = repunit(pw, suffix);
    for (std::uint64_t prefix = 0; prefix < pw[h - 1]; ++prefix) {
      const std::uint64_t base = prefix * pw[suffix + 1];
      for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m); ++i) {
        for (std::uint64_t j = i + 1; j < static_cast<std::uint64_t>(m); ++j) {
          edges.push_back({base + i * pw[suffix] + j * rep, base + j * pw[suffix] + i * rep});
        }
      }
    }
  }
  return Graph(shape, GraphKind::sierpinski, std::move(edges));
}

Graph build_sierpinski_recursive(int n, int m) {
  const Shape shape{n, m};
  shape.vertex_count();
  const auto pw = powers_of(m, n);
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m); ++i) {
    for (std::uint64_t j = i + 1; j < static_cast<std::uint64_t>(m); ++j) edges.push_back({i, j});
  }
  for (int k = 1; k < n; ++k) {
    std::vector<Edge> next;
    next.reserve(edges.size() * static_cast<std::size_t>(m) + pw[2]);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m); ++i) {
      const std::uint64_t offset = i * pw[k];
      for (const Edge& e : edges) next.push_back({offset + e.a, offset + e.b});
    }
    const std::uint64_t rep = repunit(pw, k);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m); ++i) {
      for (std::uint64_t j = i + 1; j < static_cast<std::uint64_t>(m); ++j) {
        next.push_back({i * pw[k] + j * rep, j * pw[k] + i * rep});
      }
    }
    edges = std::move(next);
  }
  return Graph(shape, GraphKind::sierpinski, std::move(edges));
}

Graph build_hamming(int n, int m) {
  const Shape shape{n, m};
  const std::uint64_t count = shape.vertex_count();
  const auto pw = powers_of(m, n);
  std::vector<Edge> edges;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    for (int p = 0; p < n; ++p) {
      const std::uint64_t weight = pw[n - 1 - p];
      const std::uint64_t digit = (idx / weight) % static_cast<std::uint64_t>(m);
      for (std::uint64_t d = digit + 1; d < static_cast<std::uint64_t>(m); ++d) {
        edges.push_back({idx, idx + (d - digit) * weight});
      }
    }
  }
  return Graph(shape, GraphKind::hamming, std::move(edges));
}

Graph build_single_twist(int n, int m) {
  const Shape shape{n, m};
  shape.vertex_count();
  const auto pw = powers_of(m, n);
  std::vector<Edge> edges;
  for (int h = 1; h <= n; ++h) {
    const int suffix = n - h;
    const std::uint64_t rep = repunit(pw, suffix);
    for (std::uint64_t prefix = 0; prefix < pw[h - 1]; ++prefix) {
      const std::uint64_t base = prefix * pw[suffix + 1];
      for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m); ++i) {
        for (std::uint64_t j = i + 1; j < static_cast<std::uint64_t>(m); ++j) {
          // The trailing constant block k^{n-h} is empty at the last level.
          const std::uint64_t k = (i + j) % static_cast<std::uint64_t>(m);
          edges.push_back({base + i * pw[suffix] + k * rep, base + j * pw[suffix] + k * rep});
        }
      }
    }
  }
  return Graph(shape, GraphKind::single_twist, std::move(edges));
}

PermutationSymmetry::PermutationSymmetry(std::vector<Digit> images) : images_(std::move(images)) {
  if (images_.size() < 2) throw std::invalid_argument("permutation needs m >= 2 symbols");
  std::vector<bool> seen(images_.size(), false);
  for (const Digit d : images_) {
    if (d >= images_.size() || seen[d]) {
      throw std::invalid_argument("not a permutation of {0, ..., " +
                                  std::to_string(images_.size() - 1) + "}");
    }
    seen[d] = true;
  }
}

PermutationSymmetry PermutationSymmetry::identity(int m) {
  std::vector<Digit> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = static_cast<Digit>(i);
  return PermutationSymmetry(std::move(images));
}

PermutationSymmetry PermutationSymmetry::transposition(int m, Digit a, Digit b) {
  std::vector<Digit> images(identity(m).images_);
  std::swap(images.at(a), images.at(b));
  return PermutationSymmetry(std::move(images));
}

PermutationSymmetry PermutationSymmetry::inverse() const {
  std::vector<Digit> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Digit>(i);
  return PermutationSymmetry(std::move(inv));
}

Vertex apply_symmetry(const PermutationSymmetry& pi, const Vertex& v) {
  if (pi.m() != v.m()) throw std::invalid_argument("permutation and vertex disagree on m");
  std::vector<Digit> out(v.digits().begin(), v.digits().end());
  for (Digit& d : out) d = pi(d);
  return Vertex(std::move(out), v.m());
}

std::vector<Vertex> corners(int n, int m) {
  Shape{n, m}.validate();
  std::vector<Vertex> out;
  for (int i = 0; i < m; ++i) out.push_back(Vertex::constant(n, m, static_cast<Digit>(i)));
  return out;
}

std::vector<std::vector<Vertex>> km_decomposition(int n, int m) {
  const Shape shape{n, m};
  const std::uint64_t count = shape.vertex_count();
  std::vector<std::vector<Vertex>> blocks;
  blocks.reserve(count / static_cast<std::uint64_t>(m));
  for (std::uint64_t start = 0; start < count; start += static_cast<std::uint64_t>(m)) {
    std::vector<Vertex> block;
    for (int x = 0; x < m; ++x) block.push_back(Vertex::from_index(shape, start + x));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

BigInt vertex_count(int n, int m) {
  Shape{n, m}.validate();
  return big_pow(m, n);
}

BigInt sierpinski_edge_count(int n, int m) {
  Shape{n, m}.validate();
  return (big_pow(m, n + 1) - m) / 2;
}

BigInt hamming_edge_count(int n, int m) {
  Shape{n, m}.validate();
  return BigInt(n) * (m - 1) * big_pow(m, n) / 2;
}

Rational edge_density(int n, int m) {
  return Rational(sierpinski_edge_count(n, m), hamming_edge_count(n, m));
}

}  // namespace sierpinski
