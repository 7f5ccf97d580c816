#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sierpinski/numeric.hpp"
#include "sierpinski/vertex.hpp"

namespace sierpinski {

enum class GraphKind { sierpinski, hamming, single_twist, custom };

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view name);

/// Unordered edge between two vertex indices, stored with a < b.
struct Edge {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable graph on the implicit vertex set Z_m^n.
///
/// Edges are kept sorted and deduplicated, so two graphs over the same shape
/// compare equal exactly when their edge sets do, and serialization order is
/// deterministic.
class Graph {
 public:
  /// Canonicalizes the edge list. Throws on self-loops or out-of-range
  /// endpoints.
  Graph(Shape shape, GraphKind kind, std::vector<Edge> edges);

  Shape shape() const { return shape_; }
  GraphKind kind() const { return kind_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  Vertex vertex(std::uint64_t index) const { return Vertex::from_index(shape_, index); }

  bool has_edge(const Vertex& u, const Vertex& v) const;
  bool has_edge(std::uint64_t u, std::uint64_t v) const;

  std::vector<std::uint32_t> degrees() const;
  std::uint32_t degree(const Vertex& v) const;
  std::vector<std::vector<std::uint64_t>> adjacency() const;

  /// Same shape and same edge set; the kind tag is ignored.
  bool same_edges(const Graph& other) const;

 private:
  Shape shape_;
  GraphKind kind_;
  std::uint64_t vertex_count_;
  std::vector<Edge> edges_;
};

Edge make_edge(std::uint64_t u, std::uint64_t v);

/// u ~ v in S(n,m): there is an h with u and v agreeing before h, differing
/// at h, and u_j = v_h, v_j = u_h for every j > h.
bool is_sierpinski_edge(const Vertex& u, const Vertex& v);

Graph build_sierpinski(int n, int m);

/// m copies of S(n-1,m) joined by the edges {i j^{n-1}, j i^{n-1}}.
Graph build_sierpinski_recursive(int n, int m);

Graph build_hamming(int n, int m);

/// S~(n,m): at each level h the pairs {w i k^{n-h}, w j k^{n-h}} with i != j
/// and i + j = k (mod m); at h = n all pairs {w i, w j}.
Graph build_single_twist(int n, int m);

/// A permutation of {0, ..., m-1} acting digitwise on Z_m^n.
class PermutationSymmetry {
 public:
  explicit PermutationSymmetry(std::vector<Digit> images);

  static PermutationSymmetry identity(int m);
  static PermutationSymmetry transposition(int m, Digit a, Digit b);

  int m() const { return static_cast<int>(images_.size()); }
  Digit operator()(Digit symbol) const { return images_.at(symbol); }
  PermutationSymmetry inverse() const;

  std::span<const Digit> images() const { return images_; }

 private:
  std::vector<Digit> images_;
};

Vertex apply_symmetry(const PermutationSymmetry& pi, const Vertex& v);

/// The constant vertices 0^n, 1^n, ..., (m-1)^n.
std::vector<Vertex> corners(int n, int m);

/// Blocks {w x : x in Z_m} for every prefix w of length n-1, in
/// lexicographic order of w.
std::vector<std::vector<Vertex>> km_decomposition(int n, int m);

/// Index of the K_m block containing v (its prefix of length n-1).
inline std::uint64_t block_of(std::uint64_t vertex_index, int m) {
  return vertex_index / static_cast<std::uint64_t>(m);
}

// Closed-form counts, valid at any size.
BigInt vertex_count(int n, int m);
BigInt sierpinski_edge_count(int n, int m);
BigInt hamming_edge_count(int n, int m);

/// |E_S(n,m)| / |E_{K_m^n}|, which reduces to 1/n.
Rational edge_density(int n, int m);

}  // namespace sierpinski
