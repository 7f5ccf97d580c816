#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sierpinski/graph.hpp"
#include "sierpinski/linear_map.hpp"
#include "sierpinski/vertex.hpp"

namespace sierpinski {

/// Multipliers (c_1, ..., c_n), each a unit mod m, selecting one member of
/// the twisted embedding family S(n,m) -> K_m^n.
///
/// c_1 relabels every output symbol x -> c_1 x (an automorphism of K_m^n);
/// for k >= 2, c_k is the twist of the recursion level that produces
/// coordinates k..n, i.e. copy i of S(n-k+1, m) is relabelled by
/// j -> c_k (i + j) before recursing. Output coordinate i is therefore
/// (c_1 c_2 ... c_i) times the untwisted coordinate. All ones gives phi;
/// (1, 2^{-1}, ..., 2^{-1}) gives tau.
class TwistFamily {
 public:
  TwistFamily(int m, std::vector<Digit> multipliers);

  /// The one-multiplier shorthand (1, c, c, ..., c).
  static TwistFamily uniform(int n, int m, Digit c);

  /// Every valid family for (n, m): totient(m)^n of them, in lexicographic
  /// order of the multiplier vector.
  static std::vector<TwistFamily> enumerate(int n, int m);

  int n() const { return static_cast<int>(multipliers_.size()); }
  int m() const { return m_; }
  const std::vector<Digit>& multipliers() const { return multipliers_; }

 private:
  int m_;
  std::vector<Digit> multipliers_;
};

enum class MapKind { phi, tau };

// Closed forms. Coordinate i depends only on v_0..v_i.
Vertex phi_forward(const Vertex& v);
Vertex phi_inverse(const Vertex& w);
/// Requires odd m; throws std::domain_error otherwise.
Vertex tau_forward(const Vertex& v);
Vertex tau_inverse(const Vertex& t);
Vertex epsilon_forward(const Vertex& v, const TwistFamily& family);
Vertex epsilon_inverse(const Vertex& w, const TwistFamily& family);

/// v -> (v_1, v_1 + v_2, ..., v_1 + v_n): only the top level twisted. It is
/// phi for n <= 2 and is not an embedding for n = 3, m = 3.
Vertex single_twist_forward(const Vertex& v);

// The same maps over the integers with no reduction; the inverse still
// recovers the input exactly.
std::vector<std::int64_t> phi_forward_integral(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> phi_inverse_integral(const std::vector<std::int64_t>& w);

LinearMap embedding_matrix(MapKind kind, int n, int m);
LinearMap embedding_matrix(const TwistFamily& family);

/// Tabulated map Z_m^n -> Z_m^n indexed by vertex index.
class VertexMap {
 public:
  VertexMap(Shape shape, std::vector<std::uint64_t> images);

  static VertexMap tabulate(Shape shape, const std::function<Vertex(const Vertex&)>& fn);
  static VertexMap identity(Shape shape);

  Shape shape() const { return shape_; }
  std::uint64_t operator[](std::uint64_t index) const { return images_[index]; }
  Vertex apply(const Vertex& v) const;
  const std::vector<std::uint64_t>& images() const { return images_; }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  Shape shape_;
  std::vector<std::uint64_t> images_;
};

/// phi built by literal recursion: copy i of S(n-1,m) is relabelled by the
/// symmetry extending j -> i + j and then mapped by phi^{(n-1)}.
VertexMap phi_recursive(int n, int m);

/// The family member built by the same literal recursion, one level per
/// multiplier, followed by the c_1 relabelling.
VertexMap epsilon_recursive(const TwistFamily& family);

struct EdgeViolation {
  Vertex u;
  Vertex v;
  Vertex image_u;
  Vertex image_v;
  int distance;
};

struct EmbeddingReport {
  bool is_bijection = false;
  bool all_edges_distance_one = false;
  bool edge_count_preserved = false;
  bool verdict = false;
  std::uint64_t violation_count = 0;
  /// The first few offending S(n,m) edges, in canonical edge order.
  std::vector<EdgeViolation> violations;
};

inline constexpr std::size_t kMaxReportedViolations = 16;

/// Certifies that map carries S(n,m) isomorphically onto a subgraph of
/// K_m^n: bijective on vertices, every S-edge lands on a Hamming-distance-1
/// pair, and the number of distinct image edges equals |E_S(n,m)|.
EmbeddingReport verify_embedding(const VertexMap& map);

struct LayoutMetrics {
  std::uint64_t wirelength = 0;
  int bandwidth = 0;
};

/// Host distance in K_m^n is Hamming distance.
LayoutMetrics layout_metrics(const VertexMap& map);

}  // namespace sierpinski
