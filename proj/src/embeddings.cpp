#include "sierpinski/embeddings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sierpinski {

namespace {

Digit inverse_of_two(int m) {
  const auto inv = mod_inverse(2, m);
  if (!inv) {
    throw std::domain_error("no multiplicative inverse of 2 mod " + std::to_string(m) +
                            " (tau needs odd m)");
  }
  return *inv;
}

// Untwisted coordinates phi_i = v_i + sum_{j<i} 2^{i-1-j} v_j, kept as
// residues in [0, m).
std::vector<std::int64_t> phi_residues(const Vertex& v) {
  const int m = v.m();
  std::vector<std::int64_t> out(static_cast<std::size_t>(v.n()));
  std::int64_t carry = 0;
  for (int i = 0; i < v.n(); ++i) {
    out[i] = (v[i] + carry) % m;
    carry = (2 * carry + v[i]) % m;
  }
  return out;
}

// Decodes an index, maps each digit through relabel and re-encodes.
template <typename Relabel>
std::uint64_t relabel_index(std::uint64_t index, int length, int m, Relabel relabel) {
  std::uint64_t out = 0;
  std::uint64_t weight = 1;
  for (int p = 0; p < length; ++p) {
    const auto digit = static_cast<Digit>(index % static_cast<std::uint64_t>(m));
    index /= static_cast<std::uint64_t>(m);
    out += static_cast<std::uint64_t>(relabel(digit)) * weight;
    weight *= static_cast<std::uint64_t>(m);
  }
  return out;
}

int index_distance(std::uint64_t a, std::uint64_t b, Shape shape) {
  int distance = 0;
  for (int p = 0; p < shape.n; ++p) {
    if (a % static_cast<std::uint64_t>(shape.m) != b % static_cast<std::uint64_t>(shape.m)) ++distance;
    a /= static_cast<std::uint64_t>(shape.m);
    b /= static_cast<std::uint64_t>(shape.m);
  }
  return distance;
}

// Literal recursion shared by phi and the twisted family. level_multiplier(L)
// is the twist applied when building the table for suffix length L >= 2.
template <typename LevelMultiplier>
std::vector<std::uint64_t> recursive_table(int n, int m, LevelMultiplier level_multiplier) {
  std::vector<std::uint64_t> table(static_cast<std::size_t>(m));
  std::iota(table.begin(), table.end(), 0);
  std::uint64_t inner = static_cast<std::uint64_t>(m);
  for (int length = 2; length <= n; ++length) {
    const std::int64_t c = level_multiplier(length);
    std::vector<std::uint64_t> next(inner * static_cast<std::uint64_t>(m));
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m); ++i) {
      // Corner i j^{L-1} goes to (i, image of (c(i+j))^{L-1}); the symmetry
      // of S(L-1,m) extending j -> c(i+j) carries the rest of copy i.
      const auto twist = [&](Digit j) {
        return static_cast<Digit>(c * static_cast<std::int64_t>(i + j) % m);
      };
      for (std::uint64_t rest = 0; rest < inner; ++rest) {
        next[i * inner + rest] = i * inner + table[relabel_index(rest, length - 1, m, twist)];
      }
    }
    table = std::move(next);
    inner *= static_cast<std::uint64_t>(m);
  }
  return table;
}

}  // namespace

TwistFamily::TwistFamily(int m, std::vector<Digit> multipliers)
    : m_(m), multipliers_(std::move(multipliers)) {
  Shape{static_cast<int>(multipliers_.size()), m}.validate();
  for (std::size_t k = 0; k < multipliers_.size(); ++k) {
    const Digit c = multipliers_[k];
    if (c >= static_cast<Digit>(m) || std::gcd(static_cast<int>(c), m) != 1) {
      throw std::invalid_argument("multiplier c_" + std::to_string(k + 1) + " = " +
                                  std::to_string(c) + " is not a unit mod " + std::to_string(m));
    }
  }
}

TwistFamily TwistFamily::uniform(int n, int m, Digit c) {
  Shape{n, m}.validate();
  std::vector<Digit> multipliers(static_cast<std::size_t>(n), mod_reduce(c, m));
  multipliers[0] = 1;
  return TwistFamily(m, std::move(multipliers));
}

std::vector<TwistFamily> TwistFamily::enumerate(int n, int m) {
  Shape{n, m}.validate();
  std::vector<Digit> units;
  for (int c = 1; c < m; ++c) {
    if (std::gcd(c, m) == 1) units.push_back(static_cast<Digit>(c));
  }
  std::vector<TwistFamily> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Digit> multipliers(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) multipliers[k] = units[pick[k]];
    out.emplace_back(m, std::move(multipliers));
    int k = n - 1;
    while (k >= 0 && ++pick[k] == units.size()) pick[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

Vertex phi_forward(const Vertex& v) {
  const auto residues = phi_residues(v);
  return Vertex(std::vector<Digit>(residues.begin(), residues.end()), v.m());
}

Vertex phi_inverse(const Vertex& w) {
  const int m = w.m();
  std::vector<Digit> out(static_cast<std::size_t>(w.n()));
  std::int64_t prefix = 0;
  for (int i = 0; i < w.n(); ++i) {
    out[i] = mod_reduce(static_cast<std::int64_t>(w[i]) - prefix, m);
    prefix = (prefix + w[i]) % m;
  }
  return Vertex(std::move(out), m);
}

Vertex tau_forward(const Vertex& v) {
  const int m = v.m();
  const std::int64_t half = inverse_of_two(m);
  const auto residues = phi_residues(v);
  std::vector<Digit> out(residues.size());
  std::int64_t scale = 1;  // 2^{-i}
  for (std::size_t i = 0; i < residues.size(); ++i) {
    out[i] = static_cast<Digit>(scale * residues[i] % m);
    scale = scale * half % m;
  }
  return Vertex(std::move(out), m);
}

Vertex tau_inverse(const Vertex& t) {
  const int m = t.m();
  inverse_of_two(m);
  std::vector<Digit> out(static_cast<std::size_t>(t.n()));
  std::int64_t power = 1;  // 2^i
  std::int64_t lower = 0;  // sum_{j<i} 2^j t_j
  for (int i = 0; i < t.n(); ++i) {
    out[i] = mod_reduce(power * t[i] - lower, m);
    lower = (lower + power * t[i]) % m;
    power = power * 2 % m;
  }
  return Vertex(std::move(out), m);
}

Vertex epsilon_forward(const Vertex& v, const TwistFamily& family) {
  if (family.m() != v.m() || family.n() != v.n()) {
    throw std::invalid_argument("twist family does not match vertex shape");
  }
  const int m = v.m();
  const auto residues = phi_residues(v);
  std::vector<Digit> out(residues.size());
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    scale = scale * family.multipliers()[i] % m;
    out[i] = static_cast<Digit>(scale * residues[i] % m);
  }
  return Vertex(std::move(out), m);
}

Vertex epsilon_inverse(const Vertex& w, const TwistFamily& family) {
  if (family.m() != w.m() || family.n() != w.n()) {
    throw std::invalid_argument("twist family does not match vertex shape");
  }
  const int m = w.m();
  std::vector<Digit> untwisted(static_cast<std::size_t>(w.n()));
  std::int64_t scale = 1;
  for (int i = 0; i < w.n(); ++i) {
    scale = scale * family.multipliers()[i] % m;
    untwisted[i] = static_cast<Digit>(*mod_inverse(scale, m) * static_cast<std::int64_t>(w[i]) % m);
  }
  return phi_inverse(Vertex(std::move(untwisted), m));
}

Vertex single_twist_forward(const Vertex& v) {
  std::vector<Digit> out(v.digits().begin(), v.digits().end());
  for (int i = 1; i < v.n(); ++i) out[i] = (v[0] + v[i]) % static_cast<Digit>(v.m());
  return Vertex(std::move(out), v.m());
}

std::vector<std::int64_t> phi_forward_integral(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(v.size());
  std::int64_t carry = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] + carry;
    carry = 2 * carry + v[i];
  }
  return out;
}

std::vector<std::int64_t> phi_inverse_integral(const std::vector<std::int64_t>& w) {
  std::vector<std::int64_t> out(w.size());
  std::int64_t prefix = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w[i] - prefix;
    prefix += w[i];
  }
  return out;
}

LinearMap embedding_matrix(MapKind kind, int n, int m) {
  Shape{n, m}.validate();
  const std::int64_t step = (kind == MapKind::tau) ? inverse_of_two(m) : 1;
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                              std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  std::int64_t scale = 1;
  for (int i = 0; i < n; ++i) {
    rows[i][i] = scale;
    std::int64_t coeff = scale;  // scale * 2^{i-1-j}, walking j downward
    for (int j = i - 1; j >= 0; --j) {
      rows[i][j] = coeff;
      coeff = coeff * 2 % m;
    }
    scale = scale * step % m;
  }
  return LinearMap(m, std::move(rows));
}

LinearMap embedding_matrix(const TwistFamily& family) {
  const int n = family.n();
  const int m = family.m();
  const LinearMap base = embedding_matrix(MapKind::phi, n, m);
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                              std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  std::int64_t scale = 1;
  for (int i = 0; i < n; ++i) {
    scale = scale * family.multipliers()[i] % m;
    for (int j = 0; j <= i; ++j) rows[i][j] = scale * base.at(i, j) % m;
  }
  return LinearMap(m, std::move(rows));
}

VertexMap::VertexMap(Shape shape, std::vector<std::uint64_t> images)
    : shape_(shape), images_(std::move(images)) {
  const std::uint64_t count = shape.vertex_count();
  if (images_.size() != count) throw std::invalid_argument("vertex map must cover all of Z_m^n");
  for (const std::uint64_t image : images_) {
    if (image >= count) throw std::invalid_argument("vertex map image out of range");
  }
}

VertexMap VertexMap::tabulate(Shape shape, const std::function<Vertex(const Vertex&)>& fn) {
  const std::uint64_t count = shape.vertex_count();
  std::vector<std::uint64_t> images(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Vertex image = fn(Vertex::from_index(shape, idx));
    if (image.shape() != shape) throw std::invalid_argument("map changes the vertex shape");
    images[idx] = image.index();
  }
  return VertexMap(shape, std::move(images));
}

VertexMap VertexMap::identity(Shape shape) {
  std::vector<std::uint64_t> images(shape.vertex_count());
  std::iota(images.begin(), images.end(), 0);
  return VertexMap(shape, std::move(images));
}

Vertex VertexMap::apply(const Vertex& v) const {
  if (v.shape() != shape_) throw std::invalid_argument("vertex shape does not match map");
  return Vertex::from_index(shape_, images_[v.index()]);
}

VertexMap phi_recursive(int n, int m) {
  const Shape shape{n, m};
  shape.vertex_count();
  return VertexMap(shape, recursive_table(n, m, [](int) { return std::int64_t{1}; }));
}

VertexMap epsilon_recursive(const TwistFamily& family) {
  const int n = family.n();
  const int m = family.m();
  const Shape shape{n, m};
  shape.vertex_count();
  // Suffix length L is produced by the level owning coordinates n-L+2..n.
  auto table = recursive_table(n, m, [&](int length) {
    return static_cast<std::int64_t>(family.multipliers()[static_cast<std::size_t>(n - length + 1)]);
  });
  const Digit relabel = family.multipliers()[0];
  for (auto& image : table) {
    image = relabel_index(image, n, m, [&](Digit d) { return static_cast<Digit>(relabel * d % m); });
  }
  return VertexMap(shape, std::move(table));
}

EmbeddingReport verify_embedding(const VertexMap& map) {
  const Shape shape = map.shape();
  const std::uint64_t count = shape.vertex_count();
  EmbeddingReport report;

  std::vector<bool> hit(count, false);
  report.is_bijection = true;
  for (const std::uint64_t image : map.images()) {
    if (hit[image]) report.is_bijection = false;
    hit[image] = true;
  }

  const Graph sierpinski = build_sierpinski(shape.n, shape.m);
  std::vector<Edge> image_edges;
  image_edges.reserve(sierpinski.edge_count());
  for (const Edge& e : sierpinski.edges()) {
    const std::uint64_t a = map[e.a];
    const std::uint64_t b = map[e.b];
    const int distance = index_distance(a, b, shape);
    if (distance != 1) {
      if (report.violations.size() < kMaxReportedViolations) {
        report.violations.push_back({Vertex::from_index(shape, e.a), Vertex::from_index(shape, e.b),
                                     Vertex::from_index(shape, a), Vertex::from_index(shape, b),
                                     distance});
      }
      ++report.violation_count;
    }
    if (a != b) image_edges.push_back(make_edge(a, b));
  }
  std::sort(image_edges.begin(), image_edges.end());
  image_edges.erase(std::unique(image_edges.begin(), image_edges.end()), image_edges.end());

  report.all_edges_distance_one = report.violation_count == 0;
  report.edge_count_preserved = BigInt(image_edges.size()) == sierpinski_edge_count(shape.n, shape.m);
  report.verdict = report.is_bijection && report.all_edges_distance_one && report.edge_count_preserved;
  return report;
}

LayoutMetrics layout_metrics(const VertexMap& map) {
  const Shape shape = map.shape();
  LayoutMetrics metrics;
  const Graph guest = build_sierpinski(shape.n, shape.m);
  for (const Edge& e : guest.edges()) {
    const int distance = index_distance(map[e.a], map[e.b], shape);
    metrics.wirelength += static_cast<std::uint64_t>(distance);
    metrics.bandwidth = std::max(metrics.bandwidth, distance);
  }
  return metrics;
}

}  // namespace sierpinski
