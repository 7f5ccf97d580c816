#include "sierpinski/hanoi.hpp"

#include <algorithm>
#include <stdexcept>

#include "sierpinski/codes.hpp"

namespace sierpinski {

namespace {

void require_odd(int m) {
  if (m % 2 == 0) {
    throw std::domain_error("no multiplicative inverse of 2 mod " + std::to_string(m) +
                            " (generalized Hanoi needs odd m)");
  }
}

void require_step(std::uint64_t step, int disc, int n) {
  if (n < 1 || n > 63) throw std::invalid_argument("n must be in 1..63");
  if (disc < 1 || disc > n) {
    throw std::invalid_argument("disc " + std::to_string(disc) + " outside 1.." + std::to_string(n));
  }
  if (step >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("step " + std::to_string(step) + " outside [0, 2^" +
                                std::to_string(n) + ")");
  }
}

// Position of the single differing digit, or -1 unless exactly one differs.
int moving_disc(const Vertex& a, const Vertex& b) {
  require_same_shape(a, b);
  int disc = -1;
  for (int d = 0; d < a.n(); ++d) {
    if (a[d] == b[d]) continue;
    if (disc >= 0) return -1;
    disc = d;
  }
  return disc;
}

// Best exterior-edge total over all matchings of the remaining columns, with
// each pair of row blocks joined at most once.
struct LineSearch {
  int m;
  std::uint64_t required;
  std::uint64_t best = 0;
  std::uint64_t solutions = 0;
  std::vector<std::vector<bool>> joined;

  explicit LineSearch(int m_)
      : m(m_), required(static_cast<std::uint64_t>(m_) * (m_ - 1) / 2),
        joined(static_cast<std::size_t>(m_), std::vector<bool>(static_cast<std::size_t>(m_), false)) {}

  std::uint64_t column_bound() const { return static_cast<std::uint64_t>((m - 1) / 2); }

  void run() { column(0, 0); }

  // Every column leaves at least one of its m - 1 free vertices unmatched
  // when m is even, so m * column_bound() caps the total.
  bool saturated() const { return best == column_bound() * static_cast<std::uint64_t>(m) && best < required; }

  void column(int c, std::uint64_t total) {
    if (saturated()) return;
    if (c == m) {
      best = std::max(best, total);
      if (total == required) ++solutions;
      return;
    }
    const std::uint64_t bound = total + column_bound() * static_cast<std::uint64_t>(m - c);
    if (bound <= best && bound < required) return;
    std::vector<int> free_rows;
    for (int r = 0; r < m; ++r) {
      if (r != c) free_rows.push_back(r);  // (c, c) is the corner of row c
    }
    match(c, free_rows, 0, total);
  }

  // Matchings on the non-corner vertices of column c.
  void match(int c, std::vector<int>& rows, std::size_t pos, std::uint64_t total) {
    while (pos < rows.size() && rows[pos] < 0) ++pos;
    if (pos == rows.size()) {
      column(c + 1, total);
      return;
    }
    const int a = rows[pos];
    rows[pos] = -1;
    for (std::size_t q = pos + 1; q < rows.size() && !saturated(); ++q) {
      const int b = rows[q];
      if (b < 0 || joined[a][b]) continue;
      joined[a][b] = joined[b][a] = true;
      rows[q] = -1;
      match(c, rows, pos + 1, total + 1);
      rows[q] = b;
      joined[a][b] = joined[b][a] = false;
    }
    match(c, rows, pos + 1, total);  // a stays unmatched
    rows[pos] = a;
  }
};

constexpr int kMaxSearchedOddM = 5;
constexpr int kMaxSearchedEvenM = 8;

}  // namespace

std::string to_string(Coordinates coords) { return coords == Coordinates::S ? "S" : "T"; }

BigInt path_length_to_zero(const Vertex& v) {
  BigInt length = 0;
  for (int i = 0; i < v.n(); ++i) length = length * 2 + (v[i] != 0 ? 1 : 0);
  return length;
}

Vertex step_toward_zero(const Vertex& v) {
  std::vector<Digit> digits(v.digits().begin(), v.digits().end());
  const auto last_nonzero =
      std::find_if(digits.rbegin(), digits.rend(), [](Digit d) { return d != 0; });
  if (last_nonzero == digits.rend()) throw std::invalid_argument("0^n has no step toward 0^n");
  if (last_nonzero == digits.rbegin()) {
    digits.back() = 0;
  } else {
    const Digit x = *last_nonzero;
    *last_nonzero = 0;
    std::fill(digits.rbegin(), last_nonzero, x);
  }
  return Vertex(std::move(digits), v.m());
}

MovePath shortest_path_to_zero(const Vertex& v) {
  MovePath path{Coordinates::S, {v}};
  while (!(path.positions.back().is_constant() && path.positions.back()[0] == 0)) {
    path.positions.push_back(step_toward_zero(path.positions.back()));
  }
  return path;
}

MovePath shortest_path_to_corner(const Vertex& v, Digit corner) {
  const auto swap = PermutationSymmetry::transposition(v.m(), 0, corner);
  MovePath path = shortest_path_to_zero(apply_symmetry(swap, v));
  for (Vertex& p : path.positions) p = apply_symmetry(swap, p);
  return path;
}

MovePath solve_from_position(const Vertex& t) {
  require_odd(t.m());
  MovePath path = shortest_path_to_zero(tau_inverse(t));
  path.coords = Coordinates::T;
  for (Vertex& p : path.positions) p = tau_forward(p);
  return path;
}

MovePath classic_solution(int n, int m) {
  Shape{n, m}.validate();
  require_odd(m);
  const std::uint64_t count = Shape{n, 2}.vertex_count();
  MovePath path{Coordinates::T, {}};
  path.positions.reserve(count);
  for (std::uint64_t l = 0; l < count; ++l) {
    const Vertex bits = Vertex::from_index({n, 2}, l);
    path.positions.push_back(tau_forward(Vertex(std::vector<Digit>(bits.digits().begin(), bits.digits().end()), m)));
  }
  return path;
}

Digit position_coordinate(std::uint64_t step, int disc, int n) {
  require_step(step, disc, n);
  // tau_i(l) = 2^{i-1} (sum_{j<i} 2^{i-1-j} l_j + l_i) mod 3, l_j the j-th
  // most significant of the n bits of l.
  const auto bit = [&](int j) { return (step >> (n - j)) & 1U; };
  std::uint64_t carry = 0;
  for (int j = 1; j < disc; ++j) carry = (2 * carry + bit(j)) % 3;
  return static_cast<Digit>(pow_mod(2, disc - 1, 3) * ((carry + bit(disc)) % 3) % 3);
}

Digit wolfe_coordinate(std::uint64_t step, int disc, int n) {
  require_step(step, disc, n);
  const int e = n - disc;
  const std::uint64_t cycles = (step + (std::uint64_t{1} << e)) >> (e + 1);
  const std::uint64_t twice = (static_cast<std::uint64_t>(disc % 2) + 1) * (cycles % 3) % 3;
  return static_cast<Digit>(2 * twice % 3);
}

bool is_legal_move(const Vertex& a, const Vertex& b) {
  require_odd(a.m());
  const int d = moving_disc(a, b);
  if (d < 0) return false;
  const int m = a.m();
  const Digit k = static_cast<Digit>(static_cast<std::int64_t>(*mod_inverse(2, m)) * (a[d] + b[d]) % m);
  for (int smaller = d + 1; smaller < a.n(); ++smaller) {
    if (a[smaller] != k) return false;
  }
  return true;
}

bool is_legal_move_physical(const Vertex& a, const Vertex& b) {
  const int d = moving_disc(a, b);
  if (d < 0) return false;
  // Push discs largest first so each stack's back() is its top disc.
  std::vector<std::vector<int>> pegs(static_cast<std::size_t>(a.m()));
  for (int disc = 0; disc < a.n(); ++disc) pegs[a[disc]].push_back(disc);
  const auto& from = pegs[a[d]];
  const auto& to = pegs[b[d]];
  return from.back() == d && (to.empty() || to.back() < d);
}

Graph move_graph(int n, int m) {
  const Shape shape{n, m};
  const std::uint64_t count = shape.vertex_count();
  require_odd(m);
  std::vector<Edge> edges;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Vertex a = Vertex::from_index(shape, idx);
    for (int d = 0; d < n; ++d) {
      for (int peg = 0; peg < m; ++peg) {
        if (static_cast<Digit>(peg) == a[d]) continue;
        std::vector<Digit> moved(a.digits().begin(), a.digits().end());
        moved[d] = static_cast<Digit>(peg);
        const Vertex b(std::move(moved), m);
        if (is_legal_move(a, b) && idx < b.index()) edges.push_back({idx, b.index()});
      }
    }
  }
  return Graph(shape, GraphKind::custom, std::move(edges));
}

std::vector<TableRow> solution_table(const MovePath& path) {
  std::vector<TableRow> rows;
  rows.reserve(path.positions.size());
  for (const Vertex& p : path.positions) {
    const Vertex s = path.coords == Coordinates::S ? p : tau_inverse(p);
    const Vertex t = path.coords == Coordinates::T ? p : tau_forward(p);
    rows.push_back({path_length_to_zero(s), s, t});
  }
  return rows;
}

std::vector<TableRow> diplomats_table(int n) { return solution_table(classic_solution(n, 5)); }

ConstantCornerReport constant_corner_search(int m, int n) {
  Shape{n, m}.validate();
  ConstantCornerReport report;
  report.n = n;
  report.m = m;
  report.required_exterior_edges = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  const std::string label = "S(" + std::to_string(n) + "," + std::to_string(m) + ")";
  const std::string host = "K_" + std::to_string(m) + "^" + std::to_string(n);

  if (n > 2 && m % 2 == 0) {
    throw std::domain_error("constant corners for even m and n > 2 are unresolved; only n = 2 is searched");
  }
  if (m % 2 == 1) {
    report.witness = VertexMap::tabulate({n, m}, tau_forward);
    report.exists = true;
  }
  if (n == 2 && m <= (m % 2 == 1 ? kMaxSearchedOddM : kMaxSearchedEvenM)) {
    LineSearch search(m);
    search.run();
    report.searched = true;
    report.max_exterior_edges = search.best;
    // Row blocks and column blocks are transposes of each other.
    report.configurations = 2 * search.solutions;
    report.exists = report.exists || search.solutions > 0;
  } else if (n == 2 && m % 2 == 0) {
    // Each line has m - 1 free vertices, an odd number.
    report.max_exterior_edges = static_cast<std::uint64_t>(m) * ((m - 1) / 2);
  }

  if (report.exists) {
    report.summary = label + " embeds in " + host + " with constant corners (witness: tau)";
    if (report.searched) {
      report.summary += "; " + std::to_string(report.configurations) + " line configurations";
    }
  } else {
    report.summary = "no " + label + " inside " + host + " with constant corners: at most " +
                     std::to_string(report.max_exterior_edges) + " exterior edges fit, " +
                     std::to_string(report.required_exterior_edges) + " needed";
  }
  return report;
}

}  // namespace sierpinski
