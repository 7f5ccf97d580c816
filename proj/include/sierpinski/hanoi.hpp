#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierpinski/embeddings.hpp"
#include "sierpinski/graph.hpp"
#include "sierpinski/numeric.hpp"
#include "sierpinski/vertex.hpp"

namespace sierpinski {

// Positions: digit d is the peg of disc d, and disc 0 is the LARGEST disc.
// S coordinates are Sierpinski labels; T coordinates are physical pegs,
// related by tau.

enum class Coordinates { S, T };

std::string to_string(Coordinates coords);

struct MovePath {
  Coordinates coords = Coordinates::S;
  std::vector<Vertex> positions;

  std::size_t moves() const { return positions.empty() ? 0 : positions.size() - 1; }
};

/// Distance from v to 0^n in S(n,m): sum over nonzero digits of 2^{n-1-i}.
BigInt path_length_to_zero(const Vertex& v);

/// The neighbour of v one step closer to 0^n. If the last digit is nonzero
/// it is cleared; otherwise the last nonzero digit x at position h is
/// cleared and every later digit set to x. Requires v != 0^n.
Vertex step_toward_zero(const Vertex& v);

/// The unique geodesic from v to 0^n in S(n,m), v first.
MovePath shortest_path_to_zero(const Vertex& v);

/// Geodesic to the corner c^n, transported from the 0^n case by the
/// transposition (0 c).
MovePath shortest_path_to_corner(const Vertex& v, Digit corner);

/// Optimal play from position t (T coordinates) to 0^n; odd m only.
MovePath solve_from_position(const Vertex& t);

/// Moves the tower from 0^n to 1^n in 2^n - 1 moves; odd m only. Position l
/// is tau(eta^{-1}(l)).
MovePath classic_solution(int n, int m);

/// Digit of disc `disc` in position `step` of the three-peg classic
/// solution, from the binary digits of step. Here discs are numbered
/// 1..n from the largest.
Digit position_coordinate(std::uint64_t step, int disc, int n);

/// Same digit from the per-disc periodicity formula
/// 2 t = ((d mod 2) + 1) * floor((step + 2^{n-d}) / 2^{n-d+1}) mod 3,
/// d = disc in 1..n counted from the largest.
Digit wolfe_coordinate(std::uint64_t step, int disc, int n);

/// a -> b moves one disc from peg i to peg j while every smaller disc sits
/// on peg k = 2^{-1}(i + j) mod m. Odd m only.
bool is_legal_move(const Vertex& a, const Vertex& b);

/// Three-peg legality by simulating the stacks: the moving disc must be on
/// top of its peg and smaller than the top of the destination.
bool is_legal_move_physical(const Vertex& a, const Vertex& b);

/// Graph on all positions whose edges are the legal moves.
Graph move_graph(int n, int m);

struct TableRow {
  BigInt step;
  Vertex s;
  Vertex t;
};

/// Rows l = 0 .. 2^n - 1 of (eta^{-1}(l), tau(eta^{-1}(l))) over m = 5.
std::vector<TableRow> diplomats_table(int n);

/// Rows for a path: step = remaining distance to the goal, with both
/// coordinatizations of every position.
std::vector<TableRow> solution_table(const MovePath& path);

struct ConstantCornerReport {
  int n = 2;
  int m = 2;
  bool exists = false;
  /// Whether the axis-parallel line decompositions were enumerated.
  bool searched = false;
  /// Exact maximum when searched; for larger even m, the parity upper bound.
  std::uint64_t max_exterior_edges = 0;
  std::uint64_t required_exterior_edges = 0;
  std::uint64_t configurations = 0;
  std::optional<VertexMap> witness;
  std::string summary;
};

/// Is there a copy of S(n,m) inside K_m^n whose corners are the constant
/// vertices? For n = 2 the K_m blocks must be parallel lines each holding
/// one constant vertex; the search enumerates the exterior matchings. Odd m
/// also returns tau as a witness. Even m > 2 with n > 2 is unresolved and
/// throws std::domain_error.
ConstantCornerReport constant_corner_search(int m, int n = 2);

}  // namespace sierpinski
