#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sierpinski/codes.hpp"
#include "sierpinski/embeddings.hpp"
#include "sierpinski/graph.hpp"
#include "sierpinski/hanoi.hpp"

using namespace sierpinski;

namespace {

Vertex V(std::string_view digits, int m) { return Vertex::parse(digits, m); }

std::vector<std::string> strings(const std::vector<Vertex>& path) {
  std::vector<std::string> out;
  for (const Vertex& v : path) out.push_back(v.str());
  return out;
}

oracle::Tuple tuple(const Vertex& v) { return oracle::Tuple(v.digits().begin(), v.digits().end()); }

}  // namespace

TEST_CASE("distance to 0^n") {
  CHECK(path_length_to_zero(V("0000", 3)) == 0);
  CHECK(path_length_to_zero(V("1210", 3)) == 14);
  CHECK(path_length_to_zero(V("1212", 3)) == 15);
  CHECK(path_length_to_zero(Vertex::constant(70, 5, 4)) == big_pow(2, 70) - 1);
  CHECK(step_toward_zero(V("1210", 3)) == V("1201", 3));
  CHECK(step_toward_zero(V("1201", 3)) == V("1200", 3));
  CHECK(step_toward_zero(V("1200", 3)) == V("1022", 3));
  CHECK_THROWS_AS(step_toward_zero(V("000", 3)), std::invalid_argument);
}

TEST_CASE("distance formula equals BFS and geodesics are unique") {
  const auto check = [](int n, int m, bool uniqueness) {
    CAPTURE(n);
    CAPTURE(m);
    const Graph g = build_sierpinski(n, m);
    const oracle::Bfs bfs = oracle::bfs(g.adjacency(), 0);
    for (std::uint64_t i = 0; i < g.vertex_count(); ++i) {
      const Vertex v = g.vertex(i);
      REQUIRE(path_length_to_zero(v) == bfs.dist[i]);
      if (uniqueness) REQUIRE(bfs.geodesics[i] == 1);
      const MovePath path = shortest_path_to_zero(v);
      REQUIRE(path.moves() == static_cast<std::size_t>(bfs.dist[i]));
      for (std::size_t k = 1; k < path.positions.size(); ++k) {
        REQUIRE(g.has_edge(path.positions[k - 1], path.positions[k]));
      }
    }
  };
  for (int n = 1; n <= 6; ++n) check(n, 3, n <= 5);
  for (int n = 1; n <= 4; ++n) check(n, 5, false);
}

TEST_CASE("geodesic from 1210") {
  const MovePath path = shortest_path_to_zero(V("1210", 3));
  CHECK(path.coords == Coordinates::S);
  CHECK(strings(path.positions) ==
        std::vector<std::string>{"1210", "1201", "1200", "1022", "1020", "1002", "1000", "0111", "0110", "0101",
                                 "0100", "0011", "0010", "0001", "0000"});
  CHECK(shortest_path_to_zero(V("000", 3)).positions.size() == 1);
}

TEST_CASE("paths to other corners") {
  for (int m : {3, 4, 5}) {
    const int n = 3;
    const Graph g = build_sierpinski(n, m);
    for (Digit c = 0; c < static_cast<Digit>(m); ++c) {
      const Vertex corner = Vertex::constant(n, m, c);
      const auto dist = oracle::bfs(g.adjacency(), corner.index()).dist;
      const auto swap = PermutationSymmetry::transposition(m, 0, c);
      for (std::uint64_t i = 0; i < g.vertex_count(); ++i) {
        const MovePath path = shortest_path_to_corner(g.vertex(i), c);
        REQUIRE(path.positions.front() == g.vertex(i));
        REQUIRE(path.positions.back() == corner);
        REQUIRE(path.moves() == static_cast<std::size_t>(dist[i]));
        const MovePath base = shortest_path_to_zero(apply_symmetry(swap.inverse(), g.vertex(i)));
        for (std::size_t k = 0; k < base.positions.size(); ++k) {
          REQUIRE(apply_symmetry(swap, base.positions[k]) == path.positions[k]);
        }
      }
    }
  }
}

TEST_CASE("solving from a T position") {
  const MovePath path = solve_from_position(V("1020", 3));
  CHECK(path.coords == Coordinates::T);
  CHECK(path.moves() == 14);
  CHECK(strings(path.positions) ==
        std::vector<std::string>{"1020", "1010", "1011", "1211", "1210", "1220", "1222", "0222", "0220", "0210",
                                 "0211", "0011", "0012", "0002", "0000"});
  CHECK(solve_from_position(V("0000", 3)).positions.size() == 1);
  CHECK_THROWS_AS(solve_from_position(V("10", 4)), std::domain_error);
}

TEST_CASE("classic solution") {
  CHECK(strings(classic_solution(1, 3).positions) == std::vector<std::string>{"0", "1"});
  CHECK(strings(classic_solution(2, 3).positions) == std::vector<std::string>{"00", "02", "12", "11"});
  CHECK(strings(classic_solution(4, 5).positions) ==
        std::vector<std::string>{"0000", "0002", "0042", "0044", "0344", "0341", "0331", "0333", "1333", "1330",
                                 "1320", "1322", "1122", "1124", "1114", "1111"});
  for (int n = 1; n <= 10; ++n) {
    const MovePath path = classic_solution(n, 3);
    CHECK(path.moves() == (1ULL << n) - 1);
    CHECK(path.positions.front() == Vertex::zero(n, 3));
    CHECK(path.positions.back() == Vertex::constant(n, 3, 1));
    std::vector<Vertex> s;
    for (const Vertex& t : path.positions) s.push_back(tau_inverse(t));
    CHECK(std::is_sorted(s.begin(), s.end()));
  }
}

TEST_CASE("closed-form digits") {
  for (int d = 1; d <= 3; ++d) CHECK(position_coordinate(0, d, 3) == 0);
  CHECK(position_coordinate(1, 1, 2) == 0);
  CHECK(position_coordinate(1, 2, 2) == 2);
  CHECK(position_coordinate(2, 1, 2) == 1);
  CHECK(position_coordinate(2, 2, 2) == 2);
  CHECK(wolfe_coordinate(3, 1, 2) == 1);
  CHECK_THROWS_AS(position_coordinate(4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(wolfe_coordinate(0, 3, 2), std::invalid_argument);
  for (int n = 1; n <= 10; ++n) {
    const MovePath path = classic_solution(n, 3);
    for (std::uint64_t l = 0; l < (1ULL << n); ++l) {
      for (int d = 1; d <= n; ++d) {
        const Digit expect = path.positions[l][d - 1];
        REQUIRE(position_coordinate(l, d, n) == expect);
        REQUIRE(wolfe_coordinate(l, d, n) == expect);
      }
    }
  }
}

TEST_CASE("move legality") {
  CHECK(is_legal_move(V("00", 3), V("02", 3)));
  CHECK(is_legal_move_physical(V("00", 3), V("02", 3)));
  CHECK_FALSE(is_legal_move(V("00", 3), V("10", 3)));
  CHECK_FALSE(is_legal_move_physical(V("00", 3), V("10", 3)));
  CHECK_FALSE(is_legal_move(V("00", 3), V("00", 3)));
  CHECK_FALSE(is_legal_move(V("00", 3), V("11", 3)));

  // Both rules agree with an independent stack simulation on every pair.
  for (int n = 1; n <= 4; ++n) {
    const Shape shape{n, 3};
    for (std::uint64_t a = 0; a < shape.vertex_count(); ++a) {
      for (std::uint64_t b = 0; b < shape.vertex_count(); ++b) {
        const Vertex u = Vertex::from_index(shape, a);
        const Vertex v = Vertex::from_index(shape, b);
        const bool expect = oracle::physical_move(tuple(u), tuple(v), 3);
        REQUIRE(is_legal_move(u, v) == expect);
        REQUIRE(is_legal_move_physical(u, v) == expect);
      }
    }
  }

  const auto legal_and_fresh = [](const MovePath& path, bool physical) {
    std::set<Vertex> seen(path.positions.begin(), path.positions.end());
    bool ok = seen.size() == path.positions.size();
    for (std::size_t k = 1; k < path.positions.size(); ++k) {
      ok = ok && is_legal_move(path.positions[k - 1], path.positions[k]);
      if (physical) ok = ok && is_legal_move_physical(path.positions[k - 1], path.positions[k]);
    }
    return ok;
  };
  for (int n = 1; n <= 8; ++n) {
    CHECK(legal_and_fresh(classic_solution(n, 3), true));
    CHECK(legal_and_fresh(classic_solution(n, 5), false));
    CHECK(legal_and_fresh(classic_solution(n, 7), false));
  }
  for (int n = 1; n <= 5; ++n) {
    const Shape shape{n, 3};
    for (std::uint64_t i = 0; i < shape.vertex_count(); ++i) {
      REQUIRE(legal_and_fresh(solve_from_position(Vertex::from_index(shape, i)), true));
    }
  }
}

TEST_CASE("move graph is the tau image of S(n,m)") {
  for (int m : {3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      const Graph moves = move_graph(n, m);
      const Graph s = build_sierpinski(n, m);
      std::vector<Edge> image;
      for (const Edge& e : s.edges()) {
        image.push_back(make_edge(tau_forward(s.vertex(e.a)).index(), tau_forward(s.vertex(e.b)).index()));
      }
      CHECK(moves.same_edges(Graph({n, m}, GraphKind::custom, image)));
    }
  }
}

TEST_CASE("diplomats table") {
  const auto rows = diplomats_table(4);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0].step == 0);
  CHECK(rows[0].s == V("0000", 5));
  CHECK(rows[0].t == V("0000", 5));
  CHECK(rows[5].s == V("0101", 5));
  CHECK(rows[5].t == V("0341", 5));
  CHECK(rows[15].s == V("1111", 5));
  CHECK(rows[15].t == V("1111", 5));
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(is_legal_move(rows[k - 1].t, rows[k].t));
  for (std::size_t k = 0; k < rows.size(); ++k) CHECK(rows[k].step == k);
}

TEST_CASE("constant corners") {
  const ConstantCornerReport three = constant_corner_search(3);
  CHECK(three.exists);
  REQUIRE(three.witness.has_value());
  CHECK(verify_embedding(*three.witness).verdict);
  for (const Vertex& c : corners(2, 3)) CHECK(three.witness->apply(c) == c);

  const ConstantCornerReport four = constant_corner_search(4);
  CHECK_FALSE(four.exists);
  CHECK(four.searched);
  CHECK(four.max_exterior_edges == 4);
  CHECK(four.required_exterior_edges == 6);

  CHECK(constant_corner_search(5).exists);
  CHECK(constant_corner_search(5).configurations > 0);
  CHECK(constant_corner_search(7, 3).exists);
  CHECK(constant_corner_search(6).max_exterior_edges == 12);
  CHECK_FALSE(constant_corner_search(12).exists);
  CHECK_THROWS_AS(constant_corner_search(4, 3), std::domain_error);

  const ConstantCornerReport two = constant_corner_search(2);
  CHECK_FALSE(two.exists);
  CHECK(two.max_exterior_edges == 0);
  CHECK(two.required_exterior_edges == 1);

  // Brute force for m = 2: no bijection S(2,2) -> K_2^2 keeps edges and
  // sends both corners to constant words.
  const Graph s = build_sierpinski(2, 2);
  const Graph k = build_hamming(2, 2);
  std::vector<std::uint64_t> f{0, 1, 2, 3};
  int witnesses = 0;
  do {
    bool ok = Vertex::from_index({2, 2}, f[0]).is_constant() && Vertex::from_index({2, 2}, f[3]).is_constant();
    for (const Edge& e : s.edges()) ok = ok && k.has_edge(f[e.a], f[e.b]);
    witnesses += ok;
  } while (std::next_permutation(f.begin(), f.end()));
  CHECK(witnesses == 0);
}
