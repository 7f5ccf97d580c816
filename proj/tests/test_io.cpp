#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "sierpinski/io.hpp"

using namespace sierpinski;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("edge list") {
  const auto s21 = lines(to_edge_list(build_sierpinski(1, 3)));
  CHECK(s21 == std::vector<std::string>{"0 1", "0 2", "1 2"});
  CHECK(lines(to_edge_list(build_sierpinski(3, 3))).size() == 39);
  const auto wide = lines(to_edge_list(build_sierpinski(2, 11)));
  CHECK(wide.front() == "0 0, 0 1");
  CHECK(wide.size() == (11 * 11 * 11 - 11) / 2);
}

TEST_CASE("csv and dot") {
  const auto csv = lines(to_csv(build_hamming(1, 2)));
  CHECK(csv == std::vector<std::string>{"u,v", "0,1"});
  const std::string dot = to_dot(build_sierpinski(1, 2));
  CHECK(dot.rfind("graph \"sierpinski_1_2\" {", 0) == 0);
  CHECK(dot.find("\"0\" -- \"1\";") != std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("graph json round trip") {
  for (const Graph& g : {build_sierpinski(3, 3), build_hamming(2, 4), build_single_twist(3, 3), build_sierpinski(2, 12)}) {
    const nlohmann::json doc = to_json(g);
    const Graph back = graph_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.kind() == g.kind());
    CHECK(back.shape().n == g.shape().n);
    CHECK(back.same_edges(g));
  }
  const nlohmann::json doc = to_json(build_sierpinski(1, 2));
  CHECK(doc.dump() == R"({"edges":[["0","1"]],"kind":"sierpinski","m":2,"n":1})");
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n":2,"m":3,"edges":[["00"]]})")));
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n":2,"m":3,"edges":[["00","000"]]})")));
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n":2,"m":3,"edges":[["00","00"]]})")));
}

TEST_CASE("linear map json") {
  const LinearMap t = embedding_matrix(MapKind::tau, 4, 5);
  const nlohmann::json doc = to_json(t);
  CHECK(doc.dump() == R"({"m":5,"rows":[[1,0,0,0],[3,3,0,0],[3,4,4,0],[3,4,2,2]]})");
  CHECK(linear_map_from_json(doc) == t);
}

TEST_CASE("vertex map tables") {
  const VertexMap map = VertexMap::tabulate({2, 3}, phi_forward);
  const auto csv = lines(to_csv(map));
  CHECK(csv.size() == 10);
  CHECK(csv[0] == "v,image");
  CHECK(csv[6] == "12,10");
  const auto text = lines(to_text(VertexMap::identity({1, 3}), "phi(v)"));
  CHECK(text == std::vector<std::string>{"v  phi(v)", "0       0", "1       1", "2       2"});
}

TEST_CASE("solution tables") {
  const auto rows = solution_table(classic_solution(2, 3));
  CHECK(table_text(rows, 2, 3) ==
        "l  S(2,3)  T(2,3)\n"
        "0      00      00\n"
        "1      01      02\n"
        "2      10      12\n"
        "3      11      11\n");
  CHECK(table_csv(rows) == "l,S,T\n0,00,00\n1,01,02\n2,10,12\n3,11,11\n");
  const nlohmann::json doc = table_json(rows, 2, 3);
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["rows"][2]["T"] == "12");
  CHECK(doc["rows"][2]["l"] == 2);
}
