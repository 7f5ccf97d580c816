#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sierpinski::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("gen") {
  const Result s = run({"gen", "sierpinski", "--n", "3", "--m", "3", "--format", "edgelist"});
  CHECK(s.code == 0);
  CHECK(count_lines(s.out) == 39);
  CHECK(count_lines(run({"gen", "hamming", "--n", "1", "--m", "4"}).out) == 6);
  const Result big = run({"gen", "sierpinski", "--n", "2", "--m", "100"});
  CHECK(big.code == 0);
  CHECK(count_lines(big.out) == (100 * 100 * 100 - 100) / 2);
  const auto doc = nlohmann::json::parse(run({"gen", "single-twist", "--n", "2", "--m", "3", "--format", "json"}).out);
  CHECK(doc["kind"] == "single-twist");
  CHECK(doc["edges"].size() == 12);
  CHECK(run({"gen", "hamming", "--n", "2", "--m", "2", "--format", "dot"}).out.rfind("graph", 0) == 0);
  CHECK(run({"gen", "hamming", "--n", "2", "--m", "2", "--format", "csv"}).out.rfind("u,v\n", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"gen", "sierpinski", "--n", "3"}).code == 2);
  CHECK(run({"gen", "sierpinski", "--n", "0", "--m", "3"}).code == 2);
  CHECK(run({"gen", "sierpinski", "--n", "3", "--m", "1"}).code == 2);
  CHECK(run({"gen", "sierpinski", "--n", "20", "--m", "3"}).code == 2);
  CHECK(run({"gen", "cube", "--n", "2", "--m", "3"}).code == 2);
  CHECK(run({"gen", "sierpinski", "--n", "2", "--m", "3", "--format", "xml"}).code == 2);
  CHECK(run({"embed", "tau", "--n", "2", "--m", "4"}).code == 2);
  CHECK(run({"embed", "epsilon", "--n", "2", "--m", "6", "--c", "2"}).code == 2);
  CHECK(run({"embed", "epsilon", "--n", "3", "--m", "5", "--c-list", "1,2"}).code == 2);
  CHECK(run({"embed", "phi", "--n", "2", "--m", "3", "--format", "dot"}).code == 2);
  CHECK(run({"hanoi", "classic", "--n", "3", "--m", "4"}).code == 2);
  CHECK(run({"hanoi", "solve", "--from", "10x0"}).code == 2);
  CHECK(run({"hanoi", "solve", "--from", "1030", "--m", "3"}).code == 2);
  CHECK(run({"hanoi", "solve", "--from", "1020", "--coords", "Q"}).code == 2);
  CHECK(run({"verify", "--n", "2", "--m", "3"}).code == 2);
  CHECK(run({"verify", "--graph", "/nonexistent/graph.json"}).code == 2);
  CHECK(run({"corners-search", "--m", "4", "--n", "3"}).code == 2);
  const Result e = run({"embed", "tau", "--n", "2", "--m", "4"});
  CHECK(e.out.empty());
  CHECK(e.err.find("inverse of 2") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("embed") {
  CHECK(run({"embed", "tau", "--n", "4", "--m", "3", "--matrix"}).out == "1 0 0 0\n2 2 0 0\n2 1 1 0\n2 1 2 2\n");
  CHECK(run({"embed", "tau", "--n", "4", "--m", "5", "--matrix", "--invert"}).out ==
        "1 0 0 0\n4 2 0 0\n4 3 4 0\n4 3 1 3\n");
  CHECK(run({"embed", "epsilon", "--n", "4", "--m", "5", "--c", "3", "--matrix"}).out ==
        run({"embed", "tau", "--n", "4", "--m", "5", "--matrix"}).out);
  CHECK(run({"embed", "epsilon", "--n", "2", "--m", "5", "--c-list", "2,3", "--matrix"}).out == "2 0\n1 1\n");
  const auto doc = nlohmann::json::parse(run({"embed", "phi", "--n", "3", "--m", "3", "--matrix", "--format", "json"}).out);
  CHECK(doc["rows"] == nlohmann::json::parse("[[1,0,0],[1,1,0],[2,1,1]]"));
  CHECK(run({"embed", "phi", "--n", "1", "--m", "3"}).out == "v  phi(v)\n0       0\n1       1\n2       2\n");
  const Result csv = run({"embed", "tau", "--n", "2", "--m", "3", "--format", "csv", "--invert"});
  CHECK(csv.out.rfind("v,image\n00,00\n01,02\n", 0) == 0);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "phi", "--n", "4", "--m", "4"}).code == 0);
  CHECK(run({"verify", "phi", "--n", "1", "--m", "2"}).code == 0);
  CHECK(run({"verify", "epsilon", "--n", "3", "--m", "5", "--c-list", "2,3,4"}).code == 0);
  CHECK(run({"verify", "identity", "--n", "3", "--m", "3"}).code == 1);
  const Result twist = run({"verify", "single-twist", "--n", "3", "--m", "3"});
  CHECK(twist.code == 1);
  CHECK(twist.out.find("011 has degree 4") != std::string::npos);
  CHECK(twist.out.find("violation: ") != std::string::npos);
  CHECK(twist.out.substr(twist.out.size() - 5) == "FAIL\n");
  const auto doc = nlohmann::json::parse(run({"verify", "single-twist", "--n", "3", "--m", "3", "--format", "json"}).out);
  CHECK(doc["verdict"] == false);
  CHECK(doc["degree_violation"]["vertex"] == "011");
}

TEST_CASE("json graphs round trip through verify") {
  const auto dir = std::filesystem::temp_directory_path() / "sierpinski_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "s33.json").string();
  const Result gen = run({"gen", "sierpinski", "--n", "3", "--m", "3", "--format", "json", "--out", path});
  CHECK(gen.code == 0);
  CHECK(gen.out.empty());
  const Result ok = run({"verify", "--graph", path});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("identical") != std::string::npos);

  auto doc = nlohmann::json::parse(slurp(path));
  doc["edges"].erase(doc["edges"].begin());
  std::ofstream(path) << doc.dump();
  CHECK(run({"verify", "--graph", path}).code == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("hanoi and friends") {
  CHECK(run({"hanoi", "solve", "--from", "1020"}).out == slurp(FIXTURES_DIR "/hanoi_solve_1020.txt"));
  CHECK(run({"hanoi", "classic", "--n", "4", "--m", "5"}).out == slurp(FIXTURES_DIR "/hanoi_classic_4_5.txt"));
  CHECK(run({"diplomats", "--n", "4"}).out == slurp(FIXTURES_DIR "/hanoi_classic_4_5.txt"));
  CHECK(run({"hanoi", "solve", "--from", "0000", "--coords", "T", "--m", "3"}).out == "l  S(4,3)  T(4,3)\n0    0000    0000\n");
  const Result s = run({"hanoi", "solve", "--from", "1201", "--coords", "S", "--format", "csv"});
  CHECK(s.out.rfind("l,S,T\n13,1201,1010\n12,1200,1011\n", 0) == 0);
  CHECK(count_lines(s.out) == 15);
  const auto doc = nlohmann::json::parse(run({"hanoi", "classic", "--n", "2", "--m", "3", "--format", "json"}).out);
  CHECK(doc["rows"][1]["T"] == "02");
  CHECK(run({"gray", "--n", "2"}).out == "00\n01\n11\n10\n");
  CHECK(run({"gray", "--n", "3", "--format", "int"}).out == "0\n1\n3\n2\n6\n7\n5\n4\n");
  CHECK(run({"gray", "--n", "2", "--format", "both"}).out == "00 0\n01 1\n11 3\n10 2\n");
  CHECK(run({"density", "--n", "4", "--m", "3"}).out == "sierpinski edges: 120\nhamming edges: 324\ndensity: 10/27\n");
  const Result c4 = run({"corners-search", "--m", "4"});
  CHECK(c4.code == 0);
  CHECK(c4.out.find("at most 4 exterior edges fit, 6 needed") != std::string::npos);
  const auto c3 = nlohmann::json::parse(run({"corners-search", "--m", "3", "--format", "json"}).out);
  CHECK(c3["exists"] == true);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"gen", "sierpinski", "--n", "4", "--m", "3", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("fixture check") {
  const Result r = run({"--check-fixtures", FIXTURES_DIR});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(run({"--check-fixtures", "/nonexistent"}).code == 2);
}
