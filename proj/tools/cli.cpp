#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "sierpinski/codes.hpp"
#include "sierpinski/embeddings.hpp"
#include "sierpinski/graph.hpp"
#include "sierpinski/hanoi.hpp"
#include "sierpinski/io.hpp"

namespace sierpinski::cli {

namespace {

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommandConfig {
  std::string kind;
  int n = 0;
  int m = 0;
  std::optional<Digit> c;
  std::vector<Digit> c_list;
  std::string position;
  std::string coords = "T";
  std::string format = "text";
  std::string gray_format = "bits";
  std::string out_path;
  std::string graph_path;
  bool matrix = false;
  bool invert = false;
};

void require_odd_m(const CommandConfig& cfg, const std::string& what) {
  if (cfg.m % 2 == 0) {
    throw UsageError(what + " needs odd m: no multiplicative inverse of 2 mod " + std::to_string(cfg.m));
  }
}

void require_format(const CommandConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format \"" + cfg.format + "\" is not supported by this command");
}

TwistFamily family_from(const CommandConfig& cfg) {
  if (!cfg.c_list.empty()) {
    if (static_cast<int>(cfg.c_list.size()) != cfg.n) {
      throw UsageError("--c-list needs exactly n = " + std::to_string(cfg.n) + " multipliers");
    }
    return TwistFamily(cfg.m, cfg.c_list);
  }
  return TwistFamily::uniform(cfg.n, cfg.m, cfg.c.value_or(1));
}

// Forward (or inverse) vertex map selected by kind.
std::function<Vertex(const Vertex&)> map_for(const CommandConfig& cfg, bool inverse) {
  if (cfg.kind == "phi") return inverse ? phi_inverse : phi_forward;
  if (cfg.kind == "tau") {
    require_odd_m(cfg, "tau");
    return inverse ? tau_inverse : tau_forward;
  }
  if (cfg.kind == "epsilon") {
    const TwistFamily family = family_from(cfg);
    if (inverse) return [family](const Vertex& v) { return epsilon_inverse(v, family); };
    return [family](const Vertex& v) { return epsilon_forward(v, family); };
  }
  if (cfg.kind == "single-twist") {
    if (inverse) throw UsageError("the single-twist map has no closed-form inverse");
    return single_twist_forward;
  }
  if (cfg.kind == "identity") return [](const Vertex& v) { return v; };
  throw UsageError("unknown map kind \"" + cfg.kind + "\"");
}

LinearMap matrix_for(const CommandConfig& cfg) {
  if (cfg.kind == "phi") return embedding_matrix(MapKind::phi, cfg.n, cfg.m);
  if (cfg.kind == "tau") {
    require_odd_m(cfg, "tau");
    return embedding_matrix(MapKind::tau, cfg.n, cfg.m);
  }
  if (cfg.kind == "epsilon") return embedding_matrix(family_from(cfg));
  throw UsageError("no matrix for map kind \"" + cfg.kind + "\"");
}

int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "edgelist", "csv", "json", "dot"});
  const Graph graph = [&] {
    switch (graph_kind_from_string(cfg.kind)) {
      case GraphKind::sierpinski:
        return build_sierpinski(cfg.n, cfg.m);
      case GraphKind::hamming:
        return build_hamming(cfg.n, cfg.m);
      case GraphKind::single_twist:
        return build_single_twist(cfg.n, cfg.m);
      case GraphKind::custom:
        break;
    }
    throw UsageError("gen builds sierpinski, hamming or single-twist");
  }();
  if (cfg.format == "json") {
    out << to_json(graph).dump() << "\n";
  } else if (cfg.format == "dot") {
    out << to_dot(graph);
  } else if (cfg.format == "csv") {
    out << to_csv(graph);
  } else {
    out << to_edge_list(graph);
  }
  return kExitOk;
}

int cmd_embed(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  if (cfg.matrix) {
    LinearMap map = matrix_for(cfg);
    if (cfg.invert) map = invert_linear_map(map);
    if (cfg.format == "json") {
      out << to_json(map).dump() << "\n";
    } else {
      out << format_rows(map);
    }
    return kExitOk;
  }
  const Shape shape{cfg.n, cfg.m};
  const auto fn = map_for(cfg, cfg.invert);
  const VertexMap map = VertexMap::tabulate(shape, fn);
  if (cfg.format == "csv") {
    out << to_csv(map);
  } else if (cfg.format == "json") {
    nlohmann::json pairs = nlohmann::json::array();
    for (std::uint64_t idx = 0; idx < map.images().size(); ++idx) {
      pairs.push_back({Vertex::from_index(shape, idx).str(), Vertex::from_index(shape, map[idx]).str()});
    }
    out << nlohmann::json{{"n", cfg.n}, {"m", cfg.m}, {"kind", cfg.kind}, {"inverse", cfg.invert}, {"map", pairs}}.dump()
        << "\n";
  } else {
    out << to_text(map, cfg.kind + (cfg.invert ? "^-1(v)" : "(v)"));
  }
  return kExitOk;
}

int verify_graph_file(const CommandConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.graph_path);
  if (!in) throw UsageError("cannot read " + cfg.graph_path);
  const Graph loaded = graph_from_json(nlohmann::json::parse(in));
  const Shape shape = loaded.shape();
  const Graph rebuilt = [&] {
    switch (loaded.kind()) {
      case GraphKind::sierpinski:
        return build_sierpinski(shape.n, shape.m);
      case GraphKind::hamming:
        return build_hamming(shape.n, shape.m);
      case GraphKind::single_twist:
        return build_single_twist(shape.n, shape.m);
      case GraphKind::custom:
        break;
    }
    throw UsageError("graph kind \"custom\" has no canonical edge set to compare against");
  }();
  std::uint64_t far_edges = 0;
  for (const Edge& e : loaded.edges()) {
    if (hamming_distance(loaded.vertex(e.a), loaded.vertex(e.b)) != 1) ++far_edges;
  }
  const bool same = loaded.same_edges(rebuilt);
  out << "graph: " << to_string(loaded.kind()) << "  n=" << shape.n << " m=" << shape.m << "\n";
  out << "edges: " << loaded.edge_count() << " loaded, " << rebuilt.edge_count() << " canonical\n";
  out << "edges spanning more than one coordinate: " << far_edges << "\n";
  out << "canonical edge set: " << (same ? "identical" : "different") << "\n";
  out << (same ? "PASS" : "FAIL") << "\n";
  return same ? kExitOk : kExitFail;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (!cfg.graph_path.empty()) return verify_graph_file(cfg, out);
  if (cfg.kind.empty()) throw UsageError("verify needs a map kind or --graph FILE");
  if (cfg.n < 1 || cfg.m < 2) throw UsageError("verify needs --n >= 1 and --m >= 2");
  const Shape shape{cfg.n, cfg.m};
  const VertexMap map = VertexMap::tabulate(shape, map_for(cfg, false));
  const EmbeddingReport report = verify_embedding(map);

  // The single-twist graph itself is checked against S(n,m)'s degrees.
  std::optional<std::pair<Vertex, std::uint32_t>> degree_violation;
  bool verdict = report.verdict;
  if (cfg.kind == "single-twist") {
    const Graph twisted = build_single_twist(cfg.n, cfg.m);
    const auto degrees = twisted.degrees();
    const auto worst = std::max_element(degrees.begin(), degrees.end());
    if (*worst > static_cast<std::uint32_t>(cfg.m)) {
      degree_violation.emplace(twisted.vertex(static_cast<std::uint64_t>(worst - degrees.begin())), *worst);
      verdict = false;
    }
  }

  if (cfg.format == "json") {
    nlohmann::json violations = nlohmann::json::array();
    for (const EdgeViolation& v : report.violations) {
      violations.push_back({{"edge", {v.u.str(), v.v.str()}}, {"image", {v.image_u.str(), v.image_v.str()}},
                            {"distance", v.distance}});
    }
    nlohmann::json doc{{"kind", cfg.kind},
                       {"n", cfg.n},
                       {"m", cfg.m},
                       {"is_bijection", report.is_bijection},
                       {"all_edges_distance_one", report.all_edges_distance_one},
                       {"edge_count_preserved", report.edge_count_preserved},
                       {"violation_count", report.violation_count},
                       {"violations", violations},
                       {"verdict", verdict}};
    if (degree_violation) {
      doc["degree_violation"] = {{"vertex", degree_violation->first.str()}, {"degree", degree_violation->second}};
    }
    out << doc.dump() << "\n";
    return verdict ? kExitOk : kExitFail;
  }

  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "map: " << cfg.kind << "  n=" << cfg.n << " m=" << cfg.m << "\n";
  out << "bijection: " << yes_no(report.is_bijection) << "\n";
  out << "edges at distance 1: " << yes_no(report.all_edges_distance_one) << " (" << report.violation_count
      << " violations)\n";
  out << "edge count preserved: " << yes_no(report.edge_count_preserved) << "\n";
  for (const EdgeViolation& v : report.violations) {
    out << "violation: " << v.u.str() << "-" << v.v.str() << " -> " << v.image_u.str() << "-" << v.image_v.str()
        << " (distance " << v.distance << ")\n";
  }
  if (degree_violation) {
    out << "degree violation: " << degree_violation->first.str() << " has degree " << degree_violation->second
        << " in S~(" << cfg.n << "," << cfg.m << "); S(" << cfg.n << "," << cfg.m << ") has maximum degree "
        << cfg.m << "\n";
  }
  out << (verdict ? "PASS" : "FAIL") << "\n";
  return verdict ? kExitOk : kExitFail;
}

void print_table(const CommandConfig& cfg, const std::vector<TableRow>& rows, int n, int m, std::ostream& out) {
  if (cfg.format == "csv") {
    out << table_csv(rows);
  } else if (cfg.format == "json") {
    out << table_json(rows, n, m).dump() << "\n";
  } else {
    out << table_text(rows, n, m);
  }
}

int cmd_hanoi_classic(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  require_odd_m(cfg, "hanoi classic");
  print_table(cfg, solution_table(classic_solution(cfg.n, cfg.m)), cfg.n, cfg.m, out);
  return kExitOk;
}

int cmd_hanoi_solve(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  require_odd_m(cfg, "hanoi solve");
  const Vertex start = Vertex::parse(cfg.position, cfg.m);
  const MovePath path = cfg.coords == "S" ? shortest_path_to_zero(start) : solve_from_position(start);
  print_table(cfg, solution_table(path), start.n(), cfg.m, out);
  return kExitOk;
}

int cmd_diplomats(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  print_table(cfg, diplomats_table(cfg.n), cfg.n, 5, out);
  return kExitOk;
}

int cmd_gray(const CommandConfig& cfg, std::ostream& out) {
  for (const Vertex& word : gray_sequence(cfg.n)) {
    if (cfg.gray_format == "int") {
      out << eta(word) << "\n";
    } else if (cfg.gray_format == "both") {
      out << word.str() << " " << eta(word) << "\n";
    } else {
      out << word.str() << "\n";
    }
  }
  return kExitOk;
}

int cmd_density(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const BigInt s_edges = sierpinski_edge_count(cfg.n, cfg.m);
  const BigInt k_edges = hamming_edge_count(cfg.n, cfg.m);
  const Rational density = edge_density(cfg.n, cfg.m);
  const std::string ratio =
      boost::multiprecision::numerator(density).str() + "/" + boost::multiprecision::denominator(density).str();
  if (cfg.format == "json") {
    out << nlohmann::json{{"n", cfg.n}, {"m", cfg.m}, {"sierpinski_edges", s_edges.str()},
                          {"hamming_edges", k_edges.str()}, {"density", ratio}}
               .dump()
        << "\n";
  } else {
    out << "sierpinski edges: " << s_edges << "\n"
        << "hamming edges: " << k_edges << "\n"
        << "density: " << ratio << "\n";
  }
  return kExitOk;
}

int cmd_corners(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const ConstantCornerReport report = constant_corner_search(cfg.m, cfg.n);
  if (cfg.format == "json") {
    out << nlohmann::json{{"n", report.n},
                          {"m", report.m},
                          {"exists", report.exists},
                          {"searched", report.searched},
                          {"max_exterior_edges", report.max_exterior_edges},
                          {"required_exterior_edges", report.required_exterior_edges},
                          {"configurations", report.configurations},
                          {"witness", report.witness ? "tau" : ""}}
               .dump()
        << "\n";
  } else {
    out << report.summary << "\n";
  }
  return kExitOk;
}

void write_output(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out_path);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sierpinski graphs, their Hamming-graph embeddings, and Tower of Hanoi solvers"};
  app.name("sierpinski");
  app.require_subcommand(0, 1);
  CommandConfig cfg;
  std::string fixtures_dir;
  app.add_option("--check-fixtures", fixtures_dir, "Diff live output against the golden tables in DIR");

  const auto common = [&](CLI::App* sub, bool needs_m = true) {
    sub->add_option("--n", cfg.n, "Number of digits (discs)")->required()->check(CLI::Range(1, 64));
    if (needs_m) sub->add_option("--m", cfg.m, "Alphabet size (pegs)")->required()->check(CLI::Range(2, 1 << 20));
    sub->add_option("--out", cfg.out_path, "Write to FILE instead of standard output");
  };
  const auto formats = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  const auto twist = [&](CLI::App* sub) {
    sub->add_option("--c", cfg.c, "Single twist multiplier c, expanding to (1, c, ..., c)");
    sub->add_option("--c-list", cfg.c_list, "Per-level multipliers c_1,...,c_n")->delimiter(',');
  };

  auto* gen = app.add_subcommand("gen", "Build S(n,m), K_m^n or the single-twist graph");
  gen->add_option("kind", cfg.kind, "sierpinski | hamming | single-twist")
      ->required()
      ->check(CLI::IsMember({"sierpinski", "hamming", "single-twist"}));
  common(gen);
  formats(gen, {"text", "edgelist", "csv", "json", "dot"});

  auto* embed = app.add_subcommand("embed", "Tabulate an embedding S(n,m) -> K_m^n or print its matrix");
  embed->add_option("kind", cfg.kind, "phi | tau | epsilon")->required()->check(CLI::IsMember({"phi", "tau", "epsilon"}));
  common(embed);
  twist(embed);
  embed->add_flag("--matrix", cfg.matrix, "Print the lower-triangular coefficient matrix");
  embed->add_flag("--invert", cfg.invert, "Use the inverse map");
  formats(embed, {"text", "csv", "json"});

  auto* verify = app.add_subcommand("verify", "Check that a map embeds S(n,m) in K_m^n");
  verify->add_option("kind", cfg.kind, "phi | tau | epsilon | single-twist | identity")
      ->check(CLI::IsMember({"phi", "tau", "epsilon", "single-twist", "identity"}));
  verify->add_option("--n", cfg.n, "Number of digits")->check(CLI::Range(1, 64));
  verify->add_option("--m", cfg.m, "Alphabet size")->check(CLI::Range(2, 1 << 20));
  verify->add_option("--graph", cfg.graph_path, "Re-check a graph written by gen --format json");
  verify->add_option("--out", cfg.out_path, "Write to FILE instead of standard output");
  twist(verify);
  formats(verify, {"text", "json"});

  auto* hanoi = app.add_subcommand("hanoi", "Tower of Hanoi solutions (disc 1 is the LARGEST disc)");
  hanoi->require_subcommand(1);
  auto* classic = hanoi->add_subcommand("classic", "Move the tower from 0^n to 1^n");
  common(classic);
  formats(classic, {"text", "csv", "json"});
  auto* solve = hanoi->add_subcommand("solve", "Optimal play from any position to 0^n");
  solve->add_option("--from", cfg.position, "Start position as digits, largest disc first")->required();
  solve->add_option("--coords", cfg.coords, "Coordinates of --from: T (pegs) or S (Sierpinski labels)")
      ->check(CLI::IsMember({"S", "T"}));
  solve->add_option("--m", cfg.m, "Number of pegs (odd)")->check(CLI::Range(2, 1 << 20))->default_val(3);
  solve->add_option("--out", cfg.out_path, "Write to FILE instead of standard output");
  formats(solve, {"text", "csv", "json"});

  auto* diplomats = app.add_subcommand("diplomats", "Traveling Diplomats: T(n,5) from Praha (0) to Geneva (1)");
  common(diplomats, false);
  formats(diplomats, {"text", "csv", "json"});

  auto* gray = app.add_subcommand("gray", "Reflected Gray code as the image of the S(n,2) path");
  gray->add_option("--n", cfg.n, "Word length")->required()->check(CLI::Range(1, 23));
  gray->add_option("--format", cfg.gray_format, "bits | int | both")->check(CLI::IsMember({"bits", "int", "both"}));
  gray->add_option("--out", cfg.out_path, "Write to FILE instead of standard output");

  auto* density = app.add_subcommand("density", "Edge density of S(n,m) inside K_m^n");
  common(density);
  formats(density, {"text", "json"});

  auto* corners_search = app.add_subcommand("corners-search", "Search for constant-corner copies of S(2,m)");
  corners_search->add_option("--m", cfg.m, "Alphabet size")->required()->check(CLI::Range(2, 1 << 20));
  corners_search->add_option("--n", cfg.n, "Number of digits")->default_val(2)->check(CLI::Range(1, 64));
  corners_search->add_option("--out", cfg.out_path, "Write to FILE instead of standard output");
  formats(corners_search, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!fixtures_dir.empty()) return check_fixtures(fixtures_dir, out, err);
    std::ostringstream buffer;
    int code = kExitUsage;
    if (gen->parsed()) {
      code = cmd_gen(cfg, buffer);
    } else if (embed->parsed()) {
      code = cmd_embed(cfg, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(cfg, buffer);
    } else if (classic->parsed()) {
      code = cmd_hanoi_classic(cfg, buffer);
    } else if (solve->parsed()) {
      code = cmd_hanoi_solve(cfg, buffer);
    } else if (diplomats->parsed()) {
      code = cmd_diplomats(cfg, buffer);
    } else if (gray->parsed()) {
      code = cmd_gray(cfg, buffer);
    } else if (density->parsed()) {
      code = cmd_density(cfg, buffer);
    } else if (corners_search->parsed()) {
      code = cmd_corners(cfg, buffer);
    } else {
      err << app.help();
      return kExitUsage;
    }
    write_output(cfg, buffer.str(), out);
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int check_fixtures(const std::string& dir, std::ostream& out, std::ostream& err) {
  const std::filesystem::path root(dir);
  std::ifstream manifest_file(root / "manifest.json");
  if (!manifest_file) {
    err << "error: no manifest.json in " << dir << "\n";
    return kExitUsage;
  }
  const nlohmann::json manifest = nlohmann::json::parse(manifest_file);
  int failures = 0;
  for (const auto& entry : manifest.at("fixtures")) {
    const std::string name = entry.at("file").get<std::string>();
    const auto args = entry.at("args").get<std::vector<std::string>>();
    std::ifstream golden_file(root / name, std::ios::binary);
    if (!golden_file) {
      err << "error: missing fixture " << name << "\n";
      return kExitUsage;
    }
    const std::string golden{std::istreambuf_iterator<char>(golden_file), std::istreambuf_iterator<char>()};
    std::ostringstream live;
    std::ostringstream live_err;
    const int code = run(args, live, live_err);
    const bool match = code == kExitOk && live.str() == golden;
    out << (match ? "ok    " : "DIFF  ") << name << "\n";
    if (!match) {
      ++failures;
      err << "--- " << name << " (expected)\n" << golden << "+++ live output (exit " << code << ")\n"
          << live.str() << live_err.str();
    }
  }
  return failures == 0 ? kExitOk : kExitFail;
}

}  // namespace sierpinski::cli
