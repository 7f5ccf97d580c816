#include "sierpinski/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sierpinski {

namespace {

std::string endpoint_separator(int m) { return m <= 10 ? " " : ", "; }

std::string pad_left(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

std::string shape_label(char name, int n, int m) {
  return std::string(1, name) + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

}  // namespace

std::string to_edge_list(const Graph& graph) {
  const std::string sep = endpoint_separator(graph.shape().m);
  std::string out;
  for (const Edge& e : graph.edges()) {
    out += graph.vertex(e.a).str() + sep + graph.vertex(e.b).str() + "\n";
  }
  return out;
}

std::string to_csv(const Graph& graph) {
  std::string out = "u,v\n";
  for (const Edge& e : graph.edges()) out += graph.vertex(e.a).str() + "," + graph.vertex(e.b).str() + "\n";
  return out;
}

std::string to_dot(const Graph& graph) {
  const Shape shape = graph.shape();
  std::ostringstream out;
  out << "graph \"" << to_string(graph.kind()) << "_" << shape.n << "_" << shape.m << "\" {\n";
  for (std::uint64_t idx = 0; idx < graph.vertex_count(); ++idx) {
    const std::string label = graph.vertex(idx).str();
    out << "  \"" << label << "\" [label=\"" << label << "\"];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  \"" << graph.vertex(e.a).str() << "\" -- \"" << graph.vertex(e.b).str() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const Graph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : graph.edges()) edges.push_back({graph.vertex(e.a).str(), graph.vertex(e.b).str()});
  return {{"n", graph.shape().n}, {"m", graph.shape().m}, {"kind", to_string(graph.kind())}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& doc) {
  const Shape shape{doc.at("n").get<int>(), doc.at("m").get<int>()};
  shape.validate();
  const GraphKind kind = graph_kind_from_string(doc.value("kind", std::string("custom")));
  std::vector<Edge> edges;
  for (const auto& pair : doc.at("edges")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("edge must be a pair of vertices");
    const Vertex u = Vertex::parse(pair[0].get<std::string>(), shape.m);
    const Vertex v = Vertex::parse(pair[1].get<std::string>(), shape.m);
    if (u.n() != shape.n || v.n() != shape.n) throw std::invalid_argument("edge endpoint has wrong length");
    edges.push_back(make_edge(u.index(), v.index()));
  }
  return Graph(shape, kind, std::move(edges));
}

nlohmann::json to_json(const LinearMap& map) { return {{"m", map.m()}, {"rows", map.rows()}}; }

LinearMap linear_map_from_json(const nlohmann::json& doc) {
  return LinearMap(doc.at("m").get<int>(), doc.at("rows").get<std::vector<std::vector<std::int64_t>>>());
}

std::string to_csv(const VertexMap& map) {
  std::string out = "v,image\n";
  for (std::uint64_t idx = 0; idx < map.images().size(); ++idx) {
    out += Vertex::from_index(map.shape(), idx).str() + "," + Vertex::from_index(map.shape(), map[idx]).str() + "\n";
  }
  return out;
}

std::string to_text(const VertexMap& map, const std::string& image_header) {
  const std::size_t width = std::max<std::size_t>(Vertex::zero(map.shape().n, map.shape().m).str().size(), 1);
  const std::size_t image_width = std::max(width, image_header.size());
  std::string out = pad_left("v", width) + "  " + pad_left(image_header, image_width) + "\n";
  for (std::uint64_t idx = 0; idx < map.images().size(); ++idx) {
    out += pad_left(Vertex::from_index(map.shape(), idx).str(), width) + "  " +
           pad_left(Vertex::from_index(map.shape(), map[idx]).str(), image_width) + "\n";
  }
  return out;
}

std::string table_text(const std::vector<TableRow>& rows, int n, int m) {
  const std::string s_header = shape_label('S', n, m);
  const std::string t_header = shape_label('T', n, m);
  std::size_t step_width = 1;
  std::size_t s_width = s_header.size();
  std::size_t t_width = t_header.size();
  for (const TableRow& row : rows) {
    step_width = std::max(step_width, row.step.str().size());
    s_width = std::max(s_width, row.s.str().size());
    t_width = std::max(t_width, row.t.str().size());
  }
  std::string out = pad_left("l", step_width) + "  " + pad_left(s_header, s_width) + "  " +
                    pad_left(t_header, t_width) + "\n";
  for (const TableRow& row : rows) {
    out += pad_left(row.step.str(), step_width) + "  " + pad_left(row.s.str(), s_width) + "  " +
           pad_left(row.t.str(), t_width) + "\n";
  }
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "l,S,T\n";
  for (const TableRow& row : rows) out += row.step.str() + "," + row.s.str() + "," + row.t.str() + "\n";
  return out;
}

nlohmann::json table_json(const std::vector<TableRow>& rows, int n, int m) {
  nlohmann::json list = nlohmann::json::array();
  for (const TableRow& row : rows) list.push_back({{"l", row.step.convert_to<std::uint64_t>()}, {"S", row.s.str()}, {"T", row.t.str()}});
  return {{"n", n}, {"m", m}, {"rows", list}};
}

}  // namespace sierpinski
