#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sierpinski/embeddings.hpp"
#include "sierpinski/graph.hpp"
#include "sierpinski/hanoi.hpp"
#include "sierpinski/linear_map.hpp"

namespace sierpinski {

/// One edge per line, endpoints as digit strings. Endpoints are separated
/// by a space when m <= 10 and by ", " otherwise (digits are then
/// themselves space separated).
std::string to_edge_list(const Graph& graph);
std::string to_csv(const Graph& graph);
std::string to_dot(const Graph& graph);

/// {"n":..., "m":..., "kind":..., "edges":[["00","01"], ...]}
nlohmann::json to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& doc);

/// {"m":..., "rows":[[...], ...]}; row i gives output coordinate i.
nlohmann::json to_json(const LinearMap& map);
LinearMap linear_map_from_json(const nlohmann::json& doc);

/// Two columns: source vertex, image vertex.
std::string to_csv(const VertexMap& map);
std::string to_text(const VertexMap& map, const std::string& image_header);

// Solution tables: step, S position, T position.
std::string table_text(const std::vector<TableRow>& rows, int n, int m);
std::string table_csv(const std::vector<TableRow>& rows);
nlohmann::json table_json(const std::vector<TableRow>& rows, int n, int m);

}  // namespace sierpinski
