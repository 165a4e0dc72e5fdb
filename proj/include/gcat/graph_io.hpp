#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gcat/graph.hpp"

namespace gcat {

// Accepts either the JSON form
//   {"vertices": N, "edges": [{"src": i, "dst": j, "label": "optional"}, ...]}
// or the plain-text form: a "vertices N" header followed by "src dst [label]"
// lines. Blank lines and '#' comments are ignored in plain text.
// Edge ids are assigned in file order.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::filesystem::path& path);

// Byte-stable for a fixed edge order.
std::string serialize_json(const Graph& g);
std::string serialize_text(const Graph& g);

}  // namespace gcat
