#include "gcat/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcat/error.hpp"

namespace gcat {
namespace {

using ordered_json = nlohmann::ordered_json;

Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw Error(ErrorCode::parse, "graph JSON needs \"vertices\" and \"edges\"");
  }
  if (!doc["vertices"].is_number_integer() || !doc["edges"].is_array()) {
    throw Error(ErrorCode::parse, "\"vertices\" must be an integer and \"edges\" an array");
  }
  std::vector<EdgeSpec> edges;
  std::size_t index = 0;
  for (const auto& item : doc["edges"]) {
    if (!item.is_object() || !item.contains("src") || !item.contains("dst") ||
        !item["src"].is_number_integer() || !item["dst"].is_number_integer()) {
      throw Error(ErrorCode::parse,
                  "edge " + std::to_string(index) + " needs integer \"src\" and \"dst\"");
    }
    EdgeSpec spec{item["src"].get<int>(), item["dst"].get<int>(), std::nullopt};
    if (item.contains("label")) {
      if (!item["label"].is_string()) {
        throw Error(ErrorCode::parse, "edge " + std::to_string(index) + " label must be a string");
      }
      spec.label = item["label"].get<std::string>();
    }
    edges.push_back(std::move(spec));
    ++index;
  }
  return Graph::create(doc["vertices"].get<int>(), std::move(edges));
}

Graph parse_plain(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<int> vertices;
  std::vector<EdgeSpec> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + what);
    };
    if (!vertices) {
      int n = 0;
      if (first != "vertices" || !(fields >> n)) fail("expected header \"vertices N\"");
      vertices = n;
      continue;
    }
    EdgeSpec spec;
    try {
      std::size_t used = 0;
      spec.source = std::stoi(first, &used);
      if (used != first.size()) fail("malformed source vertex");
    } catch (const std::logic_error&) {
      fail("malformed source vertex");
    }
    std::string dst;
    if (!(fields >> dst)) fail("missing target vertex");
    try {
      std::size_t used = 0;
      spec.target = std::stoi(dst, &used);
      if (used != dst.size()) fail("malformed target vertex");
    } catch (const std::logic_error&) {
      fail("malformed target vertex");
    }
    std::string label;
    if (fields >> label) spec.label = label;
    std::string extra;
    if (fields >> extra) fail("unexpected trailing field");
    edges.push_back(std::move(spec));
  }
  if (!vertices) throw Error(ErrorCode::parse, "missing \"vertices N\" header");
  return Graph::create(*vertices, std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_plain(text);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::file_not_found, "cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_json(const Graph& g) {
  ordered_json doc;
  doc["vertices"] = g.num_vertices();
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) {
    ordered_json item;
    item["src"] = e.source;
    item["dst"] = e.target;
    if (e.label) item["label"] = *e.label;
    doc["edges"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string serialize_text(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.num_vertices() << "\n";
  for (const auto& e : g.edges()) {
    out << e.source << ' ' << e.target;
    if (e.label) out << ' ' << *e.label;
    out << "\n";
  }
  return out.str();
}

}  // namespace gcat
