#include "pcg/json_io.hpp"

#include "pcg/error.hpp"

namespace pcg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json pcr_to_json(const Pcr& p) {
  Json vertices = Json::array();
  for (const auto& l : p.tree.labels()) vertices.push_back(l);
  Json edges = Json::array();
  for (const auto& e : p.tree.edges()) {
    edges.push_back(Json::array({p.tree.label(e.u), p.tree.label(e.v), e.weight.str()}));
  }
  Json j;
  j["tree"] = Json{{"vertices", vertices}, {"edges", edges}};
  j["d_min"] = p.d_min.str();
  j["d_max"] = p.d_max.str();
  return j;
}

Pcr pcr_from_json(const Json& j) {
  const auto& tree = field(j, "tree");
  const auto& vertices = field(tree, "vertices");
  const auto& edges = field(tree, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw ParseError("tree vertices and edges must be arrays");
  Pcr p;
  try {
    for (const auto& v : vertices) p.tree.add_vertex(string_of(v, "vertex label"));
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 3) throw ParseError("tree edge must be [u, v, weight]");
      p.tree.add_edge(string_of(e[0], "edge endpoint"), string_of(e[1], "edge endpoint"),
                      Rational::parse(string_of(e[2], "edge weight")));
    }
    p.d_min = Rational::parse(string_of(field(j, "d_min"), "d_min"));
    p.d_max = Rational::parse(string_of(field(j, "d_max"), "d_max"));
    p.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid PCR: ") + e.what());
  }
  return p;
}

std::string dump_pcr(const Pcr& p) { return pcr_to_json(p).dump(2); }

Pcr parse_pcr(std::string_view text) { return pcr_from_json(parse_json(text)); }

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.label(u), g.label(v)}));
  Json j;
  j["vertices"] = g.labels();
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const Json& j) {
  const auto& vertices = field(j, "vertices");
  const auto& edges = field(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw ParseError("graph vertices and edges must be arrays");
  std::vector<Label> labels;
  for (const auto& v : vertices) labels.push_back(string_of(v, "vertex label"));
  std::vector<LabelPair> es;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph edge must be [u, v]");
    es.emplace_back(string_of(e[0], "edge endpoint"), string_of(e[1], "edge endpoint"));
  }
  try {
    return Graph(std::move(labels), es);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace pcg
