#include "compnum/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "compnum/errors.hpp"

namespace compnum::io {

namespace {

Json dims_of(const std::vector<Vertex>& vertices) {
  return vertices.empty() ? Json::array() : Json(vertices.front().dims());
}

void put_vertices(Json& j, const std::vector<Vertex>& vertices) {
  j["dims"] = dims_of(vertices);
  Json list = Json::array();
  for (const Vertex& v : vertices) list.push_back(v.coords());
  j["vertices"] = std::move(list);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

void expect_kind(const Json& j, std::string_view kind) {
  const Json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw ParseError("expected kind \"" + std::string(kind) + "\"");
  }
}

// Wraps nlohmann type errors and domain violations in ParseError.
template <typename F>
auto decoding(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<Vertex> read_vertices(const Json& j) {
  const Dims dims = field(j, "dims").get<Dims>();
  std::vector<Vertex> vertices;
  for (const Json& v : field(j, "vertices")) {
    vertices.emplace_back(v.get<std::vector<int>>(), dims);
  }
  return vertices;
}

std::vector<std::pair<int, int>> read_pairs(const Json& list) {
  std::vector<std::pair<int, int>> out;
  for (const Json& p : list) {
    if (!p.is_array() || p.size() != 2) throw ParseError("expected an index pair");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

int read_isolated(const Json& j) {
  const Json& list = field(j, "isolated");
  int count = 0;
  for (const Json& name : list) {
    if (name.get<std::string>() != "z" + std::to_string(++count)) {
      throw ParseError("isolated vertices must be named z1, z2, ... in order");
    }
  }
  return count;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["kind"] = "graph";
  put_vertices(j, g.vertices());
  if (!g.named().empty()) j["isolated"] = g.named();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const Digraph& d) {
  Json j;
  j["kind"] = "digraph";
  put_vertices(j, d.vertices());
  Json isolated = Json::array();
  for (int i = 0; i < d.isolated_count(); ++i) isolated.push_back(d.label(d.z(i + 1)));
  j["isolated"] = std::move(isolated);
  Json arcs = Json::array();
  for (auto [s, t] : d.arcs()) arcs.push_back({s, t});
  j["arcs"] = std::move(arcs);
  return j;
}

Json to_json(const CliqueFamily& family) {
  Json j;
  j["kind"] = "clique_family";
  Json cliques = Json::array();
  for (const Clique& c : family) cliques.push_back(c.members);
  j["cliques"] = std::move(cliques);
  return j;
}

Json to_json(const Realization& r) {
  Json j = to_json(r.digraph);
  j["kind"] = "realization";
  j["ordering"] = r.ordering.sequence;
  Json assignment = Json::array();
  for (const PreyedClique& pc : r.assignment) {
    Json entry;
    entry["clique"] = pc.clique.members;
    entry["prey"] = pc.prey;
    assignment.push_back(std::move(entry));
  }
  j["assignment"] = std::move(assignment);
  return j;
}

Graph graph_from_json(const Json& j) {
  return decoding("graph", [&] {
    expect_kind(j, "graph");
    std::vector<std::string> named;
    if (j.contains("isolated")) named = j.at("isolated").get<std::vector<std::string>>();
    return Graph(read_vertices(j), read_pairs(field(j, "edges")), std::move(named));
  });
}

Digraph digraph_from_json(const Json& j) {
  return decoding("digraph", [&] {
    const Json& kind = field(j, "kind");
    if (kind != "digraph" && kind != "realization") throw ParseError("expected kind \"digraph\"");
    return Digraph(read_vertices(j), read_isolated(j), read_pairs(field(j, "arcs")));
  });
}

CliqueFamily family_from_json(const Json& j) {
  return decoding("clique_family", [&] {
    expect_kind(j, "clique_family");
    CliqueFamily family;
    for (const Json& c : field(j, "cliques")) {
      Clique clique{c.get<std::vector<int>>()};
      if (!std::is_sorted(clique.members.begin(), clique.members.end())) {
        throw ParseError("clique indices must be sorted");
      }
      family.push_back(std::move(clique));
    }
    return family;
  });
}

Realization realization_from_json(const Json& j) {
  return decoding("realization", [&] {
    expect_kind(j, "realization");
    Realization r;
    r.digraph = digraph_from_json(j);
    r.ordering.sequence = field(j, "ordering").get<std::vector<int>>();
    for (const Json& entry : field(j, "assignment")) {
      PreyedClique pc;
      pc.clique.members = field(entry, "clique").get<std::vector<int>>();
      pc.prey = field(entry, "prey").get<int>();
      r.assignment.push_back(std::move(pc));
    }
    return r;
  });
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << quoted(g.label(v)) << ";\n";
  for (auto [u, v] : g.edges()) {
    out << "  " << quoted(g.label(u)) << " -- " << quoted(g.label(v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (int v = 0; v < d.order(); ++v) out << "  " << quoted(d.label(v)) << ";\n";
  for (auto [s, t] : d.arcs()) {
    out << "  " << quoted(d.label(s)) << " -> " << quoted(d.label(t)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace compnum::io
