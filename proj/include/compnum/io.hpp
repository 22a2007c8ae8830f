#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "compnum/cliques.hpp"
#include "compnum/competition.hpp"
#include "compnum/graph.hpp"

namespace compnum::io {

using Json = nlohmann::ordered_json;

// {"kind":"graph","dims":[..],"vertices":[[..],..],"edges":[[i,j],..]}
// plus "isolated":[names] when the graph has named vertices.
Json to_json(const Graph& g);
// {"kind":"digraph","dims","vertices","isolated":["z1",..],"arcs":[[src,dst],..]}
Json to_json(const Digraph& d);
// {"kind":"clique_family","cliques":[[i,..],..]}
Json to_json(const CliqueFamily& family);
// Digraph fields plus "ordering":[..] and "assignment":[{"clique":[..],"prey":i},..]
Json to_json(const Realization& r);

// All parsers throw ParseError on malformed or inconsistent documents.
Graph graph_from_json(const Json& j);
Digraph digraph_from_json(const Json& j);
CliqueFamily family_from_json(const Json& j);
Realization realization_from_json(const Json& j);

Json parse(std::string_view text);
Json read_file(const std::string& path);

// Compact, newline terminated.
std::string dump(const Json& j);

std::string to_dot(const Graph& g);
std::string to_dot(const Digraph& d);

}  // namespace compnum::io
