#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "compnum/limits.hpp"

namespace compnum {

using Dims = std::vector<int>;
using Edge = std::pair<int, int>;  // undirected, first < second
using Arc = std::pair<int, int>;   // (source, target)

// A point of [q_1] x ... x [q_n]. Coordinates are 1-based.
class Vertex {
 public:
  Vertex(std::vector<int> coords, Dims dims);

  const std::vector<int>& coords() const { return coords_; }
  const Dims& dims() const { return dims_; }
  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int axis) const { return coords_[axis]; }

  // Drops coordinate `axis` (0-based) from both coords and dims.
  Vertex without_axis(int axis) const;

  // Comma-joined coordinates, e.g. "1,2,3".
  std::string label() const;

  bool operator==(const Vertex&) const = default;

 private:
  std::vector<int> coords_;
  Dims dims_;
};

int hamming_distance(const Vertex& x, const Vertex& y);

// Lexicographic order on tuples of the same dims.
std::strong_ordering lex_compare(const Vertex& x, const Vertex& y);

// Finite simple undirected graph. Tuple vertices come first, in strictly
// increasing lexicographic order; optional named vertices ("z1", ...) follow.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
        std::vector<std::string> named = {});

  // Generic graph on n vertices labelled (1), ..., (n).
  static Graph from_edge_list(int n, std::vector<Edge> edges);

  int order() const { return static_cast<int>(vertices_.size() + named_.size()); }
  int tuple_count() const { return static_cast<int>(vertices_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::string>& named() const { return named_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(int u, int v) const;
  std::string label(int v) const;

  // Present iff the graph is exactly K_{q_1} box ... box K_{q_n} over its
  // tuple vertices, with no named vertices.
  const std::optional<Dims>& product_dims() const { return product_dims_; }

  // Index of a tuple vertex; nullopt if absent.
  std::optional<int> index_of(const Vertex& v) const;

  // Neighbour set as a bitmask; requires order() <= 64.
  std::uint64_t neighbor_mask(int v) const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::string> named_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::optional<Dims> product_dims_;
};

Graph hamming_graph(int n, int q, const Limits& limits = {});
Graph box_graph(const Dims& dims, const Limits& limits = {});

// Induced subgraph on the given (sorted, distinct) vertex indices.
Graph induced_subgraph(const Graph& g, std::span<const int> members);

// Digraph over tuple vertices followed by isolated-prey labels z1..zk.
// Index r + i - 1 denotes z_i, where r is the number of tuple vertices.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<Vertex> vertices, int isolated, std::vector<Arc> arcs);

  int order() const { return real_count() + isolated_; }
  int real_count() const { return static_cast<int>(vertices_.size()); }
  int isolated_count() const { return isolated_; }
  bool is_isolated_vertex(int v) const { return v >= real_count(); }
  int z(int i) const { return real_count() + i - 1; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::span<const int> out_neighbors(int v) const { return out_[v]; }
  std::span<const int> in_neighbors(int v) const { return in_[v]; }
  std::string label(int v) const;

  bool operator==(const Digraph& other) const {
    return vertices_ == other.vertices_ && isolated_ == other.isolated_ &&
           arcs_ == other.arcs_;
  }

 private:
  std::vector<Vertex> vertices_;
  int isolated_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Every arc points from a later position to an earlier one.
struct AcyclicOrdering {
  std::vector<int> sequence;
  bool operator==(const AcyclicOrdering&) const = default;
};

struct DirectedCycle {
  std::vector<int> vertices;  // v0 -> v1 -> ... -> v0
};

bool is_acyclic_ordering(const Digraph& d, std::span<const int> sequence);

// Deterministic: among ready vertices the smallest index is placed first.
std::variant<AcyclicOrdering, DirectedCycle> topological_check(const Digraph& d);

}  // namespace compnum
