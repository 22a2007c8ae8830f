#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "compnum/graph.hpp"
#include "compnum/limits.hpp"

namespace compnum {

// Sorted, distinct vertex indices into some host graph.
struct Clique {
  std::vector<int> members;

  std::size_t size() const { return members.size(); }
  bool contains(int v) const;
  auto operator<=>(const Clique&) const = default;
};

using CliqueFamily = std::vector<Clique>;

bool is_clique(const Graph& g, std::span<const int> members);

// Sorts `members`; throws DomainError unless they form a clique of `g`.
Clique make_clique(const Graph& g, std::vector<int> members);

// The line through `rest` along `axis` (1-based): every vertex that agrees
// with `rest` once coordinate `axis` is deleted.
Clique axis_clique(const Graph& host, int axis, const Vertex& rest);

// All axis lines of a product host, ordered by axis then by `rest`.
CliqueFamily canonical_family(const Graph& host);

// The one axis line containing `k` (|k| >= 2) of a product host.
Clique unique_containing_maximal_clique(const Graph& host, const Clique& k);

// Inclusion-maximal cliques (pivoting Bron-Kerbosch), sorted lexicographically.
CliqueFamily maximal_cliques(const Graph& g, const Limits& limits = {});

struct CoverCheck {
  bool covered = false;
  std::optional<Edge> uncovered;  // first uncovered edge when !covered
};

// Throws DomainError if some member is not a clique of `g`.
CoverCheck check_edge_clique_cover(const Graph& g, const CliqueFamily& family);

struct CoverResult {
  int size = 0;
  CliqueFamily witness;
};

// Exact minimum edge clique cover by branch and bound.
CoverResult min_edge_clique_cover(const Graph& g, const Limits& limits = {});
// Exact minimum vertex clique cover by branch and bound.
CoverResult min_vertex_clique_cover(const Graph& g, const Limits& limits = {});

inline int theta_e_bruteforce(const Graph& g, const Limits& limits = {}) {
  return min_edge_clique_cover(g, limits).size;
}
inline int theta_v_bruteforce(const Graph& g, const Limits& limits = {}) {
  return min_vertex_clique_cover(g, limits).size;
}

// Induced subgraph on N(v), or N[v] when `closed`.
Graph neighborhood_subgraph(const Graph& g, int v, bool closed);

}  // namespace compnum
