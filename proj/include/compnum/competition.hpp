#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "compnum/cliques.hpp"
#include "compnum/graph.hpp"

namespace compnum {

// A clique together with the vertex whose in-neighbourhood it is.
struct PreyedClique {
  Clique clique;
  int prey = -1;
  bool operator==(const PreyedClique&) const = default;
};

// Certificate that C(digraph) = G plus `digraph.isolated_count()` isolated
// vertices: arcs are exactly { (u, prey) : u in clique } over the assignment,
// and every prey sits earlier in `ordering` than all members of its clique.
struct Realization {
  Digraph digraph;
  AcyclicOrdering ordering;
  std::vector<PreyedClique> assignment;

  bool operator==(const Realization&) const = default;
};

// Tuple vertices of D followed by z1..zk as named vertices; u ~ v iff they
// share an out-neighbour.
Graph competition_graph(const Digraph& d);

// In-neighbourhoods of size >= 2, ordered by prey index.
std::vector<PreyedClique> in_neighborhood_family(const Digraph& d);

struct Verdict {
  bool pass = false;
  std::string clause;   // acyclic | missing_edge | extra_edge | z_not_isolated
  std::string witness;  // single token, no spaces

  // "PASS" or "FAIL <clause> <witness>".
  std::string line() const;
};

// Checks C(D) = G u {z1..zk} on labelled vertex sets. Throws DomainError when
// D's tuple vertices differ from G's or D does not carry exactly k z-vertices.
Verdict verify_realization(const Digraph& d, const Graph& g, int k);

// Also checks that `r.ordering` is acyclic for `r.digraph` and that the
// assignment generates exactly the digraph's arcs.
Verdict verify_realization(const Realization& r, const Graph& g);

struct HallViolation {
  std::vector<int> cliques;  // indices into the family
  std::vector<int> preys;    // their joint eligible preys (fewer than cliques)
};

struct RealizeOptions {
  std::vector<int> excluded_preys;  // vertices of G that must not act as prey
};

// Places z1..zk ahead of `ordering` and matches each clique of `family` to a
// distinct prey strictly earlier than all of its members (augmenting paths,
// cliques with the fewest eligible preys first). Throws DomainError unless
// `family` is an edge clique cover of `g` and `ordering` is a permutation.
std::variant<Realization, HallViolation> realize_from_ecc(
    const Graph& g, const CliqueFamily& family, std::span<const int> ordering, int k,
    const RealizeOptions& options = {});

}  // namespace compnum
