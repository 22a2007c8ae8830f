#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "compnum/cliques.hpp"
#include "compnum/competition.hpp"
#include "compnum/graph.hpp"
#include "compnum/limits.hpp"

namespace compnum {

// Closed-form k(H(n,q)) where a proven value exists:
//   q = 1: 0;  q = 2: (n-2)2^(n-1)+2;  n = 1: 1;  n = 2: 2;  n = 3: 6.
// nullopt otherwise (n >= 4 with q >= 3 is open) or when the value overflows int64.
std::optional<std::int64_t> known_competition_number(int n, int q);

// min over v of theta_V(N(v)); a lower bound on k(G).
int opsut_lower_bound(const Graph& g, const Limits& limits = {});

// Number of family members meeting `vertices`.
int count_intersecting_cliques(const CliqueFamily& family, std::span<const int> vertices);

struct CountingVerdict {
  bool pass = true;
  int step = 0;    // first i (1-based) with count > k + i - 1
  int count = 0;
  int bound = 0;

  std::string line() const;
};

// For the ordering z_1..z_k, v_1..v_m of `r`, checks that the members of
// `family` meeting {v_1..v_i} number at most k + i - 1 for every i.
// Throws DomainError if the ordering does not start with all isolated vertices.
CountingVerdict check_counting_inequality(const Realization& r, const CliqueFamily& family, int k);

// 3n - 4, valid for n >= 3 and q >= 3.
int lower_bound_3n_minus_4(int n, int q);

// The eleven graphs on four vertices.
enum class FourVertexType {
  kK4,          // (i)
  kK112,        // (ii)
  kK4MinusP3,   // (iii) triangle with a pendant edge
  kC4,          // (iv)
  kP4,          // (v)
  kK13,         // (vi)
  kK3PlusI1,    // (vii)
  kK2PlusK2,    // (viii)
  kP3PlusI1,    // (ix)
  kK2PlusI2,    // (x)
  kI4,          // (xi)
};

std::string_view to_string(FourVertexType type);

FourVertexType induced_type_on_4(const Graph& g, std::span<const int> vertices);

struct CompetitionNumberResult {
  std::optional<int> k;               // nullopt: exceeds k_max
  std::optional<Realization> witness; // realization of G with k isolated preys
};

// Exact k(G) by exhaustive search over orderings with per-prey clique choice.
// k_max defaults to |E(G)|.
CompetitionNumberResult competition_number_bruteforce(const Graph& g,
                                                      std::optional<int> k_max = std::nullopt,
                                                      const Limits& limits = {});

// |E| - |V| + 2 for connected triangle-free graphs on >= 2 vertices.
int triangle_free_formula(const Graph& g);

}  // namespace compnum
