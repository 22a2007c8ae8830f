#pragma once

#include <cstddef>

namespace compnum {

// Size guards for generators and the exhaustive oracles. Passed explicitly;
// there is no global configuration.
struct Limits {
  std::size_t max_vertices = 100000;       // hamming_graph / box_graph / build_box
  std::size_t max_edges = 5000000;         // hamming_graph / box_graph
  std::size_t clique_enum_vertices = 64;   // maximal_cliques
  std::size_t theta_vertices = 16;         // theta_e / theta_v oracles
  std::size_t competition_vertices = 9;    // competition_number_bruteforce
};

}  // namespace compnum
