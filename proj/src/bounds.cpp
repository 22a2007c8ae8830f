#include "compnum/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "compnum/errors.hpp"

namespace compnum {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

struct StateKey {
  Mask placed;
  Mask covered;
  Mask forced;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& s) const {
    std::uint64_t h = s.placed * 0x9E3779B97F4A7C15ull;
    h ^= s.covered + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h ^= s.forced + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Exhaustive search for an acyclic digraph D with C(D) = G u I_k.
//
// Real vertices are placed one at a time in ordering position order. When v
// is placed it becomes a prey whose in-neighbourhood is a clique among the
// vertices still unplaced; taking a maximal clique of the unplaced subgraph
// loses nothing. Edges at v that are still uncovered when v is placed can only
// be covered by the k isolated preys, so they are moved to `forced`, and the
// branch dies once `forced` needs more than k cliques.
class CompetitionSearch {
 public:
  explicit CompetitionSearch(const Graph& g) : g_(g), m_(g.order()) {
    const auto& edges = g.edges();
    incident_.assign(m_, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      incident_[edges[e].first] |= bit(static_cast<int>(e));
      incident_[edges[e].second] |= bit(static_cast<int>(e));
    }
    all_vertices_ = m_ == 64 ? ~Mask{0} : bit(m_) - 1;
    all_edges_ = edges.size() == 64 ? ~Mask{0} : bit(static_cast<int>(edges.size())) - 1;
    for (const Clique& c : maximal_cliques(g)) {
      if (c.size() < 2) continue;
      global_.push_back({vertex_mask(c), edge_mask(c)});
    }
    placement_order_.resize(m_);
    std::iota(placement_order_.begin(), placement_order_.end(), 0);
    std::stable_sort(placement_order_.begin(), placement_order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool feasible(int k) {
    k_ = k;
    failed_.clear();
    steps_.clear();
    return search(0, 0, 0);
  }

  // Valid after feasible() returned true.
  Realization witness() {
    std::vector<int> ordering;
    CliqueFamily family;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
      ordering.push_back(it->vertex);
      if (it->clique) family.push_back(clique_of(it->clique));
    }
    for (Mask members : cover_witness(final_forced_)) family.push_back(clique_of(members));
    auto result = realize_from_ecc(g_, family, ordering, k_);
    if (auto* r = std::get_if<Realization>(&result)) return std::move(*r);
    throw std::logic_error("competition search: witness failed to realize");
  }

 private:
  struct CliqueMasks {
    Mask vertices;
    Mask edges;
  };
  struct Step {
    int vertex;
    Mask clique;
  };

  Mask vertex_mask(const Clique& c) const {
    Mask m = 0;
    for (int v : c.members) m |= bit(v);
    return m;
  }

  Mask edge_mask(const Clique& c) const {
    const Mask members = vertex_mask(c);
    Mask m = 0;
    const auto& edges = g_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((members & bit(edges[e].first)) && (members & bit(edges[e].second))) {
        m |= bit(static_cast<int>(e));
      }
    }
    return m;
  }

  Clique clique_of(Mask members) const {
    Clique c;
    for (; members; members &= members - 1) c.members.push_back(std::countr_zero(members));
    return c;
  }

  // Maximal cliques (>= 2 vertices) of the subgraph induced by `remaining`.
  const std::vector<CliqueMasks>& local_cliques(Mask remaining) {
    auto [it, inserted] = local_.try_emplace(remaining);
    auto& slot = it->second;
    if (!inserted) return slot;
    std::vector<int> members;
    for (Mask r = remaining; r; r &= r - 1) members.push_back(std::countr_zero(r));
    const Graph sub = induced_subgraph(g_, members);
    for (const Clique& c : maximal_cliques(sub)) {
      if (c.size() < 2) continue;
      Clique lifted;
      for (int v : c.members) lifted.members.push_back(members[v]);
      slot.push_back({vertex_mask(lifted), edge_mask(lifted)});
    }
    return slot;
  }

  // Minimum number of cliques of G covering `edges`.
  int min_cover(Mask edges) {
    if (!edges) return 0;
    if (auto it = cover_memo_.find(edges); it != cover_memo_.end()) return it->second;
    const Mask lowest = edges & (~edges + 1);
    int best = std::numeric_limits<int>::max();
    for (const CliqueMasks& c : global_) {
      if (c.edges & lowest) best = std::min(best, 1 + min_cover(edges & ~c.edges));
    }
    cover_memo_.emplace(edges, best);
    return best;
  }

  std::vector<Mask> cover_witness(Mask edges) {
    std::vector<Mask> out;
    while (edges) {
      const Mask lowest = edges & (~edges + 1);
      const int target = min_cover(edges);
      for (const CliqueMasks& c : global_) {
        if ((c.edges & lowest) && 1 + min_cover(edges & ~c.edges) == target) {
          out.push_back(c.vertices);
          edges &= ~c.edges;
          break;
        }
      }
    }
    return out;
  }

  bool search(Mask placed, Mask covered, Mask forced) {
    if (placed == all_vertices_) {
      if (min_cover(forced) > k_) return false;
      final_forced_ = forced;
      return true;
    }
    Mask open_region = all_edges_;
    for (Mask p = placed; p; p &= p - 1) open_region &= ~incident_[std::countr_zero(p)];
    const StateKey key{placed, covered & open_region, forced};
    if (failed_.contains(key)) return false;

    for (int v : placement_order_) {
      if (placed & bit(v)) continue;
      const Mask next_forced = forced | (incident_[v] & ~covered);
      if (min_cover(next_forced) > k_) continue;
      const Mask next_placed = placed | bit(v);
      const Mask remaining = all_vertices_ & ~next_placed;

      std::vector<const CliqueMasks*> options;
      for (const CliqueMasks& c : local_cliques(remaining)) {
        if (c.edges & ~covered) options.push_back(&c);
      }
      std::stable_sort(options.begin(), options.end(), [&](auto* a, auto* b) {
        return std::popcount(a->edges & ~covered) > std::popcount(b->edges & ~covered);
      });
      if (options.empty()) {
        if (search(next_placed, covered, next_forced)) {
          steps_.push_back({v, 0});
          return true;
        }
        continue;
      }
      for (const CliqueMasks* c : options) {
        if (search(next_placed, covered | c->edges, next_forced)) {
          steps_.push_back({v, c->vertices});
          return true;
        }
      }
    }
    failed_.insert(key);
    return false;
  }

  const Graph& g_;
  int m_;
  int k_ = 0;
  Mask all_vertices_ = 0;
  Mask all_edges_ = 0;
  Mask final_forced_ = 0;
  std::vector<Mask> incident_;
  std::vector<CliqueMasks> global_;
  std::vector<int> placement_order_;
  std::unordered_map<Mask, std::vector<CliqueMasks>> local_;
  std::unordered_map<Mask, int> cover_memo_;
  std::unordered_set<StateKey, StateHash> failed_;
  std::vector<Step> steps_;  // innermost first
};

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == g.order();
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    for (int w : g.neighbors(u)) {
      if (w != v && g.adjacent(v, w)) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::int64_t> known_competition_number(int n, int q) {
  if (n < 1 || q < 1) return std::nullopt;
  if (q == 1) return 0;
  if (q == 2) {
    // (n-2)2^(n-1)+2 fits in int64 up to n = 58.
    if (n > 62) return std::nullopt;
    std::int64_t product = 0;
    if (__builtin_mul_overflow(std::int64_t{n - 2}, std::int64_t{1} << (n - 1), &product)) {
      return std::nullopt;
    }
    return product + 2;
  }
  if (n == 1) return 1;
  if (n == 2) return 2;
  if (n == 3) return 6;
  return std::nullopt;
}

int opsut_lower_bound(const Graph& g, const Limits& limits) {
  if (g.order() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) {
    best = std::min(best, theta_v_bruteforce(neighborhood_subgraph(g, v, false), limits));
  }
  return best;
}

int count_intersecting_cliques(const CliqueFamily& family, std::span<const int> vertices) {
  return static_cast<int>(std::count_if(family.begin(), family.end(), [&](const Clique& c) {
    return std::any_of(vertices.begin(), vertices.end(), [&](int v) { return c.contains(v); });
  }));
}

std::string CountingVerdict::line() const {
  if (pass) return "PASS";
  return "FAIL counting i=" + std::to_string(step) + ",count=" + std::to_string(count) +
         ",bound=" + std::to_string(bound);
}

CountingVerdict check_counting_inequality(const Realization& r, const CliqueFamily& family, int k) {
  const Digraph& d = r.digraph;
  const auto& seq = r.ordering.sequence;
  const int isolated = d.isolated_count();
  if (static_cast<int>(seq.size()) != d.order()) {
    throw DomainError("ordering does not list every vertex once");
  }
  for (int i = 0; i < d.order(); ++i) {
    if ((i < isolated) != d.is_isolated_vertex(seq[i])) {
      throw DomainError("ordering must list z1..zk before all real vertices");
    }
  }

  std::vector<std::vector<int>> containing(d.real_count());
  for (std::size_t c = 0; c < family.size(); ++c) {
    for (int v : family[c].members) {
      if (v < 0 || v >= d.real_count()) throw DomainError("family member out of range");
      containing[v].push_back(static_cast<int>(c));
    }
  }
  std::vector<char> met(family.size(), 0);
  int count = 0;
  for (int i = 1; i <= d.real_count(); ++i) {
    for (int c : containing[seq[isolated + i - 1]]) {
      if (!met[c]) {
        met[c] = 1;
        ++count;
      }
    }
    if (count > k + i - 1) return CountingVerdict{false, i, count, k + i - 1};
  }
  return CountingVerdict{};
}

int lower_bound_3n_minus_4(int n, int q) {
  if (n < 3 || q < 3) throw DomainError("3n-4 bound requires n >= 3 and q >= 3");
  return 3 * n - 4;
}

std::string_view to_string(FourVertexType type) {
  switch (type) {
    case FourVertexType::kK4: return "K4";
    case FourVertexType::kK112: return "K1,1,2";
    case FourVertexType::kK4MinusP3: return "K4-E(P3)";
    case FourVertexType::kC4: return "C4";
    case FourVertexType::kP4: return "P4";
    case FourVertexType::kK13: return "K1,3";
    case FourVertexType::kK3PlusI1: return "K3+I1";
    case FourVertexType::kK2PlusK2: return "K2+K2";
    case FourVertexType::kP3PlusI1: return "P3+I1";
    case FourVertexType::kK2PlusI2: return "K2+I2";
    case FourVertexType::kI4: return "I4";
  }
  return "?";
}

FourVertexType induced_type_on_4(const Graph& g, std::span<const int> vertices) {
  if (vertices.size() != 4) throw DomainError("induced_type_on_4 needs exactly four vertices");
  for (std::size_t i = 0; i < 4; ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) throw DomainError("vertex out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j]) throw DomainError("vertices must be distinct");
    }
  }
  std::array<int, 4> degree{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        ++degree[i];
        ++degree[j];
      }
    }
  }
  std::sort(degree.begin(), degree.end());
  // The sorted degree sequence separates all eleven graphs on four vertices.
  using D = std::array<int, 4>;
  if (degree == D{3, 3, 3, 3}) return FourVertexType::kK4;
  if (degree == D{2, 2, 3, 3}) return FourVertexType::kK112;
  if (degree == D{1, 2, 2, 3}) return FourVertexType::kK4MinusP3;
  if (degree == D{2, 2, 2, 2}) return FourVertexType::kC4;
  if (degree == D{1, 1, 2, 2}) return FourVertexType::kP4;
  if (degree == D{1, 1, 1, 3}) return FourVertexType::kK13;
  if (degree == D{0, 2, 2, 2}) return FourVertexType::kK3PlusI1;
  if (degree == D{1, 1, 1, 1}) return FourVertexType::kK2PlusK2;
  if (degree == D{0, 1, 1, 2}) return FourVertexType::kP3PlusI1;
  if (degree == D{0, 0, 1, 1}) return FourVertexType::kK2PlusI2;
  return FourVertexType::kI4;
}

CompetitionNumberResult competition_number_bruteforce(const Graph& g, std::optional<int> k_max,
                                                      const Limits& limits) {
  if (!g.named().empty()) throw DomainError("graph must not carry named vertices");
  if (static_cast<std::size_t>(g.order()) > limits.competition_vertices) {
    throw ResourceError("competition_number_bruteforce: graph has " + std::to_string(g.order()) +
                        " vertices, limit is " + std::to_string(limits.competition_vertices));
  }
  if (g.order() > 20 || g.edge_count() > 64) {
    throw ResourceError("competition_number_bruteforce supports at most 20 vertices and 64 edges");
  }
  const int cap = k_max.value_or(static_cast<int>(g.edge_count()));
  if (cap < 0) throw DomainError("k_max must be non-negative");

  CompetitionSearch search(g);
  for (int k = 0; k <= cap; ++k) {
    if (search.feasible(k)) return {k, search.witness()};
  }
  return {};
}

int triangle_free_formula(const Graph& g) {
  if (g.order() < 2) throw DomainError("triangle-free formula needs at least two vertices");
  if (!connected(g)) throw DomainError("triangle-free formula needs a connected graph");
  if (has_triangle(g)) throw DomainError("triangle-free formula needs a triangle-free graph");
  return static_cast<int>(g.edge_count()) - g.order() + 2;
}

}  // namespace compnum
