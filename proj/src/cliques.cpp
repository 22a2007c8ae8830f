#include "compnum/cliques.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "compnum/errors.hpp"

namespace compnum {

namespace {

constexpr std::size_t kMaskVertices = 64;
constexpr std::size_t kMaxCoverEdges = kMaskVertices * (kMaskVertices - 1) / 2;

using Mask = std::uint64_t;
using EdgeBits = std::bitset<kMaxCoverEdges>;

const Dims& require_product(const Graph& host) {
  if (!host.product_dims()) {
    throw DomainError("host is not a Hamming/box graph (no product dims)");
  }
  return *host.product_dims();
}

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> stride(dims.size(), 1);
  for (int a = static_cast<int>(dims.size()) - 2; a >= 0; --a) {
    stride[a] = stride[a + 1] * dims[a + 1];
  }
  return stride;
}

// `rest` holds the n-1 coordinates off `axis` (0-based).
Clique axis_line(const Dims& dims, int axis, const std::vector<int>& rest) {
  const auto stride = strides_of(dims);
  std::size_t base = 0;
  for (int a = 0, r = 0; a < static_cast<int>(dims.size()); ++a) {
    if (a == axis) continue;
    base += static_cast<std::size_t>(rest[r++] - 1) * stride[a];
  }
  Clique line;
  line.members.reserve(dims[axis]);
  for (int value = 0; value < dims[axis]; ++value) {
    line.members.push_back(static_cast<int>(base + value * stride[axis]));
  }
  return line;
}

Mask bit(int v) { return Mask{1} << v; }

Mask mask_of(const Clique& c) {
  Mask m = 0;
  for (int v : c.members) m |= bit(v);
  return m;
}

void require_mask_size(const Graph& g, std::size_t limit, const char* what) {
  const std::size_t cap = std::min(limit, kMaskVertices);
  if (static_cast<std::size_t>(g.order()) > cap) {
    throw ResourceError(std::string(what) + ": graph has " + std::to_string(g.order()) +
                        " vertices, limit is " + std::to_string(cap));
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nbr(g.order());
  for (int v = 0; v < g.order(); ++v) nbr[v] = g.neighbor_mask(v);
  return nbr;
}

void bron_kerbosch(const std::vector<Mask>& nbr, Mask r, Mask p, Mask x,
                   std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (Mask px = p | x; px; px &= px - 1) {
    const int u = std::countr_zero(px);
    const int score = std::popcount(p & nbr[u]);
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (Mask candidates = p & ~nbr[pivot]; candidates; candidates &= candidates - 1) {
    const int v = std::countr_zero(candidates);
    bron_kerbosch(nbr, r | bit(v), p & nbr[v], x & nbr[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

Clique clique_from_mask(Mask m) {
  Clique c;
  for (; m; m &= m - 1) c.members.push_back(std::countr_zero(m));
  return c;
}

}  // namespace

bool Clique::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool is_clique(const Graph& g, std::span<const int> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[j] < 0 || members[j] >= g.order()) return false;
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

Clique make_clique(const Graph& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw DomainError("clique has a repeated member");
  }
  if (!is_clique(g, members)) throw DomainError("vertex set is not a clique");
  return Clique{std::move(members)};
}

Clique axis_clique(const Graph& host, int axis, const Vertex& rest) {
  const Dims& dims = require_product(host);
  const int n = static_cast<int>(dims.size());
  if (axis < 1 || axis > n) throw DomainError("axis out of range");
  if (n == 1) throw DomainError("a one-axis host has a single line; use canonical_family");
  Dims reduced = dims;
  reduced.erase(reduced.begin() + (axis - 1));
  if (rest.dims() != reduced) throw DomainError("rest tuple does not match the remaining dims");
  return axis_line(dims, axis - 1, rest.coords());
}

CliqueFamily canonical_family(const Graph& host) {
  const Dims& dims = require_product(host);
  const int n = static_cast<int>(dims.size());
  CliqueFamily family;
  if (n == 1) {
    family.push_back(axis_line(dims, 0, {}));
    return family;
  }
  for (int axis = 0; axis < n; ++axis) {
    Dims reduced = dims;
    reduced.erase(reduced.begin() + axis);
    std::vector<int> rest(n - 1, 1);
    // Odometer over the reduced box in lexicographic order.
    while (true) {
      family.push_back(axis_line(dims, axis, rest));
      int a = n - 2;
      while (a >= 0 && rest[a] == reduced[a]) rest[a--] = 1;
      if (a < 0) break;
      ++rest[a];
    }
  }
  return family;
}

Clique unique_containing_maximal_clique(const Graph& host, const Clique& k) {
  const Dims& dims = require_product(host);
  if (k.size() < 2) throw DomainError("clique must have at least two members");
  if (!is_clique(host, k.members)) throw DomainError("vertex set is not a clique");
  const Vertex& x = host.vertices()[k.members[0]];
  const Vertex& y = host.vertices()[k.members[1]];
  int axis = 0;
  while (x[axis] == y[axis]) ++axis;
  std::vector<int> rest = x.coords();
  rest.erase(rest.begin() + axis);
  return axis_line(dims, axis, rest);
}

CliqueFamily maximal_cliques(const Graph& g, const Limits& limits) {
  require_mask_size(g, limits.clique_enum_vertices, "maximal_cliques");
  CliqueFamily family;
  if (g.order() == 0) return family;
  const auto nbr = neighbor_masks(g);
  const Mask all = g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1;
  std::vector<Mask> found;
  bron_kerbosch(nbr, 0, all, 0, found);
  family.reserve(found.size());
  for (Mask m : found) family.push_back(clique_from_mask(m));
  std::sort(family.begin(), family.end(), [](const Clique& a, const Clique& b) {
    return a.members < b.members;
  });
  return family;
}

CoverCheck check_edge_clique_cover(const Graph& g, const CliqueFamily& family) {
  auto key = [](int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  };
  std::unordered_set<std::uint64_t> covered;
  for (const Clique& c : family) {
    if (!is_clique(g, c.members)) throw DomainError("family member is not a clique");
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      for (std::size_t j = i + 1; j < c.members.size(); ++j) {
        const int u = std::min(c.members[i], c.members[j]);
        const int v = std::max(c.members[i], c.members[j]);
        covered.insert(key(u, v));
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (!covered.contains(key(e.first, e.second))) return CoverCheck{false, e};
  }
  return CoverCheck{true, std::nullopt};
}

CoverResult min_edge_clique_cover(const Graph& g, const Limits& limits) {
  require_mask_size(g, limits.theta_vertices, "theta_e");
  const std::size_t edge_count = g.edge_count();
  if (edge_count == 0) return {};

  std::vector<int> edge_id(static_cast<std::size_t>(g.order()) * g.order(), -1);
  for (std::size_t e = 0; e < edge_count; ++e) {
    const auto [u, v] = g.edges()[e];
    edge_id[u * g.order() + v] = edge_id[v * g.order() + u] = static_cast<int>(e);
  }

  // A minimum cover can always use maximal cliques only.
  CliqueFamily candidates;
  std::vector<EdgeBits> covers;
  std::size_t widest = 1;
  for (Clique& c : maximal_cliques(g, limits)) {
    if (c.size() < 2) continue;
    EdgeBits bits;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        bits.set(edge_id[c.members[i] * g.order() + c.members[j]]);
      }
    }
    widest = std::max(widest, bits.count());
    covers.push_back(bits);
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<int>> covering(edge_count);
  for (std::size_t c = 0; c < covers.size(); ++c) {
    for (std::size_t e = 0; e < edge_count; ++e) {
      if (covers[c].test(e)) covering[e].push_back(static_cast<int>(c));
    }
  }

  EdgeBits all;
  for (std::size_t e = 0; e < edge_count; ++e) all.set(e);

  std::vector<int> best(candidates.size());
  std::iota(best.begin(), best.end(), 0);
  std::vector<int> chosen;
  std::vector<char> blocked(candidates.size());

  std::function<void(const EdgeBits&)> search = [&](const EdgeBits& covered) {
    const EdgeBits open = all & ~covered;
    if (open.none()) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    // Bound: open edges pairwise outside any common clique need distinct cliques.
    std::fill(blocked.begin(), blocked.end(), 0);
    std::size_t independent = 0;
    int branch_edge = -1;
    for (std::size_t e = 0; e < edge_count; ++e) {
      if (!open.test(e)) continue;
      if (branch_edge < 0 || covering[e].size() < covering[branch_edge].size()) {
        branch_edge = static_cast<int>(e);
      }
      const bool fresh = std::none_of(covering[e].begin(), covering[e].end(),
                                      [&](int c) { return blocked[c]; });
      if (fresh) {
        ++independent;
        for (int c : covering[e]) blocked[c] = 1;
      }
    }
    const std::size_t by_width = (open.count() + widest - 1) / widest;
    if (chosen.size() + std::max(independent, by_width) >= best.size()) return;

    std::vector<int> options = covering[branch_edge];
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return (covers[a] & open).count() > (covers[b] & open).count();
    });
    for (int c : options) {
      chosen.push_back(c);
      search(covered | covers[c]);
      chosen.pop_back();
    }
  };
  search(EdgeBits{});

  CoverResult result;
  result.size = static_cast<int>(best.size());
  std::sort(best.begin(), best.end());
  for (int c : best) result.witness.push_back(candidates[c]);
  return result;
}

CoverResult min_vertex_clique_cover(const Graph& g, const Limits& limits) {
  require_mask_size(g, limits.theta_vertices, "theta_v");
  const int n = g.order();
  if (n == 0) return {};
  const auto nbr = neighbor_masks(g);
  const CliqueFamily candidates = maximal_cliques(g, limits);
  std::vector<Mask> masks;
  for (const Clique& c : candidates) masks.push_back(mask_of(c));
  std::vector<std::vector<int>> containing(n);
  for (std::size_t c = 0; c < masks.size(); ++c) {
    for (Mask m = masks[c]; m; m &= m - 1) {
      containing[std::countr_zero(m)].push_back(static_cast<int>(c));
    }
  }
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;

  std::vector<int> best(n + 1);
  std::vector<int> chosen;
  std::function<void(Mask)> search = [&](Mask covered) {
    const Mask open = all & ~covered;
    if (!open) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    // Bound: pairwise non-adjacent open vertices need distinct cliques.
    std::size_t independent = 0;
    Mask pool = open;
    int branch_vertex = -1;
    for (Mask m = open; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (branch_vertex < 0 || containing[v].size() < containing[branch_vertex].size()) {
        branch_vertex = v;
      }
    }
    while (pool) {
      const int v = std::countr_zero(pool);
      ++independent;
      pool &= ~(nbr[v] | bit(v));
    }
    if (chosen.size() + independent >= best.size()) return;

    std::vector<int> options = containing[branch_vertex];
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return std::popcount(masks[a] & open) > std::popcount(masks[b] & open);
    });
    for (int c : options) {
      chosen.push_back(c);
      search(covered | masks[c]);
      chosen.pop_back();
    }
  };
  search(0);

  CoverResult result;
  result.size = static_cast<int>(best.size());
  std::sort(best.begin(), best.end());
  for (int c : best) result.witness.push_back(candidates[c]);
  return result;
}

Graph neighborhood_subgraph(const Graph& g, int v, bool closed) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex index out of range");
  std::vector<int> members(g.neighbors(v).begin(), g.neighbors(v).end());
  if (closed) members.insert(std::lower_bound(members.begin(), members.end(), v), v);
  return induced_subgraph(g, members);
}

}  // namespace compnum
