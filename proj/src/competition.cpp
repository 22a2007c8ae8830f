#include "compnum/competition.hpp"

#include <algorithm>
#include <numeric>

#include "compnum/errors.hpp"

namespace compnum {

namespace {

std::string edge_token(const Graph& g, const Edge& e) {
  return g.label(e.first) + "--" + g.label(e.second);
}

Verdict fail(std::string clause, std::string witness) {
  return Verdict{false, std::move(clause), std::move(witness)};
}

// Kuhn's augmenting path over prey slots; slot s is eligible for clique c
// iff s < limit[c] and the slot is not excluded.
class PrefixMatcher {
 public:
  PrefixMatcher(std::vector<int> limit, std::vector<char> excluded)
      : limit_(std::move(limit)),
        excluded_(std::move(excluded)),
        slot_owner_(excluded_.size(), -1),
        clique_slot_(limit_.size(), -1) {}

  bool augment(int c) {
    visited_.assign(excluded_.size(), 0);
    return try_clique(c);
  }

  int slot_of(int c) const { return clique_slot_[c]; }
  int owner_of(int s) const { return slot_owner_[s]; }

  std::vector<int> eligible(int c) const {
    std::vector<int> out;
    for (int s = 0; s < limit_[c]; ++s) {
      if (!excluded_[s]) out.push_back(s);
    }
    return out;
  }

 private:
  bool try_clique(int c) {
    for (int s = 0; s < limit_[c]; ++s) {
      if (excluded_[s] || visited_[s]) continue;
      visited_[s] = 1;
      if (slot_owner_[s] < 0 || try_clique(slot_owner_[s])) {
        slot_owner_[s] = c;
        clique_slot_[c] = s;
        return true;
      }
    }
    return false;
  }

  std::vector<int> limit_;
  std::vector<char> excluded_;
  std::vector<int> slot_owner_;
  std::vector<int> clique_slot_;
  std::vector<char> visited_;
};

}  // namespace

std::string Verdict::line() const {
  if (pass) return "PASS";
  return "FAIL " + clause + " " + witness;
}

Graph competition_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (int prey = 0; prey < d.order(); ++prey) {
    const auto preds = d.in_neighbors(prey);
    for (std::size_t i = 0; i < preds.size(); ++i) {
      for (std::size_t j = i + 1; j < preds.size(); ++j) {
        edges.emplace_back(std::min(preds[i], preds[j]), std::max(preds[i], preds[j]));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> named;
  for (int i = 1; i <= d.isolated_count(); ++i) named.push_back("z" + std::to_string(i));
  return Graph(d.vertices(), std::move(edges), std::move(named));
}

std::vector<PreyedClique> in_neighborhood_family(const Digraph& d) {
  std::vector<PreyedClique> family;
  for (int v = 0; v < d.order(); ++v) {
    const auto preds = d.in_neighbors(v);
    if (preds.size() >= 2) {
      family.push_back({Clique{std::vector<int>(preds.begin(), preds.end())}, v});
    }
  }
  return family;
}

Verdict verify_realization(const Digraph& d, const Graph& g, int k) {
  if (!g.named().empty() || g.vertices() != d.vertices()) {
    throw DomainError("digraph and graph have different tuple vertices");
  }
  if (d.isolated_count() != k) {
    throw DomainError("digraph has " + std::to_string(d.isolated_count()) +
                      " isolated vertices, expected " + std::to_string(k));
  }

  const auto topo = topological_check(d);
  if (const auto* cycle = std::get_if<DirectedCycle>(&topo)) {
    std::string token;
    for (int v : cycle->vertices) token += d.label(v) + "->";
    token += d.label(cycle->vertices.front());
    return fail("acyclic", token);
  }

  const Graph c = competition_graph(d);
  const int real = d.real_count();
  std::vector<Edge> inner;
  std::optional<Edge> touching_z;
  for (const Edge& e : c.edges()) {
    if (e.second < real) {
      inner.push_back(e);
    } else if (!touching_z) {
      touching_z = e;
    }
  }
  std::vector<Edge> missing;
  std::set_difference(g.edges().begin(), g.edges().end(), inner.begin(), inner.end(),
                      std::back_inserter(missing));
  if (!missing.empty()) return fail("missing_edge", edge_token(g, missing.front()));
  std::vector<Edge> extra;
  std::set_difference(inner.begin(), inner.end(), g.edges().begin(), g.edges().end(),
                      std::back_inserter(extra));
  if (!extra.empty()) return fail("extra_edge", edge_token(g, extra.front()));
  if (touching_z) return fail("z_not_isolated", edge_token(c, *touching_z));
  return Verdict{true, {}, {}};
}

Verdict verify_realization(const Realization& r, const Graph& g) {
  const Digraph& d = r.digraph;
  if (!is_acyclic_ordering(d, r.ordering.sequence)) {
    return fail("ordering", "recorded_ordering_is_not_acyclic");
  }
  std::vector<Arc> generated;
  std::vector<int> preys;
  for (const PreyedClique& pc : r.assignment) {
    for (int u : pc.clique.members) generated.emplace_back(u, pc.prey);
    preys.push_back(pc.prey);
  }
  std::sort(preys.begin(), preys.end());
  if (auto dup = std::adjacent_find(preys.begin(), preys.end()); dup != preys.end()) {
    return fail("assignment", "prey_" + d.label(*dup) + "_used_twice");
  }
  std::sort(generated.begin(), generated.end());
  if (generated != d.arcs()) return fail("assignment", "arcs_differ_from_assignment");
  return verify_realization(d, g, d.isolated_count());
}

std::variant<Realization, HallViolation> realize_from_ecc(
    const Graph& g, const CliqueFamily& family, std::span<const int> ordering, int k,
    const RealizeOptions& options) {
  if (!g.named().empty()) throw DomainError("graph must not carry named vertices");
  if (k < 0) throw DomainError("k must be non-negative");
  const int m = g.order();
  if (static_cast<int>(ordering.size()) != m) {
    throw DomainError("ordering is not a permutation of the vertices");
  }
  std::vector<int> position(m, -1);
  for (int t = 0; t < m; ++t) {
    const int v = ordering[t];
    if (v < 0 || v >= m || position[v] >= 0) {
      throw DomainError("ordering is not a permutation of the vertices");
    }
    position[v] = k + t;
  }
  for (const Clique& c : family) {
    if (c.size() < 2 || !std::is_sorted(c.members.begin(), c.members.end()) ||
        !is_clique(g, c.members)) {
      throw DomainError("family member is not a sorted clique of size >= 2");
    }
  }
  if (auto cover = check_edge_clique_cover(g, family); !cover.covered) {
    throw DomainError("family is not an edge clique cover; uncovered " +
                      edge_token(g, *cover.uncovered));
  }

  // Slots 0..k-1 are z1..zk, slot k+t is ordering[t].
  auto slot_vertex = [&](int s) { return s < k ? m + s : ordering[s - k]; };
  std::vector<char> excluded(k + m, 0);
  for (int v : options.excluded_preys) {
    if (v < 0 || v >= m) throw DomainError("excluded prey out of range");
    excluded[position[v]] = 1;
  }
  const int f = static_cast<int>(family.size());
  std::vector<int> limit(f);
  for (int c = 0; c < f; ++c) {
    limit[c] = m + k;
    for (int u : family[c].members) limit[c] = std::min(limit[c], position[u]);
  }
  PrefixMatcher matcher(limit, excluded);

  std::vector<int> eligible_count(f);
  for (int c = 0; c < f; ++c) {
    eligible_count[c] = static_cast<int>(matcher.eligible(c).size());
  }
  std::vector<int> order(f);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eligible_count[a] < eligible_count[b]; });

  std::vector<int> unmatched;
  for (int c : order) {
    if (!matcher.augment(c)) unmatched.push_back(c);
  }

  if (!unmatched.empty()) {
    // Alternating-path closure of an exposed clique: its preys are all matched
    // inside the set, so |preys| = |cliques| - 1.
    std::vector<char> in_set(f, 0);
    std::vector<char> prey_seen(k + m, 0);
    std::vector<int> queue{unmatched.front()};
    in_set[unmatched.front()] = 1;
    HallViolation violation;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int s : matcher.eligible(queue[head])) {
        if (prey_seen[s]) continue;
        prey_seen[s] = 1;
        violation.preys.push_back(slot_vertex(s));
        const int owner = matcher.owner_of(s);
        if (owner >= 0 && !in_set[owner]) {
          in_set[owner] = 1;
          queue.push_back(owner);
        }
      }
    }
    violation.cliques = queue;
    std::sort(violation.cliques.begin(), violation.cliques.end());
    std::sort(violation.preys.begin(), violation.preys.end());
    return violation;
  }

  Realization r;
  std::vector<Arc> arcs;
  for (int c = 0; c < f; ++c) {
    const int prey = slot_vertex(matcher.slot_of(c));
    r.assignment.push_back({family[c], prey});
    for (int u : family[c].members) arcs.emplace_back(u, prey);
  }
  r.digraph = Digraph(g.vertices(), k, std::move(arcs));
  for (int i = 0; i < k; ++i) r.ordering.sequence.push_back(m + i);
  r.ordering.sequence.insert(r.ordering.sequence.end(), ordering.begin(), ordering.end());
  return r;
}

}  // namespace compnum
