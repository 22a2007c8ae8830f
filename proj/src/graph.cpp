#include "compnum/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "compnum/errors.hpp"

namespace compnum {

namespace {

void require_same_dims(const Vertex& x, const Vertex& y) {
  if (x.dims() != y.dims()) {
    throw DomainError("vertices have different dims");
  }
}

std::vector<Edge> normalize_edges(std::vector<Edge> edges, int order) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw DomainError("edge endpoint out of range");
    }
    if (u == v) {
      throw DomainError("loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw DomainError("parallel edge");
  }
  return edges;
}

void require_lex_increasing(const std::vector<Vertex>& vertices) {
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    require_same_dims(vertices[i - 1], vertices[i]);
    if (lex_compare(vertices[i - 1], vertices[i]) != std::strong_ordering::less) {
      throw DomainError("vertices must be distinct and in lexicographic order");
    }
  }
}

// Number of tuples in the box, or nullopt past `cap`.
std::optional<std::size_t> box_size(const Dims& dims, std::size_t cap) {
  std::size_t total = 1;
  for (int q : dims) {
    if (q <= 0) return 0;
    if (total > cap / static_cast<std::size_t>(q)) return std::nullopt;
    total *= static_cast<std::size_t>(q);
  }
  return total;
}

bool is_full_box(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges) {
  if (vertices.empty()) return false;
  const Dims& dims = vertices.front().dims();
  auto total = box_size(dims, vertices.size());
  if (!total || *total != vertices.size()) return false;
  // Distinct lex-sorted tuples filling the box: the vertex set is the box.
  std::size_t expected = 0;
  for (int q : dims) expected += static_cast<std::size_t>(q - 1);
  expected = expected * vertices.size() / 2;
  if (edges.size() != expected) return false;
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return hamming_distance(vertices[e.first], vertices[e.second]) == 1;
  });
}

Graph make_product(const Dims& dims, const Limits& limits) {
  auto total = box_size(dims, limits.max_vertices);
  if (!total) {
    throw ResourceError("vertex count exceeds limit max_vertices=" +
                        std::to_string(limits.max_vertices));
  }
  const std::size_t count = *total;
  std::size_t degree = 0;
  for (int q : dims) degree += static_cast<std::size_t>(q - 1);
  if (count * degree / 2 > limits.max_edges) {
    throw ResourceError("edge count exceeds limit max_edges=" +
                        std::to_string(limits.max_edges));
  }

  const int n = static_cast<int>(dims.size());
  std::vector<std::size_t> stride(n, 1);
  for (int a = n - 2; a >= 0; --a) stride[a] = stride[a + 1] * dims[a + 1];

  std::vector<Vertex> vertices;
  vertices.reserve(count);
  std::vector<Edge> edges;
  edges.reserve(count * degree / 2);
  std::vector<int> coords(n);
  std::vector<int> later;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int a = 0; a < n; ++a) {
      coords[a] = static_cast<int>(rest / stride[a]) + 1;
      rest %= stride[a];
    }
    vertices.emplace_back(coords, dims);
    later.clear();
    for (int a = 0; a < n; ++a) {
      for (int value = coords[a] + 1; value <= dims[a]; ++value) {
        later.push_back(static_cast<int>(idx + (value - coords[a]) * stride[a]));
      }
    }
    std::sort(later.begin(), later.end());
    for (int j : later) edges.emplace_back(static_cast<int>(idx), j);
  }
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace

Vertex::Vertex(std::vector<int> coords, Dims dims)
    : coords_(std::move(coords)), dims_(std::move(dims)) {
  if (coords_.empty() || coords_.size() != dims_.size()) {
    throw DomainError("vertex needs n >= 1 coordinates matching its dims");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (dims_[i] < 1 || coords_[i] < 1 || coords_[i] > dims_[i]) {
      throw DomainError("coordinate " + std::to_string(i + 1) + " out of range");
    }
  }
}

Vertex Vertex::without_axis(int axis) const {
  if (size() < 2) throw DomainError("cannot drop the only axis");
  auto coords = coords_;
  auto dims = dims_;
  coords.erase(coords.begin() + axis);
  dims.erase(dims.begin() + axis);
  return Vertex(std::move(coords), std::move(dims));
}

std::string Vertex::label() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

int hamming_distance(const Vertex& x, const Vertex& y) {
  require_same_dims(x, y);
  int d = 0;
  for (int i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::strong_ordering lex_compare(const Vertex& x, const Vertex& y) {
  require_same_dims(x, y);
  return x.coords() <=> y.coords();
}

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
             std::vector<std::string> named)
    : vertices_(std::move(vertices)), named_(std::move(named)) {
  require_lex_increasing(vertices_);
  edges_ = normalize_edges(std::move(edges), order());
  adjacency_.resize(order());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  if (named_.empty() && is_full_box(vertices_, edges_)) {
    product_dims_ = vertices_.front().dims();
  }
}

Graph Graph::from_edge_list(int n, std::vector<Edge> edges) {
  if (n < 0) throw DomainError("negative vertex count");
  std::vector<Vertex> vertices;
  vertices.reserve(n);
  for (int i = 1; i <= n; ++i) vertices.emplace_back(std::vector<int>{i}, Dims{n});
  return Graph(std::move(vertices), std::move(edges));
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adjacency_[u].size() < adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const int other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::string Graph::label(int v) const {
  if (v < tuple_count()) return vertices_[v].label();
  return named_[v - tuple_count()];
}

std::optional<int> Graph::index_of(const Vertex& v) const {
  if (vertices_.empty() || v.dims() != vertices_.front().dims()) return std::nullopt;
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             [](const Vertex& a, const Vertex& b) {
                               return a.coords() < b.coords();
                             });
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::uint64_t Graph::neighbor_mask(int v) const {
  if (order() > 64) throw ResourceError("neighbor_mask needs at most 64 vertices");
  std::uint64_t mask = 0;
  for (int u : adjacency_[v]) mask |= std::uint64_t{1} << u;
  return mask;
}

bool Graph::operator==(const Graph& other) const {
  return vertices_ == other.vertices_ && named_ == other.named_ && edges_ == other.edges_;
}

Graph hamming_graph(int n, int q, const Limits& limits) {
  if (n < 1 || q < 1) throw DomainError("hamming_graph needs n >= 1 and q >= 1");
  return make_product(Dims(n, q), limits);
}

Graph box_graph(const Dims& dims, const Limits& limits) {
  if (dims.empty()) throw DomainError("box_graph needs at least one factor");
  for (int q : dims) {
    if (q < 2) throw DomainError("box_graph needs every factor size >= 2");
  }
  return make_product(dims, limits);
}

Graph induced_subgraph(const Graph& g, std::span<const int> members) {
  std::vector<int> position(g.order(), -1);
  std::vector<Vertex> vertices;
  std::vector<std::string> named;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int v = members[i];
    if (v < 0 || v >= g.order()) throw DomainError("vertex index out of range");
    if (i && members[i - 1] >= v) throw DomainError("members must be sorted and distinct");
    position[v] = static_cast<int>(i);
    if (v < g.tuple_count()) {
      vertices.push_back(g.vertices()[v]);
    } else {
      named.push_back(g.named()[v - g.tuple_count()]);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (position[u] >= 0 && position[v] >= 0) edges.emplace_back(position[u], position[v]);
  }
  return Graph(std::move(vertices), std::move(edges), std::move(named));
}

Digraph::Digraph(std::vector<Vertex> vertices, int isolated, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), isolated_(isolated), arcs_(std::move(arcs)) {
  if (isolated_ < 0) throw DomainError("negative isolated count");
  require_lex_increasing(vertices_);
  for (auto [s, t] : arcs_) {
    if (s < 0 || t < 0 || s >= order() || t >= order()) {
      throw DomainError("arc endpoint out of range");
    }
    if (s == t) throw DomainError("loop at vertex " + std::to_string(s));
    if (is_isolated_vertex(s)) {
      throw DomainError("isolated vertex " + label(s) + " has an out-arc");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw DomainError("parallel arc");
  }
  out_.resize(order());
  in_.resize(order());
  for (auto [s, t] : arcs_) {
    out_[s].push_back(t);
    in_[t].push_back(s);
  }
  for (auto& row : in_) std::sort(row.begin(), row.end());
}

std::string Digraph::label(int v) const {
  if (v < real_count()) return vertices_[v].label();
  return "z" + std::to_string(v - real_count() + 1);
}

bool is_acyclic_ordering(const Digraph& d, std::span<const int> sequence) {
  if (static_cast<int>(sequence.size()) != d.order()) return false;
  std::vector<int> position(d.order(), -1);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const int v = sequence[i];
    if (v < 0 || v >= d.order() || position[v] != -1) return false;
    position[v] = static_cast<int>(i);
  }
  return std::all_of(d.arcs().begin(), d.arcs().end(), [&](const Arc& a) {
    return position[a.first] > position[a.second];
  });
}

std::variant<AcyclicOrdering, DirectedCycle> topological_check(const Digraph& d) {
  const int order = d.order();
  std::vector<int> pending(order);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < order; ++v) {
    pending[v] = static_cast<int>(d.out_neighbors(v).size());
    if (pending[v] == 0) ready.push(v);
  }
  AcyclicOrdering result;
  std::vector<char> placed(order, 0);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    placed[v] = 1;
    result.sequence.push_back(v);
    for (int u : d.in_neighbors(v)) {
      if (--pending[u] == 0) ready.push(u);
    }
  }
  if (static_cast<int>(result.sequence.size()) == order) return result;

  // Every unplaced vertex keeps an unplaced out-neighbour; walk until a repeat.
  int start = 0;
  while (placed[start]) ++start;
  std::vector<int> walk;
  std::vector<int> seen_at(order, -1);
  int v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    int next = -1;
    for (int w : d.out_neighbors(v)) {
      if (!placed[w] && (next < 0 || w < next)) next = w;
    }
    v = next;
  }
  return DirectedCycle{std::vector<int>(walk.begin() + seen_at[v], walk.end())};
}

}  // namespace compnum
