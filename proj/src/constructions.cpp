#include "compnum/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "compnum/errors.hpp"

namespace compnum {

namespace {

constexpr int kBoxIsolated = 6;

// Partial realization of a sub-box, expressed in the index space of the full
// box: tuple indices are lexicographic ranks in the full box, z_i is total+i-1.
struct Layered {
  std::vector<int> ordering;
  std::vector<PreyedClique> assignment;
};

class BoxBuilder {
 public:
  explicit BoxBuilder(Dims full) : full_(std::move(full)), stride_(3, 1) {
    stride_[1] = full_[2];
    stride_[0] = full_[1] * full_[2];
    total_ = full_[0] * stride_[0];
  }

  int total() const { return total_; }

  int index(const std::array<int, 3>& x) const {
    return (x[0] - 1) * stride_[0] + (x[1] - 1) * stride_[1] + (x[2] - 1) * stride_[2];
  }

  Layered build(const Dims& dims) const {
    const auto axis_it = std::find_if(dims.begin(), dims.end(), [](int q) { return q > 2; });
    if (axis_it == dims.end()) return base();
    const int a = static_cast<int>(axis_it - dims.begin());
    Dims reduced = dims;
    --reduced[a];
    Layered inner = build(reduced);
    return glue_layer(dims, a, std::move(inner));
  }

 private:
  Layered base() const {
    const Realization h32 = build_h32_base();
    const int real = h32.digraph.real_count();
    auto map_vertex = [&](int v) {
      if (v >= real) return total_ + (v - real);
      const Vertex& x = h32.digraph.vertices()[v];
      return index({x[0], x[1], x[2]});
    };
    Layered out;
    for (int v : h32.ordering.sequence) out.ordering.push_back(map_vertex(v));
    for (const PreyedClique& pc : h32.assignment) {
      Clique c;
      for (int u : pc.clique.members) c.members.push_back(map_vertex(u));
      std::sort(c.members.begin(), c.members.end());
      out.assignment.push_back({std::move(c), map_vertex(pc.prey)});
    }
    return out;
  }

  // Adds the layer x_a = dims[a] to a realization of the box with dims[a]-1.
  Layered glue_layer(const Dims& dims, int a, Layered inner) const {
    const int b = a == 0 ? 1 : 0;
    const int c = a == 2 ? 1 : 2;
    const int qa = dims[a];
    const int qb = dims[b];
    const int qc = dims[c];
    auto point = [&](int xa, int xb, int xc) {
      std::array<int, 3> x{};
      x[a] = xa;
      x[b] = xb;
      x[c] = xc;
      return index(x);
    };
    auto slab = [&](int xb, int xc) { return point(qa, xb, xc); };

    const std::size_t n0 = inner.ordering.size();
    const int w1 = inner.ordering[n0 - 2];
    const int w2 = inner.ordering[n0 - 1];
    std::map<std::vector<int>, std::size_t> by_clique;  // members -> assignment slot
    std::vector<int> position(total_ + kBoxIsolated, -1);
    for (std::size_t i = 0; i < n0; ++i) position[inner.ordering[i]] = static_cast<int>(i);
    for (std::size_t s = 0; s < inner.assignment.size(); ++s) {
      const PreyedClique& pc = inner.assignment[s];
      if (pc.prey == w1 || pc.prey == w2) {
        throw std::logic_error("box construction: tail vertex already has an in-neighbourhood");
      }
      auto [it, inserted] = by_clique.emplace(pc.clique.members, s);
      if (!inserted && position[pc.prey] < position[inner.assignment[it->second].prey]) {
        it->second = s;
      }
    }

    // Glue: the prey of each a-line of the smaller box also takes the new
    // layer vertex on that line.
    for (int xb = 1; xb <= qb; ++xb) {
      for (int xc = 1; xc <= qc; ++xc) {
        std::vector<int> line;
        for (int xa = 1; xa < qa; ++xa) line.push_back(point(xa, xb, xc));
        std::sort(line.begin(), line.end());
        const auto it = by_clique.find(line);
        if (it == by_clique.end()) {
          throw std::logic_error("box construction: no prey for a glued line");
        }
        auto& members = inner.assignment[it->second].clique.members;
        members.insert(std::upper_bound(members.begin(), members.end(), slab(xb, xc)),
                       slab(xb, xc));
      }
    }

    // The layer itself, realized like H(2,q) with w1, w2 as its two extra preys.
    auto b_line = [&](int xc) {
      Clique line;
      for (int xb = 1; xb <= qb; ++xb) line.members.push_back(slab(xb, xc));
      return line;
    };
    auto c_line = [&](int xb) {
      Clique line;
      for (int xc = 1; xc <= qc; ++xc) line.members.push_back(slab(xb, xc));
      return line;
    };
    for (int i = 2; i <= qc; ++i) inner.assignment.push_back({b_line(i), slab(1, i - 1)});
    for (int i = 2; i <= qb; ++i) inner.assignment.push_back({c_line(i), slab(i - 1, qc)});
    inner.assignment.push_back({b_line(1), w1});
    inner.assignment.push_back({c_line(1), w2});

    for (int xb = 1; xb <= qb; ++xb) {
      for (int xc = 1; xc <= qc; ++xc) inner.ordering.push_back(slab(xb, xc));
    }
    return inner;
  }

  Dims full_;
  std::vector<int> stride_;
  int total_ = 0;
};

}  // namespace

Realization build_h2q(int q) {
  if (q < 2) throw DomainError("build_h2q needs q >= 2");
  const Graph g = hamming_graph(2, q);
  const int m = g.order();
  auto at = [q](int x1, int x2) { return (x1 - 1) * q + (x2 - 1); };
  auto line_1 = [&](int i) {  // S_1(i): second coordinate fixed to i
    Clique c;
    for (int x = 1; x <= q; ++x) c.members.push_back(at(x, i));
    return c;
  };
  auto line_2 = [&](int i) {  // S_2(i): first coordinate fixed to i
    Clique c;
    for (int x = 1; x <= q; ++x) c.members.push_back(at(i, x));
    return c;
  };

  Realization r;
  r.assignment.push_back({line_1(1), m});
  r.assignment.push_back({line_2(1), m + 1});
  for (int i = 2; i <= q; ++i) r.assignment.push_back({line_1(i), at(1, i - 1)});
  for (int i = 2; i <= q; ++i) r.assignment.push_back({line_2(i), at(i - 1, q)});

  std::vector<Arc> arcs;
  for (const PreyedClique& pc : r.assignment) {
    for (int u : pc.clique.members) arcs.emplace_back(u, pc.prey);
  }
  r.digraph = Digraph(g.vertices(), 2, std::move(arcs));
  r.ordering.sequence = {m, m + 1};
  for (int v = 0; v < m; ++v) r.ordering.sequence.push_back(v);
  return r;
}

Realization build_h32_base() {
  const Graph g = hamming_graph(3, 2);
  std::vector<int> lex(g.order());
  std::iota(lex.begin(), lex.end(), 0);
  RealizeOptions options;
  options.excluded_preys = {lex[lex.size() - 2], lex.back()};
  auto result = realize_from_ecc(g, canonical_family(g), lex, kBoxIsolated, options);
  if (auto* r = std::get_if<Realization>(&result)) return std::move(*r);
  throw std::logic_error("H(3,2) base case: matching unexpectedly infeasible");
}

Realization build_box(const Dims& dims, const Limits& limits) {
  if (dims.size() != 3) throw DomainError("build_box needs exactly three factors");
  for (int q : dims) {
    if (q < 2) throw DomainError("build_box needs every factor size >= 2");
  }
  const Graph g = box_graph(dims, limits);
  const BoxBuilder builder(dims);
  Layered layered = builder.build(dims);

  Realization r;
  std::vector<Arc> arcs;
  for (const PreyedClique& pc : layered.assignment) {
    for (int u : pc.clique.members) arcs.emplace_back(u, pc.prey);
  }
  r.digraph = Digraph(g.vertices(), kBoxIsolated, std::move(arcs));
  r.ordering.sequence = std::move(layered.ordering);
  r.assignment = std::move(layered.assignment);
  return r;
}

}  // namespace compnum
