#include <doctest.h>

#include <algorithm>
#include <set>

#include "compnum/bounds.hpp"
#include "compnum/constructions.hpp"
#include "compnum/errors.hpp"

using namespace compnum;

namespace {

std::set<Clique> in_cliques(const Digraph& d) {
  std::set<Clique> out;
  for (const PreyedClique& pc : in_neighborhood_family(d)) out.insert(pc.clique);
  return out;
}

std::set<Clique> as_set(const CliqueFamily& f) { return {f.begin(), f.end()}; }

bool has_arc(const Digraph& d, const Graph& g, std::vector<int> from, std::vector<int> to) {
  const Dims dims = g.vertices().front().dims();
  const int s = *g.index_of(Vertex(from, dims));
  const int t = *g.index_of(Vertex(to, dims));
  const auto out = d.out_neighbors(s);
  return std::find(out.begin(), out.end(), t) != out.end();
}

}  // namespace

TEST_CASE("H(2,2) realization") {
  const Realization r = build_h2q(2);
  const Graph h = hamming_graph(2, 2);
  CHECK(r.digraph.order() == 6);
  CHECK(r.digraph.arcs().size() == 8);
  CHECK(verify_realization(r, h).pass);
  const Graph c = competition_graph(r.digraph);
  CHECK(c.edges() == h.edges());
  CHECK(c.named().size() == 2);
}

TEST_CASE("H(2,3) realization follows the line rule") {
  const Realization r = build_h2q(3);
  const Graph h = hamming_graph(2, 3);
  REQUIRE(verify_realization(r, h).pass);
  // S_1(2) = {(x,2)} preys on (1,1); S_2(3) = {(3,x)} preys on (2,3).
  for (int x = 1; x <= 3; ++x) {
    CHECK(has_arc(r.digraph, h, {x, 2}, {1, 1}));
    CHECK(has_arc(r.digraph, h, {3, x}, {2, 3}));
  }
  CHECK(has_arc(r.digraph, h, {3, 2}, {1, 1}));
  // S_1(1) and S_2(1) feed the isolated vertices.
  const auto z1 = r.digraph.in_neighbors(r.digraph.z(1));
  const auto z2 = r.digraph.in_neighbors(r.digraph.z(2));
  CHECK(std::vector<int>(z1.begin(), z1.end()) == axis_clique(h, 1, Vertex({1}, {3})).members);
  CHECK(std::vector<int>(z2.begin(), z2.end()) == axis_clique(h, 2, Vertex({1}, {3})).members);
  // Ordering: z1, z2, then lex.
  std::vector<int> expected{9, 10};
  for (int v = 0; v < 9; ++v) expected.push_back(v);
  CHECK(r.ordering.sequence == expected);
}

TEST_CASE("build_h2q rejects q < 2") {
  CHECK_THROWS_AS(build_h2q(1), DomainError);
  CHECK_THROWS_AS(build_h2q(0), DomainError);
}

TEST_CASE("H(2,q) realizations for q = 2..12") {
  for (int q = 2; q <= 12; ++q) {
    CAPTURE(q);
    const Realization r = build_h2q(q);
    const Graph h = hamming_graph(2, q);
    CHECK(r.digraph.isolated_count() == 2);
    CHECK(verify_realization(r, h).pass);
    CHECK(std::holds_alternative<AcyclicOrdering>(topological_check(r.digraph)));
    CHECK(in_cliques(r.digraph) == as_set(canonical_family(h)));
    CHECK(check_counting_inequality(r, canonical_family(h), 2).pass);
  }
}

TEST_CASE("H(3,2) base case") {
  const Realization r = build_h32_base();
  const Graph h = hamming_graph(3, 2);
  CHECK(r.digraph.isolated_count() == 6);
  CHECK(verify_realization(r, h).pass);
  CHECK(in_cliques(r.digraph) == as_set(canonical_family(h)));
  CHECK(r.assignment.size() == 12);
  const auto& seq = r.ordering.sequence;
  REQUIRE(seq.size() == 14);
  CHECK(h.label(seq[12]) == "2,2,1");
  CHECK(h.label(seq[13]) == "2,2,2");
  CHECK(r.digraph.in_neighbors(seq[12]).empty());
  CHECK(r.digraph.in_neighbors(seq[13]).empty());
}

TEST_CASE("box examples") {
  const Realization r222 = build_box({2, 2, 2});
  CHECK(r222.digraph.order() == 14);
  CHECK(verify_realization(r222, hamming_graph(3, 2)).pass);

  const Realization r223 = build_box({2, 2, 3});
  CHECK(r223.digraph.order() == 18);
  CHECK(verify_realization(r223, box_graph({2, 2, 3})).pass);

  const Realization r333 = build_box({3, 3, 3});
  CHECK(r333.digraph.order() == 33);
  CHECK(verify_realization(r333, hamming_graph(3, 3)).pass);
}

TEST_CASE("build_box rejects bad dims") {
  CHECK_THROWS_AS(build_box({2, 2}), DomainError);
  CHECK_THROWS_AS(build_box({2, 2, 2, 2}), DomainError);
  CHECK_THROWS_AS(build_box({1, 3, 3}), DomainError);
  Limits limits;
  limits.max_vertices = 50;
  CHECK_THROWS_AS(build_box({4, 4, 4}, limits), ResourceError);
}

TEST_CASE("box realizations for every shape with at most 216 vertices") {
  int shapes = 0;
  for (int a = 2; a <= 54; ++a) {
    for (int b = 2; a * b * 2 <= 216; ++b) {
      for (int c = 2; a * b * c <= 216; ++c) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        ++shapes;
        const Dims dims{a, b, c};
        const Realization r = build_box(dims);
        const Graph g = box_graph(dims);
        REQUIRE(verify_realization(r, g).pass);
        CHECK(r.digraph.isolated_count() == 6);
        const CliqueFamily lines = canonical_family(g);
        CHECK(in_cliques(r.digraph) == as_set(lines));
        CHECK(r.assignment.size() == lines.size());
        // The last two ordered vertices are never preys.
        const auto& seq = r.ordering.sequence;
        CHECK(r.digraph.in_neighbors(seq[seq.size() - 1]).empty());
        CHECK(r.digraph.in_neighbors(seq[seq.size() - 2]).empty());
        CHECK(check_counting_inequality(r, lines, 6).pass);
      }
    }
  }
  CHECK(shapes > 100);
}
