#include "doctest.h"

#include <random>
#include <set>

#include "ramagraph/graph.hpp"
#include "support.hpp"

using namespace ramagraph;
using namespace testsupport;

namespace {

Graph four_cycle() { return Graph::from_undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

Graph path(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_undirected(n, e);
}

} // namespace

TEST_CASE("edge involution bookkeeping") {
  Graph g = four_cycle();
  CHECK(g.directed_edges() == 8);
  uint64_t degsum = 0;
  for (uint32_t v = 0; v < g.n; ++v) degsum += g.degree(v);
  CHECK(degsum == g.directed_edges());
  g.validate();

  // loops and parallels are representable
  Graph multi = Graph::from_undirected(2, {{0, 1}, {0, 1}, {1, 1}});
  multi.validate();
  CHECK(multi.degree(1) == 4); // a loop contributes two directed edges
}

TEST_CASE("cayley graph from a closure") {
  Field f5 = FieldSpec::make(5);
  // diag(2,1) has order 4 in PGL_2(F_5)
  ProjectiveMatrix g = ProjectiveMatrix::from_ints(f5, 2, {2, 0, 0, 1});
  GroupClosure z4 = generate_closure({g, g.inverse()}, 10);
  REQUIRE(z4.size() == 4);
  Graph cay = cayley_graph(z4, {g, g.inverse()});
  CHECK(cay.n == 4);
  CHECK(girth(cay) == 4);
  CHECK(bipartition(cay).bipartite);

  GroupClosure trivial = generate_closure({ProjectiveMatrix::identity(f5, 2)}, 2);
  Graph empty = cayley_graph(trivial, {});
  CHECK(empty.n == 1);
  CHECK(empty.directed_edges() == 0);

  CHECK_THROWS_AS(cayley_graph(z4, {g}), std::invalid_argument); // not inverse-closed
  CHECK_THROWS_AS(cayley_graph(z4, {ProjectiveMatrix::identity(f5, 2)}),
                  std::invalid_argument);
}

TEST_CASE("girth") {
  CHECK(girth(four_cycle()) == 4);
  CHECK(girth(path(6)) == std::nullopt);
  CHECK(girth(Graph::from_undirected(3, {{0, 1}, {1, 2}, {2, 0}})) == 3);
  CHECK(girth(Graph::from_undirected(2, {{0, 1}, {0, 1}})) == 2);
  CHECK(girth(Graph::from_undirected(1, {{0, 0}})) == 1);

  const Instance& inst = q3_instance();
  auto gi = girth(inst.x_graph);
  REQUIRE(gi.has_value());
  CHECK(*gi >= 8); // ceil(4/3 log_3 720)
}

TEST_CASE("girth agrees with the closed non-backtracking walk oracle") {
  std::mt19937_64 seed_gen(99);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_peeled_graph(60 + trial * 15, 3.0 + 0.2 * trial, seed_gen());
    auto a = girth(g);
    auto b = oracle_nb_girth(g, 64);
    REQUIRE(a.has_value()); // min degree 2 forces a cycle
    CHECK(a == b);
  }
  const Instance& inst = q3_instance();
  CHECK(girth(inst.x_graph) == oracle_nb_girth(inst.x_graph, 16));
}

TEST_CASE("bipartition and components") {
  auto b4 = bipartition(four_cycle());
  CHECK(b4.bipartite);
  int c0 = 0;
  for (uint8_t s : b4.side) c0 += s == 0;
  CHECK(c0 == 2);

  auto btri = bipartition(Graph::from_undirected(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK_FALSE(btri.bipartite);
  CHECK(btri.odd_cycle.size() % 2 == 1);

  Graph two = Graph::from_undirected(5, {{0, 1}, {2, 3}});
  CHECK(component_count(two) == 3);

  const Instance& inst = q3_instance();
  auto bx = bipartition(inst.x_graph);
  REQUIRE(bx.bipartite);
  uint64_t side1 = 0;
  for (uint8_t s : bx.side) side1 += s;
  CHECK(side1 == 360);
  CHECK(component_count(inst.x_graph) == 1);
}

TEST_CASE("right translations act as automorphisms") {
  const Instance& inst = q3_instance();
  const Graph& x = inst.x_graph;
  std::mt19937_64 rng(5);
  // directed edge multiset as sorted pairs for one vertex
  auto neighbor_multiset = [&](uint32_t v) {
    std::vector<uint32_t> out;
    for (uint32_t i = x.adj_off[v]; i < x.adj_off[v + 1]; ++i)
      out.push_back(x.edst[x.adj_edge[i]]);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int trial = 0; trial < 20; ++trial) {
    uint32_t gid = static_cast<uint32_t>(rng() % x.n);
    const ProjectiveMatrix& g = inst.x_group.elements[gid];
    std::vector<uint32_t> perm(x.n);
    for (uint32_t v = 0; v < x.n; ++v)
      perm[v] = *inst.x_group.find(inst.x_group.elements[v] * g);
    for (uint32_t v = 0; v < x.n; v += 37) {
      auto orig = neighbor_multiset(v);
      for (auto& w : orig) w = perm[w];
      std::sort(orig.begin(), orig.end());
      CHECK(orig == neighbor_multiset(perm[v]));
    }
  }
}

TEST_CASE("induced subgraphs and peeling") {
  Graph g = Graph::from_undirected(
      6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
  std::vector<uint32_t> kept;
  Graph peeled = peel_degree_one(g, &kept);
  CHECK(peeled.n == 3); // the triangle survives
  CHECK(kept == std::vector<uint32_t>{0, 1, 2});
  CHECK(girth(peeled) == 3);

  std::vector<uint8_t> mask = {1, 1, 1, 0, 0, 0};
  Graph ind = induced_subgraph(g, mask);
  CHECK(ind.n == 3);
  CHECK(ind.directed_edges() == 6);
  ind.validate();
}

TEST_CASE("exports") {
  Graph g = four_cycle();
  std::string dot = to_dot(g);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  std::string csv = edges_csv(g);
  CHECK(csv.find("src,dst,label") == 0);
}
