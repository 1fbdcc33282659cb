#include "doctest.h"

#include <cmath>
#include <algorithm>
#include <random>

#include "ramagraph/expansion.hpp"
#include "support.hpp"

using namespace ramagraph;
using namespace testsupport;

namespace {

Graph complete_graph(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_undirected(n, e);
}

Graph cycle(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_undirected(n, e);
}

// subdivision: a midpoint on every edge
Graph subdivide(const Graph& g) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  uint32_t next = g.n;
  for (uint32_t ed = 0; ed < g.directed_edges(); ++ed) {
    if (ed >= g.etwin[ed]) continue;
    e.emplace_back(g.esrc[ed], next);
    e.emplace_back(next, g.edst[ed]);
    ++next;
  }
  return Graph::from_undirected(next, e);
}

Subset y_subset() {
  const Instance& inst = q3_instance();
  return Subset::from_mask(inst.x_graph, inst.y_mask_in_x);
}

} // namespace

TEST_CASE("neighbor profiles") {
  const Instance& inst = q3_instance();
  const Graph& x = inst.x_graph;

  // Y = X: every vertex sees d of its neighbours inside
  Subset all = Subset::of(x, [] {
    std::vector<uint32_t> v(720);
    for (uint32_t i = 0; i < 720; ++i) v[i] = i;
    return v;
  }());
  auto pall = neighbor_profile(x, all);
  CHECK(pall.boundary.size() == 720);
  CHECK(pall.histogram == std::map<uint64_t, uint64_t>{{4, 720}});

  // single vertex: all d neighbours are unique neighbours
  auto pone = neighbor_profile(x, Subset::of(x, {0}));
  CHECK(pone.has_unique_neighbor);
  CHECK(pone.histogram.at(1) == 4);

  // the subgroup subset: every boundary vertex sees exactly two
  auto py = neighbor_profile(x, y_subset());
  CHECK(py.boundary.size() == 48);
  CHECK(py.histogram == std::map<uint64_t, uint64_t>{{2, 48}});
  CHECK_FALSE(py.has_unique_neighbor);
  CHECK_FALSE(py.has_odd_neighbor);
}

TEST_CASE("induced average degree") {
  const Instance& inst = q3_instance();
  auto r = induced_average_degree(inst.x_graph, y_subset());
  CHECK(r.num == 0); // independent set
  Subset all = Subset::from_mask(inst.x_graph, std::vector<uint8_t>(720, 1));
  auto rall = induced_average_degree(inst.x_graph, all);
  CHECK(rall.num == 4);
  CHECK(rall.den == 1);
}

TEST_CASE("non-backtracking counts") {
  // d-regular closed form n d (d-1)^(l-1)
  const Instance& inst = q3_instance();
  auto wc = nb_counts(inst.x_graph, 6);
  for (unsigned l = 1; l <= 6; ++l) {
    Count want = Count(720) * Count(4);
    for (unsigned i = 1; i < l; ++i) want = want * Count(3);
    CHECK(wc.total[l] == want);
  }

  // 4-cycle, l = 4: each directed edge extends uniquely around
  auto wc4 = nb_counts(cycle(4), 4);
  CHECK(wc4.total[1] == Count(8));
  CHECK(wc4.total[4] == Count(8));

  // subset counts: M_l(S) <= M_l(S, X)
  Subset y = y_subset();
  auto wcy = nb_counts(inst.x_graph, 6, &y);
  for (unsigned l = 1; l <= 6; ++l) CHECK(wcy.within[l] <= wcy.endpoints[l]);
  CHECK(wcy.endpoints[1] == Count(0)); // independent set
}

TEST_CASE("moore bound audit") {
  // regular graphs meet the bound with equality
  const Instance& inst = q3_instance();
  auto rx = moore_audit(inst.x_graph, 12);
  CHECK(rx.pass);
  CHECK(rx.regular);
  CHECK(rx.d_tilde == doctest::Approx(4.0));
  CHECK(rx.d_bar == doctest::Approx(4.0));
  for (const auto& row : rx.rows)
    CHECK(row.observed.to_double() == doctest::Approx(row.bound).epsilon(1e-9));

  // subdivision of K_4: d-geometric mean is 1 + sqrt(2)
  Graph sub = subdivide(complete_graph(4));
  auto rs = moore_audit(sub, 8);
  CHECK(rs.pass);
  CHECK_FALSE(rs.regular);
  CHECK(rs.d_tilde == doctest::Approx(1.0 + std::sqrt(2.0)));
  CHECK(rs.dtilde_ge_dbar);
  REQUIRE(rs.bipartite_comparison.has_value());
  CHECK(*rs.bipartite_comparison);

  // degree-1 vertices are rejected
  Graph star = Graph::from_undirected(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(moore_audit(star, 3), std::invalid_argument);
}

TEST_CASE("d-tilde dominates d-bar strictly unless regular") {
  std::mt19937_64 seeds(42);
  int irregular_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_peeled_graph(80, 3.2, seeds());
    if (g.n < 10) continue;
    auto r = moore_audit(g, 10);
    CHECK(r.pass);
    CHECK(r.dtilde_ge_dbar);
    if (!r.regular) {
      ++irregular_seen;
      CHECK(r.d_tilde > r.d_bar + 1e-9);
    }
  }
  CHECK(irregular_seen > 0);
}

TEST_CASE("chebyshev identities, exact and spectral") {
  auto rk4 = chebyshev_identity_audit(complete_graph(4), 6, 1e-8);
  CHECK(rk4.identities_pass);
  CHECK(rk4.spectral_checked);
  CHECK(rk4.spectral_pass);

  const Instance& inst = q3_instance();
  auto rx = chebyshev_identity_audit(inst.x_graph, 6, 1e-8, 100);
  CHECK(rx.identities_pass);
  CHECK_FALSE(rx.spectral_checked); // 720 > limit

  std::mt19937_64 seeds(17);
  for (uint32_t d : {3u, 4u}) {
    Graph g = random_regular_graph(40, d, seeds());
    auto r = chebyshev_identity_audit(g, 6, 1e-8);
    CHECK(r.identities_pass);
    CHECK(r.spectral_pass);
  }

  // cycles: d = 2 works through the degenerate closed form
  auto rc = chebyshev_identity_audit(cycle(9), 5, 1e-8);
  CHECK(rc.identities_pass);
  CHECK(rc.spectral_pass);
}

TEST_CASE("kahale walk bound on the instance subset") {
  const Instance& inst = q3_instance();
  Subset y = y_subset();
  for (unsigned l = 1; l <= 6; ++l) {
    auto r = kahale_walk_bound_audit(inst.x_graph, y, l);
    CHECK(r.pass);
    CHECK(r.bound == doctest::Approx(24.0 * (l + 3) * std::pow(3.0, l / 2.0)));
  }
  // l = 4 bound is 24 * 7 * 9 = 1512
  auto r4 = kahale_walk_bound_audit(inst.x_graph, y, 4);
  CHECK(r4.bound == doctest::Approx(1512.0));
  CHECK(r4.observed.to_double() <= 1512.0);

  // S = X violates the admissibility precondition for every l >= 1
  Subset all = Subset::from_mask(inst.x_graph, std::vector<uint8_t>(720, 1));
  CHECK_THROWS_AS(kahale_walk_bound_audit(inst.x_graph, all, 1), std::invalid_argument);
}

TEST_CASE("kahale vertex audit") {
  const Instance& inst = q3_instance();
  Subset y = y_subset();
  auto r = kahale_vertex_audit(inst.x_graph, y, 3);
  CHECK(r.s == 24);
  CHECK(r.boundary == 48);
  CHECK(r.m_multi == 48);
  CHECK(r.m_unique == 0);
  CHECK(r.edges_to_m == 96);
  REQUIRE(r.d_prime_minus_1.has_value());
  CHECK(*r.d_prime_minus_1 == doctest::Approx(std::sqrt(3.0)));
  CHECK(r.inequality_pass);
  CHECK(r.half_d_times_s == doctest::Approx(48.0)); // the extremal configuration

  // a small random subset expands well above d/2
  std::mt19937_64 rng(23);
  std::vector<uint32_t> ids;
  while (ids.size() < 10) {
    uint32_t v = static_cast<uint32_t>(rng() % 720);
    if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
  }
  auto rr = kahale_vertex_audit(inst.x_graph, Subset::of(inst.x_graph, ids), 2);
  CHECK(rr.inequality_pass);
  CHECK(static_cast<double>(rr.boundary) > rr.half_d_times_s);

  // a ball within the girth radius looks like a tree: boundary near d|S|
  std::vector<uint32_t> ball = {0};
  for (uint32_t i = inst.x_graph.adj_off[0]; i < inst.x_graph.adj_off[1]; ++i)
    ball.push_back(inst.x_graph.edst[inst.x_graph.adj_edge[i]]);
  auto rb = kahale_vertex_audit(inst.x_graph, Subset::of(inst.x_graph, ball), 2);
  CHECK(rb.s == 5);
  CHECK(rb.boundary == 17); // center + shell + 12 outer neighbours
  CHECK(rb.inequality_pass);

  CHECK_THROWS_AS(kahale_vertex_audit(inst.x_graph, y_subset(), 12), std::invalid_argument);
}
