#include "doctest.h"

#include <random>
#include <set>

#include "ramagraph/building.hpp"
#include "support.hpp"

using namespace ramagraph;
using namespace testsupport;

namespace {

Field f2() { return FieldSpec::make(2); }
Field f3() { return FieldSpec::make(3); }

uint64_t tree_ball_size(uint64_t q, unsigned r) {
  // 1 + (q+1)(q^r - 1)/(q - 1)
  uint64_t geom = 0, power = 1;
  for (unsigned i = 0; i < r; ++i) { geom += power; power *= q; }
  return 1 + (q + 1) * geom;
}

} // namespace

TEST_CASE("neighbor alphabet sizes") {
  CHECK(neighbor_alphabet(2, f3()).size() == 4);
  CHECK(neighbor_alphabet(2, f2()).size() == 3);
  CHECK(neighbor_alphabet(3, f2()).size() == 14);
  CHECK(neighbor_alphabet(3, f3()).size() == 26); // 2(q^2+q+1)
  CHECK_THROWS_AS(neighbor_alphabet(1, f2()), std::invalid_argument);

  // n=2: diag(1,t) plus the q matrices ((t,a),(0,1))
  auto alpha = neighbor_alphabet(2, f3());
  int diag_count = 0, upper_count = 0;
  for (const auto& a : alpha) {
    if (a.at(0, 0).degree() == 0) {
      CHECK(a.at(1, 1).degree() == 1);
      CHECK(a.at(0, 1).is_zero());
      ++diag_count;
    } else {
      CHECK(a.at(0, 0).degree() == 1);
      CHECK(a.at(1, 1).degree() == 0);
      CHECK(a.at(0, 1).degree() <= 0);
      ++upper_count;
    }
  }
  CHECK(diag_count == 1);
  CHECK(upper_count == 3);
}

TEST_CASE("canonicalization") {
  Field f = f3();
  PolyMatrix id = PolyMatrix::identity(2, f);
  CHECK(canonical_vertex(id).key() == standard_vertex(2, f).key());

  // homothety strip: diag(t, t) ~ identity
  PolyMatrix tt = PolyMatrix::from_int_table(2, f, {{0, 1}, {0}, {0}, {0, 1}});
  CHECK(canonical_vertex(tt).key() == standard_vertex(2, f).key());

  // diag(1,t)^2 = diag(1, t^2)
  PolyMatrix d1t = PolyMatrix::from_int_table(2, f, {{1}, {0}, {0}, {0, 1}});
  BuildingVertex sq = canonical_vertex(d1t * d1t);
  CHECK(sq.mat.at(0, 0).degree() == 0);
  CHECK(sq.mat.at(1, 1).degree() == 2);
  CHECK(sq.mat.at(0, 1).is_zero());

  // units of the valuation ring act trivially: diag(1+t, 1) ~ identity
  PolyMatrix unit = PolyMatrix::from_int_table(2, f, {{1, 1}, {0}, {0}, {1}});
  CHECK(canonical_vertex(unit).key() == standard_vertex(2, f).key());

  PolyMatrix sing = PolyMatrix::from_int_table(2, f, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  CHECK_THROWS_AS(canonical_vertex(sing), std::invalid_argument);
}

TEST_CASE("canonicalization is a class invariant") {
  // idempotent; stable under t-power scaling and unimodular column mixes
  Field f = f3();
  std::mt19937_64 rng(31);
  auto random_poly = [&](int maxdeg) {
    std::vector<int64_t> c(rng() % (maxdeg + 1) + 1);
    for (auto& x : c) x = static_cast<int64_t>(rng() % 3);
    return Polynomial::from_ints(f, c);
  };
  int tested = 0;
  while (tested < 30) {
    PolyMatrix m;
    m.n = 2;
    m.fq = f;
    m.a = {random_poly(3), random_poly(3), random_poly(3), random_poly(3)};
    if (poly_det(m).is_zero()) continue;
    ++tested;
    BuildingVertex v = canonical_vertex(m);
    CHECK(canonical_vertex(v.mat).key() == v.key());

    // scale by t^2
    PolyMatrix scaled = m;
    Polynomial t2 = Polynomial::from_ints(f, {0, 0, 1});
    for (auto& p : scaled.a) p = p * t2;
    CHECK(canonical_vertex(scaled).key() == v.key());

    // right-multiply by a unimodular column operation [[1, g],[0, 1]]
    PolyMatrix u = PolyMatrix::identity(2, f);
    u.at(0, 1) = random_poly(2);
    CHECK(canonical_vertex(m * u).key() == v.key());
    PolyMatrix swap;
    swap.n = 2;
    swap.fq = f;
    swap.a = {Polynomial(f), Polynomial::from_ints(f, {1}),
              Polynomial::from_ints(f, {2}), Polynomial(f)};
    CHECK(canonical_vertex(m * swap).key() == v.key());
  }
}

TEST_CASE("neighbors and colors") {
  for (Field f : {f2(), f3()}) {
    BuildingVertex root = standard_vertex(2, f);
    auto nb = neighbors(root);
    CHECK(nb.size() == f->order() + 1);
    for (const auto& w : nb) {
      CHECK(w.color() == 1);
      // adjacency is symmetric
      bool back = false;
      for (const auto& z : neighbors(w))
        if (z.key() == root.key()) back = true;
      CHECK(back);
    }
  }
  // n=3: colors move by the diagonal degree sum
  auto nb3 = neighbors(standard_vertex(3, f2()));
  CHECK(nb3.size() == 14);
  for (const auto& w : nb3) CHECK((w.color() == 1 || w.color() == 2));
}

TEST_CASE("ball sizes match the tree count") {
  for (Field f : {f2(), f3()}) {
    for (unsigned r = 1; r <= 5; ++r) {
      Ball b = build_ball(2, f, r);
      CHECK(b.size() == tree_ball_size(f->order(), r));
      // colors alternate along edges
      for (uint32_t v = 0; v < b.size(); ++v)
        for (uint32_t w : b.adj[v])
          CHECK(b.verts[v].color() != b.verts[w].color());
      // the ball of a tree is a tree: interior adjacency has no cycles
      uint64_t interior_edges = 0;
      for (uint32_t v = 0; v < b.size(); ++v) interior_edges += b.adj[v].size();
      // every interior vertex lists all its neighbours; each edge between
      // interior vertices is listed twice, edges to the boundary once
      uint64_t boundary = 0;
      for (uint32_t v = 0; v < b.size(); ++v)
        if (b.depth[v] == r) ++boundary;
      CHECK(interior_edges == 2 * (b.size() - 1 - boundary) + boundary);
    }
  }
  Ball b3 = build_ball(3, f2(), 2);
  CHECK(b3.depth.back() == 2);
}

TEST_CASE("ramified embedding doubles distances") {
  Field f = f3();
  Ball bh = build_ball(2, f, 2);
  Ball bg = build_ball(2, f, 4);

  // images land in the ball with doubled depth
  for (uint32_t v = 0; v < bh.size(); ++v) {
    BuildingVertex img = ramified_image(bh.verts[v]);
    auto id = bg.find(img);
    REQUIRE(id.has_value());
    CHECK(bg.depth[*id] == 2 * bh.depth[v]);
  }

  // diag(1, s) -> diag(1, t^2) via the midpoint diag(1, t)
  BuildingVertex d1s = canonical_vertex(
      PolyMatrix::from_int_table(2, f, {{1}, {0}, {0}, {0, 1}}));
  BuildingVertex img = ramified_image(d1s);
  CHECK(img.mat.at(1, 1).degree() == 2);
  auto mid_id = bg.find(d1s); // diag(1, t) read in the target variable
  auto img_id = bg.find(img);
  REQUIRE(mid_id.has_value());
  REQUIRE(img_id.has_value());
  bool adj1 = false, adj2 = false;
  for (uint32_t w : bg.adj[0]) adj1 = adj1 || w == *mid_id;
  for (uint32_t w : bg.adj[*mid_id]) adj2 = adj2 || w == *img_id;
  CHECK(adj1);
  CHECK(adj2);

  // pairwise distance doubling over the radius-2 source ball
  Graph gh = [&] {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t v = 0; v < bh.size(); ++v)
      for (uint32_t w : bh.adj[v])
        if (v < w) e.emplace_back(v, w);
    return Graph::from_undirected(static_cast<uint32_t>(bh.size()), e);
  }();
  Graph gg = [&] {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t v = 0; v < bg.size(); ++v)
      for (uint32_t w : bg.adj[v])
        if (v < w) e.emplace_back(v, w);
    return Graph::from_undirected(static_cast<uint32_t>(bg.size()), e);
  }();
  for (uint32_t a = 0; a < bh.size(); ++a) {
    auto dh = bfs_distances(gh, a);
    auto dg = bfs_distances(gg, *bg.find(ramified_image(bh.verts[a])));
    for (uint32_t b = 0; b < bh.size(); ++b) {
      if (dh[b] == UINT32_MAX) continue;
      uint32_t ib = *bg.find(ramified_image(bh.verts[b]));
      CHECK(dg[ib] == 2 * dh[b]);
    }
  }
}

TEST_CASE("unramified embedding preserves adjacency and distance") {
  Field fq = f2();
  Field fq2 = FieldSpec::make(2, 2);
  FieldEmbedding emb = FieldEmbedding::find(fq, fq2);
  Ball bh = build_ball(2, fq, 3);
  Ball bg = build_ball(2, fq2, 3);

  std::set<std::string> image_keys;
  for (uint32_t v = 0; v < bh.size(); ++v) {
    BuildingVertex img = unramified_image(bh.verts[v], emb);
    auto id = bg.find(img);
    REQUIRE(id.has_value());
    CHECK(bg.depth[*id] == bh.depth[v]);
    CHECK(image_keys.insert(img.key()).second); // injective
  }

  // diag(1, t) over F_2 maps to diag(1, t) over F_4, adjacent to the root
  BuildingVertex d1t = canonical_vertex(
      PolyMatrix::from_int_table(2, fq, {{1}, {0}, {0}, {0, 1}}));
  auto id = bg.find(unramified_image(d1t, emb));
  REQUIRE(id.has_value());
  CHECK(bg.depth[*id] == 1);
}

TEST_CASE("no-unique-neighbor audits") {
  for (Field f : {f2(), f3()}) {
    auto rep = audit_no_unique_neighbors(2, f, 4);
    CHECK(rep.pass);
    CHECK(rep.audited > 0);
  }
  auto rep3 = audit_no_unique_neighbors(3, f2(), 2);
  CHECK(rep3.pass);
  CHECK(rep3.audited > 0);

  // control: a single-vertex set has unique neighbours and must fail
  Ball bg = build_ball(2, f3(), 3);
  std::unordered_set<std::string> z = {standard_vertex(2, f3()).key()};
  auto control = count_z_neighbors(bg, z, 2);
  CHECK_FALSE(control.pass);
}

TEST_CASE("internal degree audits") {
  auto r2 = audit_internal_degree(f2(), 3);
  CHECK(r2.pass);
  CHECK(r2.audited > 0);
  auto r3 = audit_internal_degree(f3(), 2);
  CHECK(r3.pass);
  CHECK(r3.audited > 0);
}

TEST_CASE("ball export carries matrix labels") {
  Ball b = build_ball(2, f2(), 2);
  std::string dot = ball_dot(b);
  CHECK(dot.find("label=\"((1, 0), (0, t))\"") != std::string::npos);
}
