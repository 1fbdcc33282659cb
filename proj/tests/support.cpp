#include "support.hpp"

#include <algorithm>
#include <deque>

namespace testsupport {

const Instance& q3_instance() {
  static const Instance inst =
      build_instance(InstanceParams::create(3, 1, std::vector<int64_t>{1, 1}));
  return inst;
}

bool oracle_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("constant polynomial");
  const Field& fq = f.base();
  for (long d = 1; d <= f.degree() / 2; ++d)
    for (const Polynomial& g : monic_polynomials(fq, static_cast<unsigned>(d)))
      if (f.divmod(g).second.is_zero()) return false;
  return true;
}

std::set<uint64_t> oracle_square_indices(const Field& f) {
  std::set<uint64_t> out;
  for (uint64_t i = 0; i < f->order(); ++i) {
    FieldElement a = f->element_at(i);
    out.insert(f->index_of(a * a));
  }
  return out;
}

std::optional<uint64_t> oracle_nb_girth(const Graph& g, unsigned l_cap) {
  uint64_t best = UINT64_MAX;
  size_t m = g.directed_edges();
  std::vector<int64_t> w(m), nxt(m), in_sum(g.n);
  for (uint32_t start = 0; start < g.n; ++start) {
    for (size_t e = 0; e < m; ++e) w[e] = g.esrc[e] == start ? 1 : 0;
    for (unsigned l = 1; l <= l_cap && l < best; ++l) {
      if (l > 1) {
        std::fill(in_sum.begin(), in_sum.end(), 0);
        for (size_t e = 0; e < m; ++e) in_sum[g.edst[e]] += w[e];
        for (size_t e = 0; e < m; ++e) nxt[e] = in_sum[g.esrc[e]] - w[g.etwin[e]];
        std::swap(w, nxt);
      }
      int64_t closed = 0;
      for (size_t e = 0; e < m; ++e)
        if (g.edst[e] == start) closed += w[e];
      if (closed > 0) {
        best = std::min<uint64_t>(best, l);
        break;
      }
    }
  }
  if (best == UINT64_MAX) return std::nullopt;
  return best;
}

std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t start) {
  std::vector<uint32_t> dist(g.n, UINT32_MAX);
  dist[start] = 0;
  std::deque<uint32_t> queue = {start};
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    for (uint32_t i = g.adj_off[u]; i < g.adj_off[u + 1]; ++i) {
      uint32_t v = g.edst[g.adj_edge[i]];
      if (dist[v] == UINT32_MAX) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Graph random_regular_graph(uint32_t n, uint32_t d, uint64_t seed) {
  if ((static_cast<uint64_t>(n) * d) % 2 != 0)
    throw std::invalid_argument("n*d must be even");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<uint32_t> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (uint32_t v = 0; v < n; ++v)
      for (uint32_t i = 0; i < d; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    bool loop = false;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) { loop = true; break; }
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (loop) continue;
    return Graph::from_undirected(n, edges);
  }
  throw std::runtime_error("pairing model kept producing self loops");
}

Graph random_peeled_graph(uint32_t n, double avg, uint64_t seed) {
  std::mt19937_64 rng(seed);
  double p = avg / static_cast<double>(n - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  Graph g = Graph::from_undirected(n, edges);
  g = peel_degree_one(g);
  if (g.n == 0) throw std::runtime_error("peeling removed the whole graph");
  auto labels = component_labels(g);
  uint32_t comps = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<uint64_t> sizes(comps, 0);
  for (uint32_t l : labels) ++sizes[l];
  uint32_t biggest =
      static_cast<uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<uint8_t> keep(g.n);
  for (uint32_t v = 0; v < g.n; ++v) keep[v] = labels[v] == biggest;
  return induced_subgraph(g, keep);
}

} // namespace testsupport
