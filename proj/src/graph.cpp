#include "ramagraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ramagraph {

bool Graph::regular(uint32_t* d) const {
  if (n == 0) return true;
  uint32_t d0 = degree(0);
  for (uint32_t v = 1; v < n; ++v)
    if (degree(v) != d0) return false;
  if (d) *d = d0;
  return true;
}

void Graph::build_index() {
  adj_off.assign(n + 1, 0);
  for (uint32_t s : esrc) ++adj_off[s + 1];
  for (uint32_t v = 0; v < n; ++v) adj_off[v + 1] += adj_off[v];
  adj_edge.assign(esrc.size(), 0);
  std::vector<uint32_t> cursor(adj_off.begin(), adj_off.end() - 1);
  for (uint32_t e = 0; e < esrc.size(); ++e) adj_edge[cursor[esrc[e]]++] = e;
}

void Graph::validate() const {
  size_t m = esrc.size();
  if (edst.size() != m || etwin.size() != m || elabel.size() != m)
    throw std::logic_error("edge arrays out of sync");
  for (uint32_t e = 0; e < m; ++e) {
    if (esrc[e] >= n || edst[e] >= n) throw std::logic_error("edge endpoint out of range");
    uint32_t t = etwin[e];
    if (t >= m || t == e) throw std::logic_error("edge involution must be fixed-point free");
    if (etwin[t] != e) throw std::logic_error("edge involution is not an involution");
    if (esrc[t] != edst[e] || edst[t] != esrc[e])
      throw std::logic_error("twin edge does not reverse the edge");
  }
}

Graph Graph::from_undirected(uint32_t n,
                             const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  Graph g;
  g.n = n;
  g.esrc.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    uint32_t e = static_cast<uint32_t>(g.esrc.size());
    g.esrc.push_back(u); g.edst.push_back(v);
    g.esrc.push_back(v); g.edst.push_back(u);
    g.etwin.push_back(e + 1); g.etwin.push_back(e);
    g.elabel.push_back(-1); g.elabel.push_back(-1);
  }
  g.build_index();
  g.validate();
  return g;
}

Graph cayley_graph(const GroupClosure& g, const std::vector<ProjectiveMatrix>& gens) {
  Graph x;
  x.n = static_cast<uint32_t>(g.size());
  if (gens.empty()) {
    x.build_index();
    return x;
  }
  size_t k = gens.size();
  // pair each generator index with the index holding its inverse
  std::vector<uint32_t> pair_of(k, UINT32_MAX);
  for (size_t i = 0; i < k; ++i) {
    if (gens[i].is_identity())
      throw std::invalid_argument("identity generator would create a fixed edge");
    if (pair_of[i] != UINT32_MAX) continue;
    ProjectiveMatrix inv = gens[i].inverse();
    bool found = false;
    for (size_t j = 0; j < k; ++j) {
      if (pair_of[j] != UINT32_MAX) continue;
      if (gens[j] == inv) {
        pair_of[i] = static_cast<uint32_t>(j);
        pair_of[j] = static_cast<uint32_t>(i);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("generator set is not inverse-closed");
  }
  // permutation action x -> g_j x on element ids
  std::vector<std::vector<uint32_t>> perm(k, std::vector<uint32_t>(x.n));
  for (size_t j = 0; j < k; ++j)
    for (uint32_t v = 0; v < x.n; ++v) {
      auto id = g.find(gens[j] * g.elements[v]);
      if (!id) throw std::invalid_argument("generator does not stabilize the closure");
      perm[j][v] = *id;
    }
  size_t m = static_cast<size_t>(x.n) * k;
  x.esrc.resize(m); x.edst.resize(m); x.etwin.resize(m); x.elabel.resize(m);
  for (uint32_t v = 0; v < x.n; ++v)
    for (size_t j = 0; j < k; ++j) {
      size_t e = static_cast<size_t>(v) * k + j;
      x.esrc[e] = v;
      x.edst[e] = perm[j][v];
      x.elabel[e] = static_cast<int32_t>(j);
      x.etwin[e] = static_cast<uint32_t>(static_cast<size_t>(perm[j][v]) * k + pair_of[j]);
    }
  x.build_index();
  x.validate();
  return x;
}

std::optional<uint64_t> girth(const Graph& g) {
  if (g.n == 0) return std::nullopt;
  size_t m = g.directed_edges();
  // self loops and parallel pairs first
  for (uint32_t e = 0; e < m; ++e)
    if (g.esrc[e] == g.edst[e]) return 1;
  {
    std::vector<std::pair<uint32_t, uint32_t>> und;
    und.reserve(m / 2);
    for (uint32_t e = 0; e < m; ++e)
      if (e < g.etwin[e])
        und.emplace_back(std::min(g.esrc[e], g.edst[e]), std::max(g.esrc[e], g.edst[e]));
    std::sort(und.begin(), und.end());
    if (std::adjacent_find(und.begin(), und.end()) != und.end()) return 2;
  }

  const uint64_t INF = std::numeric_limits<uint64_t>::max();
  uint64_t best = INF;
  std::vector<uint32_t> dist(g.n), stamp(g.n, 0), tree_in(g.n);
  uint32_t cur_stamp = 0;
  std::deque<uint32_t> queue;
  for (uint32_t r = 0; r < g.n && best > 3; ++r) {
    ++cur_stamp;
    queue.clear();
    queue.push_back(r);
    stamp[r] = cur_stamp;
    dist[r] = 0;
    tree_in[r] = UINT32_MAX;
    while (!queue.empty()) {
      uint32_t u = queue.front();
      queue.pop_front();
      if (best != INF && static_cast<uint64_t>(dist[u]) * 2 >= best) break;
      for (uint32_t i = g.adj_off[u]; i < g.adj_off[u + 1]; ++i) {
        uint32_t e = g.adj_edge[i];
        if (tree_in[u] != UINT32_MAX && e == g.etwin[tree_in[u]]) continue;
        uint32_t v = g.edst[e];
        if (stamp[v] != cur_stamp) {
          stamp[v] = cur_stamp;
          dist[v] = dist[u] + 1;
          tree_in[v] = e;
          queue.push_back(v);
        } else {
          uint64_t cyc = static_cast<uint64_t>(dist[u]) + dist[v] + 1;
          if (cyc < best) best = cyc;
        }
      }
    }
  }
  if (best == INF) return std::nullopt;
  return best;
}

Bipartition bipartition(const Graph& g) {
  Bipartition b;
  b.side.assign(g.n, 0);
  std::vector<int8_t> color(g.n, -1);
  std::vector<uint32_t> parent(g.n, UINT32_MAX);
  for (uint32_t r = 0; r < g.n; ++r) {
    if (color[r] != -1) continue;
    color[r] = 0;
    std::deque<uint32_t> queue = {r};
    while (!queue.empty()) {
      uint32_t u = queue.front();
      queue.pop_front();
      for (uint32_t i = g.adj_off[u]; i < g.adj_off[u + 1]; ++i) {
        uint32_t v = g.edst[g.adj_edge[i]];
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // odd cycle witness: walk both endpoints to the root
          std::vector<uint32_t> pu, pv;
          for (uint32_t x = u; x != UINT32_MAX; x = parent[x]) pu.push_back(x);
          for (uint32_t x = v; x != UINT32_MAX; x = parent[x]) pv.push_back(x);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          b.odd_cycle = pu;
          for (size_t j = pv.size() - 1; j-- > 0;) b.odd_cycle.push_back(pv[j]);
          b.bipartite = false;
          return b;
        }
      }
    }
  }
  b.bipartite = true;
  for (uint32_t v = 0; v < g.n; ++v) b.side[v] = static_cast<uint8_t>(color[v]);
  return b;
}

std::vector<uint32_t> component_labels(const Graph& g) {
  std::vector<uint32_t> label(g.n, UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t r = 0; r < g.n; ++r) {
    if (label[r] != UINT32_MAX) continue;
    label[r] = next;
    std::deque<uint32_t> queue = {r};
    while (!queue.empty()) {
      uint32_t u = queue.front();
      queue.pop_front();
      for (uint32_t i = g.adj_off[u]; i < g.adj_off[u + 1]; ++i) {
        uint32_t v = g.edst[g.adj_edge[i]];
        if (label[v] == UINT32_MAX) {
          label[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

uint32_t component_count(const Graph& g) {
  auto l = component_labels(g);
  return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<uint8_t>& keep,
                       std::vector<uint32_t>* old_of_new) {
  if (keep.size() != g.n) throw std::invalid_argument("mask size mismatch");
  std::vector<uint32_t> new_id(g.n, UINT32_MAX);
  Graph s;
  for (uint32_t v = 0; v < g.n; ++v)
    if (keep[v]) {
      new_id[v] = s.n++;
      if (old_of_new) old_of_new->push_back(v);
    }
  std::vector<uint32_t> new_edge(g.directed_edges(), UINT32_MAX);
  for (uint32_t e = 0; e < g.directed_edges(); ++e) {
    if (!keep[g.esrc[e]] || !keep[g.edst[e]]) continue;
    new_edge[e] = static_cast<uint32_t>(s.esrc.size());
    s.esrc.push_back(new_id[g.esrc[e]]);
    s.edst.push_back(new_id[g.edst[e]]);
    s.elabel.push_back(g.elabel[e]);
    s.etwin.push_back(0); // patched below
  }
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    if (new_edge[e] != UINT32_MAX) s.etwin[new_edge[e]] = new_edge[g.etwin[e]];
  s.build_index();
  s.validate();
  return s;
}

Graph peel_degree_one(const Graph& g, std::vector<uint32_t>* old_of_new) {
  std::vector<uint8_t> keep(g.n, 1);
  std::vector<uint32_t> deg(g.n);
  for (uint32_t v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t v = 0; v < g.n; ++v) {
      if (!keep[v] || deg[v] > 1) continue;
      keep[v] = 0;
      changed = true;
      for (uint32_t i = g.adj_off[v]; i < g.adj_off[v + 1]; ++i) {
        uint32_t w = g.edst[g.adj_edge[i]];
        if (keep[w] && deg[w] > 0) --deg[w];
      }
      deg[v] = 0;
    }
  }
  return induced_subgraph(g, keep, old_of_new);
}

std::string to_dot(const Graph& g, const std::vector<std::string>* vertex_labels) {
  std::string s = "graph {\n";
  if (vertex_labels) {
    for (uint32_t v = 0; v < g.n; ++v)
      s += "  " + std::to_string(v) + " [label=\"" + (*vertex_labels)[v] + "\"];\n";
  }
  for (uint32_t e = 0; e < g.directed_edges(); ++e) {
    if (e >= g.etwin[e]) continue;
    s += "  " + std::to_string(g.esrc[e]) + " -- " + std::to_string(g.edst[e]);
    if (g.elabel[e] >= 0) s += " [label=\"" + std::to_string(g.elabel[e]) + "\"]";
    s += ";\n";
  }
  return s + "}\n";
}

std::string edges_csv(const Graph& g) {
  std::string s = "src,dst,label\n";
  for (uint32_t e = 0; e < g.directed_edges(); ++e) {
    s += std::to_string(g.esrc[e]) + "," + std::to_string(g.edst[e]) + ",";
    s += std::to_string(g.elabel[e]) + "\n";
  }
  return s;
}

} // namespace ramagraph
