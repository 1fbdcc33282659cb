#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramagraph/projective.hpp"

namespace ramagraph {

/// Finite multigraph in edge-involution form: a set of directed edges with
/// source and target maps and an involution pairing each edge with its
/// reverse (twin(e) != e, src(twin(e)) == dst(e)). Parallel edges and self
/// loops are allowed; degrees count outgoing directed edges.
struct Graph {
  uint32_t n = 0;
  std::vector<uint32_t> esrc, edst, etwin;
  std::vector<int32_t> elabel; // generator index for Cayley graphs, else -1

  // CSR adjacency over directed edges, indexed by source vertex
  std::vector<uint32_t> adj_off, adj_edge;

  size_t directed_edges() const { return esrc.size(); }
  uint32_t degree(uint32_t v) const { return adj_off[v + 1] - adj_off[v]; }
  bool regular(uint32_t* d = nullptr) const;

  void build_index();
  /// Checks the involution axioms; throws std::logic_error on violation.
  void validate() const;

  /// Both orientations of each listed undirected edge, twins paired.
  static Graph from_undirected(uint32_t n,
                               const std::vector<std::pair<uint32_t, uint32_t>>& edges);
};

/// Cayley graph of an enumerated closure: one vertex per element id, a
/// directed edge x -> g x per generator, with the inverse-generator edge as
/// twin. Generators must be inverse-closed as a set and must not contain the
/// identity. An empty generator list yields an edgeless graph.
Graph cayley_graph(const GroupClosure& g, const std::vector<ProjectiveMatrix>& gens);

/// Length of the shortest cycle, honouring multiplicities: a self loop is a
/// 1-cycle, a parallel edge pair a 2-cycle. std::nullopt for forests.
std::optional<uint64_t> girth(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  std::vector<uint8_t> side;      // 0/1 per vertex when bipartite
  std::vector<uint32_t> odd_cycle; // witness vertex sequence otherwise
};

Bipartition bipartition(const Graph& g);

/// Component label per vertex, labels dense from 0 in first-seen order.
std::vector<uint32_t> component_labels(const Graph& g);
uint32_t component_count(const Graph& g);

/// Subgraph induced on keep (a 0/1 mask); old_of_new reports the original
/// id of each surviving vertex.
Graph induced_subgraph(const Graph& g, const std::vector<uint8_t>& keep,
                       std::vector<uint32_t>* old_of_new = nullptr);

/// Iterated removal of vertices of degree <= 1.
Graph peel_degree_one(const Graph& g, std::vector<uint32_t>* old_of_new = nullptr);

std::string to_dot(const Graph& g, const std::vector<std::string>* vertex_labels = nullptr);
std::string edges_csv(const Graph& g);

} // namespace ramagraph
