#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramagraph/graph.hpp"

namespace ramagraph {

enum class SpectrumMethod { Auto, Dense, Iterative };

/// Adjacency spectrum of a connected regular graph. The dense path returns
/// all eigenvalues sorted descending; the iterative path returns the largest
/// Ritz values by magnitude after deflating the trivial eigenvectors (the
/// constant vector, and the bipartition sign vector when present).
struct SpectrumReport {
  uint32_t degree = 0;
  bool bipartite = false;
  std::string method;             // "dense" or "iterative"
  double tol = 0;
  bool converged = true;          // iterative path convergence flag
  unsigned iterations = 0;
  std::vector<double> eigenvalues; // sorted descending
  double max_nontrivial_abs = 0;
  double ramanujan_margin = 0;     // 2 sqrt(d-1) - max nontrivial |lambda|
};

SpectrumReport adjacency_spectrum(const Graph& g, SpectrumMethod method = SpectrumMethod::Auto,
                                  double tol = 1e-9, uint32_t dense_limit = 4096);

struct RamanujanReport {
  bool pass = false;
  double bound = 0;          // 2 sqrt(d-1)
  double max_nontrivial = 0;
  double margin = 0;
  SpectrumReport spectrum;
};

/// Pass iff every nontrivial eigenvalue satisfies |lambda| <= 2 sqrt(d-1) + tol.
RamanujanReport ramanujan_audit(const Graph& g, double tol = 1e-9,
                                uint32_t dense_limit = 4096);

/// The signed indicator supported on a subgroup-quotient subset: +1 on the
/// bipartition side of y_graph containing vertex 0 (the identity), -1 on the
/// other side, 0 elsewhere in x. Throws when y_graph is not bipartite.
std::vector<int64_t> zero_eigenfunction(const Graph& x, const Graph& y_graph,
                                        const std::vector<uint32_t>& y_vertex_in_x);

struct AfZeroReport {
  bool zero = true;
  std::optional<uint32_t> first_violation;
  int64_t violation_value = 0;
};

/// Evaluates (A f)(x) in exact integer arithmetic at every vertex.
AfZeroReport verify_af_zero(const Graph& g, const std::vector<int64_t>& f);

} // namespace ramagraph
