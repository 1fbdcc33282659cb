#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramagraph/graph.hpp"

namespace ramagraph {

/// Exact 128-bit walk counter; additions and multiplications throw
/// std::overflow_error instead of wrapping.
class Count {
public:
  Count() : v_(0) {}
  Count(uint64_t v) : v_(v) {}

  Count operator+(Count o) const;
  Count& operator+=(Count o) { return *this = *this + o; }
  Count operator-(Count o) const; // requires *this >= o
  Count operator*(Count o) const;
  bool operator==(Count o) const { return v_ == o.v_; }
  bool operator!=(Count o) const { return v_ != o.v_; }
  bool operator<(Count o) const { return v_ < o.v_; }
  bool operator<=(Count o) const { return v_ <= o.v_; }
  bool operator>=(Count o) const { return v_ >= o.v_; }

  double to_double() const;
  std::string str() const;
  unsigned __int128 raw() const { return v_; }

private:
  unsigned __int128 v_;
};

/// Vertex subset with id list and membership mask.
struct Subset {
  std::vector<uint32_t> ids;  // sorted, unique
  std::vector<uint8_t> mask;  // size n

  size_t size() const { return ids.size(); }
  static Subset of(const Graph& g, std::vector<uint32_t> ids);
  static Subset from_mask(const Graph& g, const std::vector<uint8_t>& mask);
};

/// Neighbourhood statistics of a subset Y: for every vertex x with at least
/// one edge into Y (x may itself lie in Y), the number of edges from x into
/// Y, counted with multiplicity.
struct NeighborProfile {
  std::vector<uint32_t> boundary;          // N(Y), sorted
  std::map<uint64_t, uint64_t> histogram;  // edges-into-Y count -> #vertices
  bool has_unique_neighbor = false;        // some count == 1
  bool has_odd_neighbor = false;           // some count odd
};

NeighborProfile neighbor_profile(const Graph& g, const Subset& y);

/// Exact rational with float view.
struct Ratio {
  int64_t num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// (directed edges inside S) / |S|.
Ratio induced_average_degree(const Graph& g, const Subset& s);

/// Non-backtracking path counts: total[l] is the number of length-l
/// non-backtracking edge sequences in the graph; when a subset is supplied,
/// within[l] counts paths of the induced subgraph and endpoints[l] counts
/// paths of the full graph that start and end in the subset. Entries are
/// indexed 1..l_max (index 0 unused).
struct WalkCounts {
  unsigned l_max = 0;
  std::vector<Count> total;
  std::vector<Count> within;
  std::vector<Count> endpoints;
};

WalkCounts nb_counts(const Graph& g, unsigned l_max, const Subset* s = nullptr);

/// Edge-geometric-mean degree audit: checks M_l >= m (dtilde - 1)^(l-1) for
/// every l <= l_max, dtilde >= dbar, and for bipartite input additionally
/// dtilde - 1 >= sqrt((dbar_L - 1)(dbar_R - 1)). Requires min degree >= 2.
struct MooreReport {
  uint64_t directed_edges = 0;
  double d_tilde = 0, d_bar = 0;
  bool regular = false;
  bool dtilde_ge_dbar = false;
  std::optional<bool> bipartite_comparison; // set iff input is bipartite
  struct PerL {
    unsigned l;
    Count observed;
    double bound;
    bool pass;
  };
  std::vector<PerL> rows;
  bool pass = false;
};

MooreReport moore_audit(const Graph& g, unsigned l_max);

/// Builds the length-l non-backtracking counting operators A_l by direct
/// path counting and checks, in exact integers, A_1 = A, A^2 = d I + A_2 and
/// A A_l = (d-1) A_{l-1} + A_{l+1} for 2 <= l < l_max. On graphs with at
/// most spectral_limit vertices additionally compares each counted A_l
/// against its Chebyshev closed form evaluated on the adjacency spectrum.
/// Requires a d-regular graph with d >= 2.
struct ChebyshevReport {
  bool identities_pass = false;
  bool spectral_pass = false;   // true when skipped
  bool spectral_checked = false;
  unsigned failed_l = 0;
  std::string detail;
  double max_spectral_error = 0;
};

ChebyshevReport chebyshev_identity_audit(const Graph& g, unsigned l_max, double tol,
                                         uint32_t spectral_limit = 200);

/// Checks M_l(S, X) <= |S| (l+3) (d-1)^(l/2) for a d-regular graph
/// (Ramanujan certification is the caller's responsibility) under the
/// admissibility condition |S| (d-1)^(l/2) <= n.
struct KahaleWalkReport {
  unsigned l = 0;
  Count observed;
  double bound = 0;
  double slack = 0; // bound - observed
  bool pass = false;
};

KahaleWalkReport kahale_walk_bound_audit(const Graph& g, const Subset& s, unsigned l);

/// Vertex-expansion audit of a subset S in a d-regular graph: splits N(S)
/// into vertices with >= 2 edge-endpoints in S and unique neighbours,
/// computes d' - 1 = sqrt((e/s - 1)(e/m - 1)) from the S-to-M edge count e,
/// checks d' - 1 <= (l+3)^(1/l) sqrt(d-1) (vacuous when e <= s or e <= m),
/// and reports |N(S)| against (d/2)|S|. Requires |S| (d-1)^l <= n and a
/// nonempty M.
struct KahaleVertexReport {
  uint64_t s = 0;            // |S|
  uint64_t m_multi = 0;      // |M|: >= 2 edges into S
  uint64_t m_unique = 0;     // |M'|: exactly 1 edge into S
  uint64_t boundary = 0;     // |N(S)|
  uint64_t edges_to_m = 0;   // e
  std::optional<double> d_prime_minus_1;
  double bound = 0;          // (l+3)^(1/l) sqrt(d-1)
  bool inequality_pass = false;
  double half_d_times_s = 0; // (d/2)|S|
};

KahaleVertexReport kahale_vertex_audit(const Graph& g, const Subset& s, unsigned l);

} // namespace ramagraph
