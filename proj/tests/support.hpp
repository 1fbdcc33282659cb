#pragma once

// Test-side oracles and generators. Everything here recomputes expected
// values by brute force, independently of the library paths under test.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ramagraph/construction.hpp"
#include "ramagraph/graph.hpp"
#include "ramagraph/poly.hpp"

namespace testsupport {

using namespace ramagraph;

/// The q=3, m=1, htilde=s+1 instance, built once per binary.
const Instance& q3_instance();

/// Irreducibility by trial division: tries every monic divisor of degree
/// 1..deg/2 by long division.
bool oracle_irreducible(const Polynomial& f);

/// The set of squares of a field, by exhaustive squaring.
std::set<uint64_t> oracle_square_indices(const Field& f);

/// Shortest l >= 1 with a closed non-backtracking walk of length l, by a
/// per-start-vertex edge DP; nullopt when none exists up to l_cap.
std::optional<uint64_t> oracle_nb_girth(const Graph& g, unsigned l_cap);

/// BFS distances from a start vertex (UINT32_MAX where unreachable).
std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t start);

/// Random multigraph of the pairing model on n vertices of degree d,
/// resampled until free of self loops (parallel edges allowed). n*d even.
Graph random_regular_graph(uint32_t n, uint32_t d, uint64_t seed);

/// Erdos-Renyi-style simple graph with expected average degree avg, then
/// peeled to minimum degree >= 2 and restricted to the largest component.
Graph random_peeled_graph(uint32_t n, double avg, uint64_t seed);

} // namespace testsupport
