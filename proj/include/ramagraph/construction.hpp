#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramagraph/graph.hpp"
#include "ramagraph/poly.hpp"
#include "ramagraph/projective.hpp"

namespace ramagraph {

/// Parameters of one Cayley-graph instance over PGL_2(F_q[t]/h(t)):
/// an odd prime power q, a monic irreducible inert htilde(s) of degree m
/// over F_q, a non-square epsilon in F_q, and the derived data
/// h(t) = htilde(t^2), the quotient field of order q^(2m), the residue tau
/// of t in it and a square root of epsilon.
struct InstanceParams {
  Field fq;            // F_q
  unsigned m = 0;      // deg htilde
  Polynomial htilde;   // over F_q, monic irreducible, inert
  Polynomial h;        // htilde(t^2), irreducible of degree 2m
  FieldElement epsilon; // non-square in F_q
  CayleyType type = CayleyType::PglBipartite;

  Field big;           // F_{q^(2m)}
  FieldEmbedding lift; // F_q -> big
  FieldElement tau;    // root of h in big
  FieldElement sqrt_epsilon; // in big

  /// q is factored as p^e. For prime q the quotient field is presented
  /// directly as F_q[t]/h(t) with tau the residue of t; for prime powers it
  /// is presented over the prime field and tau is the lexicographically
  /// least root of the lifted h. When htilde is omitted the lexicographically
  /// least admissible parameter of degree m is searched (any type).
  /// conjugate_root selects the other square root of epsilon.
  static InstanceParams create(uint64_t q, unsigned m,
                               std::optional<std::vector<int64_t>> htilde_coeffs = std::nullopt,
                               std::optional<int64_t> epsilon = std::nullopt,
                               bool conjugate_root = false);
  static InstanceParams create(const Field& fq, const Polynomial& htilde,
                               std::optional<FieldElement> epsilon = std::nullopt,
                               bool conjugate_root = false);
};

/// The q+1 solutions (c, d) of epsilon d^2 - c^2 = 1 over F_q, enumerated
/// exhaustively, ordered by d then c in residue order.
std::vector<std::pair<FieldElement, FieldElement>>
norm_solutions(const Field& fq, const FieldElement& epsilon);

/// Generator matrices gamma_k = [[t+1, c_k - d_k i],[(c_k + d_k i)(t^2-1), t+1]]
/// and their squares delta_k, one per norm solution, with the involution
/// pairing k -> k' matching each generator with its inverse.
struct GeneratorSet {
  std::vector<ProjectiveMatrix> gammas;
  std::vector<ProjectiveMatrix> deltas;
  std::vector<uint32_t> inverse_pair; // gammas[pair[k]] == gammas[k]^-1
};

GeneratorSet build_generators(const InstanceParams& p);

/// The assembled instance: X is the Cayley graph of the gamma-closure, Y the
/// Cayley graph of the delta-closure, with Y's vertices located inside X.
struct Instance {
  InstanceParams params;
  GeneratorSet gens;
  GroupClosure x_group, y_group;
  Graph x_graph, y_graph;
  std::vector<uint32_t> y_vertex_in_x; // per y id, the x id of the same element
  std::vector<uint8_t> y_mask_in_x;    // size |X|

  uint64_t expected_x_order() const;
  uint64_t expected_y_order() const;
};

/// Builds the closures with caps of cap_factor times the predicted orders
/// and rejects instances whose closure sizes differ from the prediction.
Instance build_instance(const InstanceParams& p, double cap_factor = 2.0);

} // namespace ramagraph
