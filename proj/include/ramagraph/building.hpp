#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ramagraph/poly.hpp"

namespace ramagraph {

/// Square matrix of polynomials over F_q, row major.
struct PolyMatrix {
  unsigned n = 0;
  Field fq;
  std::vector<Polynomial> a;

  const Polynomial& at(unsigned i, unsigned j) const { return a[i * n + j]; }
  Polynomial& at(unsigned i, unsigned j) { return a[i * n + j]; }
  PolyMatrix operator*(const PolyMatrix& o) const;
  static PolyMatrix identity(unsigned n, const Field& fq);
  static PolyMatrix from_int_table(unsigned n, const Field& fq,
                                   const std::vector<std::vector<int64_t>>& entries);
  std::string str(const std::string& var = "t") const;
};

Polynomial poly_det(const PolyMatrix& m);

/// Canonical representative of a homothety class of lattices: upper
/// triangular with diagonal t^(m_i), off-diagonal entries of row i reduced
/// modulo t^(m_i), and unit t-power content. Two vertices are equal iff the
/// matrices are identical.
struct BuildingVertex {
  PolyMatrix mat;

  unsigned dim() const { return mat.n; }
  /// Sum of diagonal exponents mod n.
  unsigned color() const;
  std::string key() const;
  bool operator==(const BuildingVertex& o) const { return key() == o.key(); }
};

/// The alphabet of neighbour moves at any vertex: upper-triangular matrices
/// with diagonal exponents in {0,1}, zero column above every t-diagonal,
/// excluding the identity and the scalar t. Size q+1 for n=2 and
/// 2(q^2+q+1) for n=3.
std::vector<PolyMatrix> neighbor_alphabet(unsigned n, const Field& fq);

/// Reduces any nonsingular polynomial matrix to the canonical vertex of the
/// lattice spanned by its columns over F_q[[t]]. Implemented as the Hermite
/// normal form over F_q[t] of the matrix extended by t^v I (v the t-adic
/// valuation of the determinant), followed by the content strip.
BuildingVertex canonical_vertex(const PolyMatrix& m);

BuildingVertex standard_vertex(unsigned n, const Field& fq);

/// {canonical(A_v A) : A in alphabet}, deduplicated; exactly q+1 vertices
/// for n = 2.
std::vector<BuildingVertex> neighbors(const BuildingVertex& v);

/// Ball of the given radius around the standard vertex, breadth first with
/// deterministic ids. Adjacency lists are stored for interior vertices
/// (depth < radius); boundary vertices are not expanded.
struct Ball {
  unsigned n = 0;
  Field fq;
  unsigned radius = 0;
  std::vector<BuildingVertex> verts;
  std::vector<uint32_t> depth;
  std::vector<std::vector<uint32_t>> adj;
  std::unordered_map<std::string, uint32_t> index;

  size_t size() const { return verts.size(); }
  std::optional<uint32_t> find(const BuildingVertex& v) const;
};

Ball build_ball(unsigned n, const Field& fq, unsigned radius);

/// Image of a vertex of the building over F_q((s)) inside the building over
/// F_q((t)) under s -> t^2. Canonical forms map to canonical forms;
/// distances from the standard vertex double.
BuildingVertex ramified_image(const BuildingVertex& v);

/// Coefficient-wise field inclusion F_q -> F_Q; adjacency preserving.
BuildingVertex unramified_image(const BuildingVertex& v, const FieldEmbedding& e);

struct TreeAuditReport {
  bool pass = false;
  uint64_t audited = 0;   // interior boundary vertices examined
  std::string detail;
};

/// Interior audit over a radius-r ball: every vertex adjacent to the
/// ramified image Z of the subdivided tree touches Z by exactly two edges,
/// and the constructive second neighbour M A D(A) lies in Z.
TreeAuditReport audit_no_unique_neighbors(unsigned n, const Field& fq, unsigned radius);

/// Generic no-unique-neighbour count against an arbitrary vertex set Z
/// given by keys; used for control cases.
TreeAuditReport count_z_neighbors(const Ball& ball,
                                  const std::unordered_set<std::string>& z_keys,
                                  uint64_t expected_count);

/// Interior audit of the unramified embedding: every image vertex has
/// exactly q+1 of its q^2+1 neighbours inside the image.
TreeAuditReport audit_internal_degree(const Field& fq, unsigned radius);

std::string ball_dot(const Ball& ball, const std::string& var = "t",
                     const std::unordered_set<std::string>* highlight = nullptr);

} // namespace ramagraph
