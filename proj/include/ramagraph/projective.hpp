#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramagraph/field.hpp"

namespace ramagraph {

/// Element of PGL_n over a finite field: an invertible n x n matrix
/// canonicalized modulo scalars so that the first nonzero entry in row-major
/// order equals 1. Two elements are equal iff their entries are identical.
class ProjectiveMatrix {
public:
  ProjectiveMatrix() = default;
  /// Row-major entries; canonicalizes and rejects singular input.
  static ProjectiveMatrix make(const Field& f, unsigned n, std::vector<FieldElement> entries);
  static ProjectiveMatrix from_ints(const Field& f, unsigned n, const std::vector<int64_t>& entries);
  static ProjectiveMatrix identity(const Field& f, unsigned n);

  unsigned dim() const { return n_; }
  const Field& field() const { return f_; }
  const FieldElement& at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
  bool is_identity() const;

  ProjectiveMatrix operator*(const ProjectiveMatrix& o) const;
  /// Inverse modulo scalars; n = 2 uses the adjugate, larger n Gauss-Jordan.
  ProjectiveMatrix inverse() const;

  bool operator==(const ProjectiveMatrix& o) const;
  bool operator!=(const ProjectiveMatrix& o) const { return !(*this == o); }

  /// Flattened padded coefficient key; identical iff equal as group elements.
  std::string key() const;
  std::string str() const;

private:
  void canonicalize();
  FieldElement det() const;

  Field f_;
  unsigned n_ = 0;
  std::vector<FieldElement> a_;
};

/// Subgroup generated by a list of elements, enumerated by breadth-first
/// closure from the identity, multiplying on the left by each generator in
/// list order. Element ids follow discovery order; the identity has id 0 and
/// depth records the BFS word length.
struct GroupClosure {
  std::vector<ProjectiveMatrix> elements;
  std::vector<uint32_t> depth;
  std::vector<ProjectiveMatrix> generators;
  std::unordered_map<std::string, uint32_t> index;

  size_t size() const { return elements.size(); }
  std::optional<uint32_t> find(const ProjectiveMatrix& m) const;
};

/// Throws std::length_error when the closure would exceed cap.
GroupClosure generate_closure(const std::vector<ProjectiveMatrix>& generators, size_t cap);

uint64_t element_order(const ProjectiveMatrix& m);

/// Histogram of multiplicative orders over the whole closure.
std::map<uint64_t, uint64_t> order_statistics(const GroupClosure& g);

} // namespace ramagraph
