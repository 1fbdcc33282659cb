#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramagraph {

class FieldSpec;
class FieldElement;

/// Shared handle to an immutable field description.
using Field = std::shared_ptr<const FieldSpec>;

/// A finite field F_{p^k}, presented for k > 1 as F_p[x]/(modulus) with a
/// monic irreducible modulus of degree k over the prime field. Elements are
/// residue polynomials stored as coefficient vectors, low degree first,
/// trailing zeros trimmed.
///
/// Orderings used throughout (for deterministic choices): residues compare
/// lexicographically on their coefficient vector padded to length k, with
/// the constant coefficient compared first.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
  /// Builds F_{p^k}. For k > 1 the modulus is the lexicographically least
  /// monic irreducible polynomial of degree k over F_p.
  static Field make(uint32_t p, uint32_t k = 1);

  /// Builds F_{p^k} with an explicit monic irreducible modulus of degree k
  /// (coefficients low degree first, length k+1). A degree-1 modulus is
  /// accepted and discarded: prime fields carry no modulus.
  static Field make(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return k_; }
  uint64_t order() const { return order_; } // p^k
  /// Monic modulus, length k+1; empty for prime fields.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  /// Two specs interoperate only if structurally identical.
  bool same_field(const FieldSpec& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(int64_t c) const; // constant c mod p
  FieldElement from_residue(const std::vector<uint32_t>& coeffs) const;
  /// Residue class of x (requires k > 1).
  FieldElement generator() const;
  /// index-th element in lexicographic residue order, index in [0, p^k).
  FieldElement element_at(uint64_t index) const;
  uint64_t index_of(const FieldElement& a) const;

  // Raw residue arithmetic on trimmed coefficient vectors.
  std::vector<uint32_t> raw_add(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
  std::vector<uint32_t> raw_sub(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
  std::vector<uint32_t> raw_neg(const std::vector<uint32_t>& a) const;
  std::vector<uint32_t> raw_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const;
  std::vector<uint32_t> raw_inv(const std::vector<uint32_t>& a) const;
  std::vector<uint32_t> raw_pow(const std::vector<uint32_t>& a, uint64_t e) const;

private:
  FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

  uint32_t p_ = 0;
  uint32_t k_ = 0;
  uint64_t order_ = 0;
  std::vector<uint32_t> modulus_;
};

/// Element of a FieldSpec. Immutable value type; arithmetic across distinct
/// fields throws.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(Field owner, std::vector<uint32_t> coeffs);

  bool valid() const { return owner_ != nullptr; }
  const Field& field() const { return owner_; }
  /// Coefficients over F_p, low degree first, no trailing zeros.
  const std::vector<uint32_t>& residue() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(uint64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  /// Lexicographic order on padded coefficient vectors, constant first.
  bool lex_less(const FieldElement& o) const;

  std::string str(const std::string& var = "x") const;

private:
  void check_same(const FieldElement& o) const;

  Field owner_;
  std::vector<uint32_t> c_;
};

/// Euler criterion: a^((p^k - 1)/2) == 1. Zero counts as a square. In
/// characteristic 2 every element is a square.
bool is_square(const FieldElement& a);

/// A square root of a; among the two roots returns the lexicographically
/// least residue. Throws std::domain_error for non-squares.
FieldElement sqrt_of(const FieldElement& a);

/// Least non-square in residue order. Throws in characteristic 2.
FieldElement least_nonsquare(const Field& f);

/// Ring homomorphism F_{p^j} -> F_{p^k} (j | k), determined by the image of
/// the source residue class of x. Constants map to constants.
class FieldEmbedding {
public:
  FieldEmbedding() = default;

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  const FieldElement& generator_image() const { return image_; }

  FieldElement operator()(const FieldElement& a) const;

  static FieldEmbedding identity(const Field& f);
  /// Embedding determined by the lexicographically least root of the source
  /// modulus in the target. Throws std::invalid_argument for incompatible
  /// towers (different characteristic, or source degree not dividing).
  static FieldEmbedding find(const Field& source, const Field& target);
  /// Embedding with an explicit, validated generator image.
  static FieldEmbedding with_image(const Field& source, const Field& target,
                                   const FieldElement& image);

private:
  Field source_, target_;
  FieldElement image_;
};

} // namespace ramagraph
