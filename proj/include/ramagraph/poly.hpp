#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramagraph/field.hpp"

namespace ramagraph {

/// Dense univariate polynomial over a finite field. Coefficients are stored
/// low degree first with the leading coefficient nonzero; the zero
/// polynomial has an empty coefficient list. The variable name is
/// presentation-only.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Field base) : base_(std::move(base)) {}
  Polynomial(Field base, std::vector<FieldElement> coeffs);

  static Polynomial from_ints(const Field& base, const std::vector<int64_t>& coeffs);
  static Polynomial variable(const Field& base); // x
  static Polynomial constant(const FieldElement& c);

  const Field& base() const { return base_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  FieldElement coeff(size_t i) const; // zero outside the stored range
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& s) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const;
  Polynomial operator%(const Polynomial& g) const { return divmod(g).second; }

  Polynomial monic() const;
  FieldElement eval(const FieldElement& x) const;
  /// f(x^j)
  Polynomial substitute_power(unsigned j) const;
  /// Coefficient-wise application of a field embedding.
  Polynomial map_coeffs(const FieldEmbedding& e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  /// Lexicographic on coefficient sequences (constant coefficient first),
  /// comparing shorter-padded; used for deterministic enumeration.
  bool lex_less(const Polynomial& o) const;

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  void check_base(const Polynomial& o) const;

  Field base_;
  std::vector<FieldElement> c_;
};

/// Monic gcd.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// f^e mod g by square-and-multiply on residues.
Polynomial mod_pow(const Polynomial& f, uint64_t e, const Polynomial& g);

/// Irreducibility over the base field: f has no irreducible factor of
/// degree <= deg f / 2, tested via gcd(x^(q^i) - x mod f, f) = 1 for
/// 1 <= i <= floor(deg f / 2). Constant input throws.
bool is_irreducible(const Polynomial& f);

/// Quadratic residue symbol of f modulo a monic irreducible g over a field
/// of odd characteristic: f^((q^deg g - 1)/2) mod g, read off as -1, 0 or 1.
int legendre(const Polynomial& f, const Polynomial& g);

/// Checks (f/g) = (-1)^((q-1)/2 * deg f * deg g) (g/f) for distinct monic
/// irreducibles f, g.
bool reciprocity_holds(const Polynomial& f, const Polynomial& g);

/// Monic associate of (c*u + d)^(deg h) * h((a*u + b)/(c*u + d)).
/// Requires a*d - b*c != 0 and h != 0.
Polynomial mobius_substitute(const Polynomial& h, const FieldElement& a,
                             const FieldElement& b, const FieldElement& c,
                             const FieldElement& d);

/// True iff the monic irreducible htilde(s) stays irreducible under the
/// substitution s -> t^2, i.e. (s/htilde) = -1.
bool is_inert(const Polynomial& htilde);

enum class CayleyType { PglBipartite, PslNonbipartite };

const char* to_string(CayleyType t);

/// Square-class test of htilde(0) and htilde(1) in F_q*: product of the two
/// signs decides the quotient type. Throws if either value is zero.
CayleyType classify_cayley_type(const Polynomial& htilde);

/// All monic polynomials of the given degree over fq, lexicographic order
/// (coefficients low-to-high, field elements in residue order).
std::vector<Polynomial> monic_polynomials(const Field& fq, unsigned deg);

/// Monic irreducible inert htilde of degree m with the requested quotient
/// type, in lexicographic order. May be empty.
std::vector<Polynomial> search_parameters(const Field& fq, unsigned m, CayleyType want);

} // namespace ramagraph
