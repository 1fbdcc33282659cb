#include "ramagraph/poly.hpp"

#include <algorithm>

namespace ramagraph {

Polynomial::Polynomial(Field base, std::vector<FieldElement> coeffs)
    : base_(std::move(base)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!c.field()->same_field(*base_))
      throw std::invalid_argument("coefficient from a different field");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Polynomial::check_base(const Polynomial& o) const {
  if (!base_ || !o.base_) throw std::invalid_argument("uninitialized polynomial");
  if (!base_->same_field(*o.base_))
    throw std::invalid_argument("polynomials over different fields");
}

Polynomial Polynomial::from_ints(const Field& base, const std::vector<int64_t>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) c.push_back(base->from_int(v));
  return Polynomial(base, std::move(c));
}

Polynomial Polynomial::variable(const Field& base) {
  return Polynomial(base, {base->zero(), base->one()});
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), {c});
}

bool Polynomial::is_monic() const {
  return !c_.empty() && c_.back().is_one();
}

FieldElement Polynomial::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : base_->zero();
}

FieldElement Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_base(o);
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), base_->zero());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Polynomial(base_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_base(o);
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), base_->zero());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Polynomial(base_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_base(o);
  if (is_zero() || o.is_zero()) return Polynomial(base_);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, base_->zero());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return Polynomial(base_, std::move(r));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x = x * s;
  return Polynomial(base_, std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& g) const {
  check_base(g);
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (degree() < g.degree()) return {Polynomial(base_), *this};
  std::vector<FieldElement> rem = c_;
  std::vector<FieldElement> quo(c_.size() - g.c_.size() + 1, base_->zero());
  FieldElement lead_inv = g.leading().inverse();
  for (size_t i = rem.size(); i-- > g.c_.size() - 1;) {
    FieldElement c = rem[i] * lead_inv;
    if (c.is_zero()) continue;
    size_t off = i - (g.c_.size() - 1);
    quo[off] = c;
    for (size_t j = 0; j < g.c_.size(); ++j)
      rem[off + j] = rem[off + j] - c * g.c_[j];
  }
  rem.resize(g.c_.size() - 1, base_->zero());
  return {Polynomial(base_, std::move(quo)), Polynomial(base_, std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = base_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::substitute_power(unsigned j) const {
  if (j == 0) throw std::invalid_argument("power substitution needs j >= 1");
  if (is_zero()) return *this;
  std::vector<FieldElement> r((c_.size() - 1) * j + 1, base_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i * j] = c_[i];
  return Polynomial(base_, std::move(r));
}

Polynomial Polynomial::map_coeffs(const FieldEmbedding& e) const {
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(e(c));
  return Polynomial(e.target(), std::move(r));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!base_ || !o.base_) return base_ == o.base_;
  return base_->same_field(*o.base_) && c_ == o.c_;
}

bool Polynomial::lex_less(const Polynomial& o) const {
  check_base(o);
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = 0; i < n; ++i) {
    FieldElement a = coeff(i), b = o.coeff(i);
    if (a != b) return a.lex_less(b);
  }
  return false;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  bool ext = base_->degree() > 1;
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    std::string cs = c_[i].str();
    if (i == 0) {
      s += ext && cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
      continue;
    }
    if (!c_[i].is_one()) {
      s += ext && cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
      s += "*";
    }
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r = r0 % r1;
    r0 = r1;
    r1 = r;
  }
  return r0.monic();
}

Polynomial mod_pow(const Polynomial& f, uint64_t e, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("modulus polynomial is zero");
  Polynomial base = f % g;
  Polynomial r = Polynomial::from_ints(f.base(), {1}) % g;
  while (e > 0) {
    if (e & 1) r = (r * base) % g;
    base = (base * base) % g;
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
  uint64_t q = f.base()->order();
  Polynomial x = Polynomial::variable(f.base());
  Polynomial xq = x % f; // x^(q^i) mod f, by iterated q-th powers
  long half = f.degree() / 2;
  for (long i = 1; i <= half; ++i) {
    xq = mod_pow(xq, q, f);
    if (gcd(xq - x, f).degree() != 0) return false;
  }
  return true;
}

int legendre(const Polynomial& f, const Polynomial& g) {
  if (!g.is_monic() || !is_irreducible(g))
    throw std::invalid_argument("legendre symbol needs a monic irreducible denominator");
  const Field& fq = g.base();
  if (fq->characteristic() == 2)
    throw std::invalid_argument("legendre symbol needs odd characteristic");
  // exponent (q^deg g - 1) / 2 with an overflow guard
  uint64_t e = 1;
  for (long i = 0; i < g.degree(); ++i) {
    if (e > (uint64_t(1) << 62) / fq->order())
      throw std::overflow_error("legendre exponent exceeds the supported range");
    e *= fq->order();
  }
  e = (e - 1) / 2;
  Polynomial r = mod_pow(f, e, g);
  if (r.is_zero()) return 0;
  if (r.degree() != 0)
    throw std::logic_error("legendre power is a non-constant residue");
  FieldElement c = r.coeff(0);
  if (c.is_one()) return 1;
  if (c == -fq->one()) return -1;
  throw std::logic_error("legendre power is not 0 or +-1");
}

bool reciprocity_holds(const Polynomial& f, const Polynomial& g) {
  if (f == g) throw std::invalid_argument("reciprocity needs distinct polynomials");
  if (!f.is_monic() || !g.is_monic() || !is_irreducible(f) || !is_irreducible(g))
    throw std::invalid_argument("reciprocity needs monic irreducibles");
  uint64_t q = f.base()->order();
  int sign = (((q - 1) / 2) % 2) * (f.degree() % 2) * (g.degree() % 2) % 2 ? -1 : 1;
  return legendre(f, g) == sign * legendre(g, f);
}

Polynomial mobius_substitute(const Polynomial& h, const FieldElement& a,
                             const FieldElement& b, const FieldElement& c,
                             const FieldElement& d) {
  if (h.is_zero()) throw std::invalid_argument("mobius substitution of the zero polynomial");
  if ((a * d - b * c).is_zero())
    throw std::invalid_argument("singular coefficient matrix");
  const Field& fq = h.base();
  Polynomial num(fq, {b, a}); // a*u + b
  Polynomial den(fq, {d, c}); // c*u + d
  long n = h.degree();
  // sum h_i (a u + b)^i (c u + d)^(n-i)
  std::vector<Polynomial> num_pow(n + 1, Polynomial(fq));
  std::vector<Polynomial> den_pow(n + 1, Polynomial(fq));
  num_pow[0] = Polynomial::from_ints(fq, {1});
  den_pow[0] = Polynomial::from_ints(fq, {1});
  for (long i = 1; i <= n; ++i) {
    num_pow[i] = num_pow[i - 1] * num;
    den_pow[i] = den_pow[i - 1] * den;
  }
  Polynomial acc(fq);
  for (long i = 0; i <= n; ++i)
    acc = acc + num_pow[i] * den_pow[n - i] * h.coeff(i);
  if (acc.is_zero())
    throw std::logic_error("mobius substitution collapsed to zero");
  return acc.monic();
}

bool is_inert(const Polynomial& htilde) {
  if (!htilde.is_monic() || !is_irreducible(htilde))
    throw std::invalid_argument("inertness test needs a monic irreducible");
  return legendre(Polynomial::variable(htilde.base()), htilde) == -1;
}

const char* to_string(CayleyType t) {
  return t == CayleyType::PglBipartite ? "pgl_bipartite" : "psl_nonbipartite";
}

CayleyType classify_cayley_type(const Polynomial& htilde) {
  const Field& fq = htilde.base();
  FieldElement v0 = htilde.eval(fq->zero());
  FieldElement v1 = htilde.eval(fq->one());
  if (v0.is_zero() || v1.is_zero())
    throw std::invalid_argument("parameter rejected: value at 0 or 1 vanishes");
  int s0 = is_square(v0) ? 1 : -1;
  int s1 = is_square(v1) ? 1 : -1;
  return s0 * s1 == -1 ? CayleyType::PglBipartite : CayleyType::PslNonbipartite;
}

std::vector<Polynomial> monic_polynomials(const Field& fq, unsigned deg) {
  std::vector<Polynomial> out;
  std::vector<uint64_t> idx(deg, 0); // element indices of c_0 .. c_{deg-1}
  uint64_t q = fq->order();
  while (true) {
    std::vector<FieldElement> c;
    c.reserve(deg + 1);
    for (unsigned i = 0; i < deg; ++i) c.push_back(fq->element_at(idx[i]));
    c.push_back(fq->one());
    out.push_back(Polynomial(fq, std::move(c)));
    // lexicographic successor: bump the highest-degree coefficient first
    unsigned i = deg;
    while (i > 0) {
      if (++idx[i - 1] < q) break;
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<Polynomial> search_parameters(const Field& fq, unsigned m, CayleyType want) {
  if (fq->characteristic() == 2)
    throw std::invalid_argument("parameter search needs odd q");
  if (m == 0) throw std::invalid_argument("parameter degree must be >= 1");
  std::vector<Polynomial> out;
  for (const Polynomial& cand : monic_polynomials(fq, m)) {
    if (!is_irreducible(cand)) continue;
    if (cand.eval(fq->zero()).is_zero() || cand.eval(fq->one()).is_zero()) continue;
    if (!is_inert(cand)) continue;
    if (classify_cayley_type(cand) == want) out.push_back(cand);
  }
  return out;
}

} // namespace ramagraph
