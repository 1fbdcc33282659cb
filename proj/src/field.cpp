#include "ramagraph/field.hpp"

#include <algorithm>
#include <cstdlib>

#include "ramagraph/poly.hpp"

namespace ramagraph {

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

uint64_t checked_pow(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (r > (uint64_t(1) << 62) / base)
      throw std::overflow_error("field order exceeds the supported range");
    r *= base;
  }
  return r;
}

void trim_raw(std::vector<uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  // extended Euclid on integers
  int64_t t = 0, tn = 1, r = p, rn = a % p;
  while (rn != 0) {
    int64_t q = r / rn;
    int64_t tmp = t - q * tn;
    t = tn; tn = tmp;
    tmp = r - q * rn;
    r = rn; rn = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return static_cast<uint32_t>((t % p + p) % p);
}

} // namespace

FieldSpec::FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  order_ = checked_pow(p_, k_);
}

bool FieldSpec::same_field(const FieldSpec& o) const {
  return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
}

Field FieldSpec::make(uint32_t p, uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k == 0) throw std::invalid_argument("field degree must be >= 1");
  if (k == 1) return Field(new FieldSpec(p, 1, {}));

  // lexicographically least monic irreducible of degree k over F_p
  Field fp(new FieldSpec(p, 1, {}));
  for (const Polynomial& cand : monic_polynomials(fp, k)) {
    if (is_irreducible(cand)) {
      std::vector<uint32_t> m(k + 1);
      for (uint32_t i = 0; i <= k; ++i) {
        auto r = cand.coeff(i).residue();
        m[i] = r.empty() ? 0 : r[0];
      }
      return Field(new FieldSpec(p, k, std::move(m)));
    }
  }
  throw std::logic_error("no irreducible modulus found"); // unreachable
}

Field FieldSpec::make(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k == 0) throw std::invalid_argument("field degree must be >= 1");
  if (modulus.size() != k + 1)
    throw std::invalid_argument("modulus must have degree k");
  std::vector<uint32_t> m = modulus;
  for (auto& c : m) c %= p;
  if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (k == 1) return Field(new FieldSpec(p, 1, {}));

  Field fp(new FieldSpec(p, 1, {}));
  std::vector<int64_t> as_ints(m.begin(), m.end());
  if (!is_irreducible(Polynomial::from_ints(fp, as_ints)))
    throw std::invalid_argument("modulus is reducible over F_p");
  return Field(new FieldSpec(p, k, std::move(m)));
}

FieldElement FieldSpec::zero() const {
  return FieldElement(shared_from_this(), {});
}

FieldElement FieldSpec::one() const {
  return FieldElement(shared_from_this(), {1});
}

FieldElement FieldSpec::from_int(int64_t c) const {
  int64_t r = c % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement(shared_from_this(), {static_cast<uint32_t>(r)});
}

FieldElement FieldSpec::from_residue(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() > k_)
    throw std::invalid_argument("residue degree exceeds field degree");
  std::vector<uint32_t> v = coeffs;
  for (auto& c : v) c %= p_;
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement FieldSpec::generator() const {
  if (k_ < 2) throw std::invalid_argument("prime field has no generator residue");
  return FieldElement(shared_from_this(), {0, 1});
}

FieldElement FieldSpec::element_at(uint64_t index) const {
  if (index >= order_) throw std::out_of_range("element index out of range");
  // big-endian base-p digits: c_0 is the most significant, so increasing
  // index follows lexicographic order on (c_0, ..., c_{k-1})
  std::vector<uint32_t> v(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    v[k_ - 1 - i] = static_cast<uint32_t>(index % p_);
    index /= p_;
  }
  trim_raw(v);
  return FieldElement(shared_from_this(), std::move(v));
}

uint64_t FieldSpec::index_of(const FieldElement& a) const {
  if (!same_field(*a.field())) throw std::invalid_argument("element of a different field");
  uint64_t idx = 0;
  const auto& c = a.residue();
  for (uint32_t i = 0; i < k_; ++i)
    idx = idx * p_ + (i < c.size() ? c[i] : 0);
  return idx;
}

std::vector<uint32_t> FieldSpec::raw_add(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) const {
  std::vector<uint32_t> r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s >= p_ ? s - p_ : s;
  }
  trim_raw(r);
  return r;
}

std::vector<uint32_t> FieldSpec::raw_sub(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) const {
  std::vector<uint32_t> r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = (i < a.size() ? a[i] : 0);
    uint32_t y = (i < b.size() ? b[i] : 0);
    r[i] = x >= y ? x - y : x + p_ - y;
  }
  trim_raw(r);
  return r;
}

std::vector<uint32_t> FieldSpec::raw_neg(const std::vector<uint32_t>& a) const {
  return raw_sub({}, a);
}

std::vector<uint32_t> FieldSpec::raw_mul(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) const {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      acc[i + j] += static_cast<uint64_t>(a[i]) * b[j];
  std::vector<uint32_t> r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i] % p_);

  // reduce modulo the (monic) modulus
  if (k_ > 1) {
    for (size_t i = r.size(); i-- > k_;) {
      uint32_t c = r[i];
      if (c == 0) continue;
      r[i] = 0;
      for (uint32_t j = 0; j < k_; ++j) {
        uint64_t sub = static_cast<uint64_t>(c) * modulus_[j] % p_;
        uint32_t x = r[i - k_ + j];
        r[i - k_ + j] = x >= sub ? x - static_cast<uint32_t>(sub)
                                 : x + p_ - static_cast<uint32_t>(sub);
      }
    }
    r.resize(k_);
  }
  trim_raw(r);
  return r;
}

namespace {

// plain long division over F_p on trimmed coefficient vectors
std::pair<std::vector<uint32_t>, std::vector<uint32_t>>
divmod_raw_p(std::vector<uint32_t> u, const std::vector<uint32_t>& v, uint32_t p) {
  if (v.empty()) throw std::domain_error("polynomial division by zero");
  if (u.size() < v.size()) return {{}, std::move(u)};
  std::vector<uint32_t> q(u.size() - v.size() + 1, 0);
  uint32_t lead_inv = inv_mod_p(v.back(), p);
  for (size_t i = u.size(); i-- > v.size() - 1;) {
    uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(u[i]) * lead_inv % p);
    if (c != 0) {
      size_t off = i - (v.size() - 1);
      q[off] = c;
      for (size_t j = 0; j < v.size(); ++j) {
        uint64_t sub = static_cast<uint64_t>(c) * v[j] % p;
        uint32_t& x = u[off + j];
        x = x >= sub ? x - static_cast<uint32_t>(sub) : x + p - static_cast<uint32_t>(sub);
      }
    }
  }
  u.resize(v.size() - 1);
  trim_raw(u);
  trim_raw(q);
  return {std::move(q), std::move(u)};
}

} // namespace

std::vector<uint32_t> FieldSpec::raw_inv(const std::vector<uint32_t>& a) const {
  if (a.empty()) throw std::domain_error("inversion of zero");
  if (k_ == 1) return {inv_mod_p(a[0], p_)};

  // extended Euclid in F_p[x] against the modulus; reducing the Bezout
  // coefficients modulo the modulus along the way preserves the congruence
  std::vector<uint32_t> r0 = modulus_, r1 = a;
  std::vector<uint32_t> t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = divmod_raw_p(r0, r1, p_);
    r0 = std::move(r1);
    r1 = std::move(r);
    std::vector<uint32_t> tn = raw_sub(t0, raw_mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (r0.size() != 1) throw std::domain_error("element not invertible");
  uint32_t s = inv_mod_p(r0[0], p_);
  std::vector<uint32_t> out(t0.size());
  for (size_t i = 0; i < t0.size(); ++i)
    out[i] = static_cast<uint32_t>(static_cast<uint64_t>(t0[i]) * s % p_);
  trim_raw(out);
  return out;
}

std::vector<uint32_t> FieldSpec::raw_pow(const std::vector<uint32_t>& a, uint64_t e) const {
  std::vector<uint32_t> base = a, r = {1};
  while (e > 0) {
    if (e & 1) r = raw_mul(r, base);
    base = raw_mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement::FieldElement(Field owner, std::vector<uint32_t> coeffs)
    : owner_(std::move(owner)), c_(std::move(coeffs)) {
  trim_raw(c_);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!owner_ || !o.owner_) throw std::invalid_argument("uninitialized field element");
  if (!owner_->same_field(*o.owner_))
    throw std::invalid_argument("field elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(owner_, owner_->raw_add(c_, o.c_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return FieldElement(owner_, owner_->raw_sub(c_, o.c_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(owner_, owner_->raw_mul(c_, o.c_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return FieldElement(owner_, owner_->raw_mul(c_, owner_->raw_inv(o.c_)));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(owner_, owner_->raw_neg(c_));
}

FieldElement FieldElement::inverse() const {
  return FieldElement(owner_, owner_->raw_inv(c_));
}

FieldElement FieldElement::pow(uint64_t e) const {
  return FieldElement(owner_, owner_->raw_pow(c_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!owner_ || !o.owner_) return owner_ == o.owner_;
  return owner_->same_field(*o.owner_) && c_ == o.c_;
}

bool FieldElement::lex_less(const FieldElement& o) const {
  check_same(o);
  uint32_t k = owner_->degree();
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t x = i < c_.size() ? c_[i] : 0;
    uint32_t y = i < o.c_.size() ? o.c_[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

std::string FieldElement::str(const std::string& var) const {
  if (c_.empty()) return "0";
  if (owner_->degree() == 1) return std::to_string(c_[0]);
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

bool is_square(const FieldElement& a) {
  if (a.is_zero()) return true;
  const Field& f = a.field();
  if (f->characteristic() == 2) return true;
  return a.pow((f->order() - 1) / 2).is_one();
}

FieldElement sqrt_of(const FieldElement& a) {
  const Field& f = a.field();
  if (a.is_zero()) return f->zero();
  if (f->characteristic() == 2) {
    // Frobenius inverse: squaring is bijective
    uint64_t e = f->order() / 2; // 2^(k-1)
    return a.pow(e);
  }
  if (!is_square(a)) throw std::domain_error("square root of a non-square");

  uint64_t n = f->order();
  FieldElement r = f->zero();
  if (n % 4 == 3) {
    r = a.pow((n + 1) / 4);
  } else {
    // Tonelli-Shanks in the cyclic group of order n-1
    uint64_t q = n - 1;
    uint32_t s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    FieldElement z = least_nonsquare(f);
    FieldElement c = z.pow(q);
    FieldElement t = a.pow(q);
    r = a.pow((q + 1) / 2);
    uint32_t m = s;
    while (!t.is_one()) {
      FieldElement t2 = t;
      uint32_t i = 0;
      while (!t2.is_one()) { t2 = t2 * t2; ++i; }
      FieldElement b = c;
      for (uint32_t j = 0; j + i + 1 < m; ++j) b = b * b;
      m = i;
      c = b * b;
      t = t * c;
      r = r * b;
    }
  }
  FieldElement other = -r;
  return other.lex_less(r) ? other : r;
}

FieldElement least_nonsquare(const Field& f) {
  if (f->characteristic() == 2)
    throw std::domain_error("every element is a square in characteristic 2");
  for (uint64_t i = 1; i < f->order(); ++i) {
    FieldElement a = f->element_at(i);
    if (!a.is_zero() && !is_square(a)) return a;
  }
  throw std::logic_error("no non-square found"); // unreachable for q > 1
}

FieldElement FieldEmbedding::operator()(const FieldElement& a) const {
  if (!a.field()->same_field(*source_))
    throw std::invalid_argument("element does not belong to the embedding source");
  // evaluate the residue polynomial at the generator image
  FieldElement acc = target_->zero();
  const auto& c = a.residue();
  for (size_t i = c.size(); i-- > 0;)
    acc = acc * image_ + target_->from_int(c[i]);
  return acc;
}

FieldEmbedding FieldEmbedding::identity(const Field& f) {
  FieldEmbedding e;
  e.source_ = f;
  e.target_ = f;
  e.image_ = f->degree() > 1 ? f->generator() : f->zero();
  return e;
}

FieldEmbedding FieldEmbedding::with_image(const Field& source, const Field& target,
                                          const FieldElement& image) {
  if (source->characteristic() != target->characteristic())
    throw std::invalid_argument("incompatible tower: different characteristic");
  if (target->degree() % source->degree() != 0)
    throw std::invalid_argument("incompatible tower: source degree does not divide");
  FieldEmbedding e;
  e.source_ = source;
  e.target_ = target;
  if (source->degree() == 1) {
    e.image_ = target->zero();
    return e;
  }
  if (!image.field()->same_field(*target))
    throw std::invalid_argument("generator image must lie in the target field");
  // the image must be a root of the source modulus
  FieldElement acc = target->zero();
  const auto& m = source->modulus();
  for (size_t i = m.size(); i-- > 0;)
    acc = acc * image + target->from_int(m[i]);
  if (!acc.is_zero())
    throw std::invalid_argument("generator image is not a root of the source modulus");
  e.image_ = image;
  return e;
}

FieldEmbedding FieldEmbedding::find(const Field& source, const Field& target) {
  if (source->characteristic() != target->characteristic())
    throw std::invalid_argument("incompatible tower: different characteristic");
  if (target->degree() % source->degree() != 0)
    throw std::invalid_argument("incompatible tower: source degree does not divide");
  if (source->degree() == 1) return with_image(source, target, target->zero());
  if (source->same_field(*target)) return identity(source);
  for (uint64_t i = 0; i < target->order(); ++i) {
    FieldElement cand = target->element_at(i);
    FieldElement acc = target->zero();
    const auto& m = source->modulus();
    for (size_t j = m.size(); j-- > 0;)
      acc = acc * cand + target->from_int(m[j]);
    if (acc.is_zero()) return with_image(source, target, cand);
  }
  throw std::logic_error("no root of the source modulus in the target field");
}

} // namespace ramagraph
