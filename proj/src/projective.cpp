#include "ramagraph/projective.hpp"

#include <deque>

namespace ramagraph {

ProjectiveMatrix ProjectiveMatrix::make(const Field& f, unsigned n,
                                        std::vector<FieldElement> entries) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
  if (entries.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("entry count does not match dimension");
  for (const auto& e : entries)
    if (!e.field()->same_field(*f))
      throw std::invalid_argument("matrix entry from a different field");
  ProjectiveMatrix m;
  m.f_ = f;
  m.n_ = n;
  m.a_ = std::move(entries);
  if (m.det().is_zero()) throw std::invalid_argument("singular matrix");
  m.canonicalize();
  return m;
}

ProjectiveMatrix ProjectiveMatrix::from_ints(const Field& f, unsigned n,
                                             const std::vector<int64_t>& entries) {
  std::vector<FieldElement> e;
  e.reserve(entries.size());
  for (int64_t v : entries) e.push_back(f->from_int(v));
  return make(f, n, std::move(e));
}

ProjectiveMatrix ProjectiveMatrix::identity(const Field& f, unsigned n) {
  std::vector<FieldElement> e(static_cast<size_t>(n) * n, f->zero());
  for (unsigned i = 0; i < n; ++i) e[i * n + i] = f->one();
  return make(f, n, std::move(e));
}

void ProjectiveMatrix::canonicalize() {
  for (auto& e : a_) {
    if (e.is_zero()) continue;
    if (!e.is_one()) {
      FieldElement s = e.inverse();
      for (auto& x : a_) x = x * s;
    }
    return;
  }
}

FieldElement ProjectiveMatrix::det() const {
  // Gaussian elimination on a working copy
  std::vector<FieldElement> w = a_;
  FieldElement d = f_->one();
  for (unsigned col = 0; col < n_; ++col) {
    unsigned piv = col;
    while (piv < n_ && w[piv * n_ + col].is_zero()) ++piv;
    if (piv == n_) return f_->zero();
    if (piv != col) {
      for (unsigned j = 0; j < n_; ++j) std::swap(w[piv * n_ + j], w[col * n_ + j]);
      d = -d;
    }
    FieldElement pv = w[col * n_ + col];
    d = d * pv;
    FieldElement pinv = pv.inverse();
    for (unsigned r = col + 1; r < n_; ++r) {
      FieldElement factor = w[r * n_ + col] * pinv;
      if (factor.is_zero()) continue;
      for (unsigned j = col; j < n_; ++j)
        w[r * n_ + j] = w[r * n_ + j] - factor * w[col * n_ + j];
    }
  }
  return d;
}

bool ProjectiveMatrix::is_identity() const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& o) const {
  if (n_ != o.n_ || !f_->same_field(*o.f_))
    throw std::invalid_argument("matrix shape or field mismatch");
  std::vector<FieldElement> r(static_cast<size_t>(n_) * n_, f_->zero());
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j)
        r[i * n_ + j] = r[i * n_ + j] + aik * o.at(k, j);
    }
  return make(f_, n_, std::move(r));
}

ProjectiveMatrix ProjectiveMatrix::inverse() const {
  if (n_ == 2) {
    // adjugate [[d,-b],[-c,a]]
    return make(f_, 2, {at(1, 1), -at(0, 1), -at(1, 0), at(0, 0)});
  }
  // Gauss-Jordan on [A | I]
  std::vector<FieldElement> w = a_;
  std::vector<FieldElement> inv(static_cast<size_t>(n_) * n_, f_->zero());
  for (unsigned i = 0; i < n_; ++i) inv[i * n_ + i] = f_->one();
  for (unsigned col = 0; col < n_; ++col) {
    unsigned piv = col;
    while (piv < n_ && w[piv * n_ + col].is_zero()) ++piv;
    if (piv == n_) throw std::logic_error("singular matrix in inverse");
    if (piv != col)
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(w[piv * n_ + j], w[col * n_ + j]);
        std::swap(inv[piv * n_ + j], inv[col * n_ + j]);
      }
    FieldElement pinv = w[col * n_ + col].inverse();
    for (unsigned j = 0; j < n_; ++j) {
      w[col * n_ + j] = w[col * n_ + j] * pinv;
      inv[col * n_ + j] = inv[col * n_ + j] * pinv;
    }
    for (unsigned r = 0; r < n_; ++r) {
      if (r == col) continue;
      FieldElement factor = w[r * n_ + col];
      if (factor.is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j) {
        w[r * n_ + j] = w[r * n_ + j] - factor * w[col * n_ + j];
        inv[r * n_ + j] = inv[r * n_ + j] - factor * inv[col * n_ + j];
      }
    }
  }
  return make(f_, n_, std::move(inv));
}

bool ProjectiveMatrix::operator==(const ProjectiveMatrix& o) const {
  return n_ == o.n_ && a_ == o.a_;
}

std::string ProjectiveMatrix::key() const {
  uint32_t k = f_->degree();
  std::string s;
  s.reserve(a_.size() * k * 4);
  for (const auto& e : a_) {
    const auto& c = e.residue();
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t v = i < c.size() ? c[i] : 0;
      s.push_back(static_cast<char>(v & 0xff));
      s.push_back(static_cast<char>((v >> 8) & 0xff));
      s.push_back(static_cast<char>((v >> 16) & 0xff));
      s.push_back(static_cast<char>((v >> 24) & 0xff));
    }
  }
  return s;
}

std::string ProjectiveMatrix::str() const {
  std::string s = "[";
  for (unsigned i = 0; i < n_; ++i) {
    s += i ? ",[" : "[";
    for (unsigned j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

std::optional<uint32_t> GroupClosure::find(const ProjectiveMatrix& m) const {
  auto it = index.find(m.key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

GroupClosure generate_closure(const std::vector<ProjectiveMatrix>& generators, size_t cap) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  if (cap < 1) throw std::invalid_argument("closure cap must be >= 1");
  const Field& f = generators[0].field();
  unsigned n = generators[0].dim();
  for (const auto& g : generators)
    if (g.dim() != n || !g.field()->same_field(*f))
      throw std::invalid_argument("generators over different groups");

  GroupClosure c;
  c.generators = generators;
  ProjectiveMatrix id = ProjectiveMatrix::identity(f, n);
  c.elements.push_back(id);
  c.depth.push_back(0);
  c.index.emplace(id.key(), 0);
  std::deque<uint32_t> queue = {0};
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      ProjectiveMatrix next = g * c.elements[cur];
      std::string k = next.key();
      if (c.index.count(k)) continue;
      if (c.elements.size() >= cap)
        throw std::length_error("closure cap exceeded");
      uint32_t id_new = static_cast<uint32_t>(c.elements.size());
      c.index.emplace(std::move(k), id_new);
      c.elements.push_back(std::move(next));
      c.depth.push_back(c.depth[cur] + 1);
      queue.push_back(id_new);
    }
  }
  return c;
}

uint64_t element_order(const ProjectiveMatrix& m) {
  ProjectiveMatrix acc = m;
  uint64_t k = 1;
  while (!acc.is_identity()) {
    acc = acc * m;
    ++k;
    if (k > (uint64_t(1) << 32))
      throw std::logic_error("element order exceeds sanity bound");
  }
  return k;
}

std::map<uint64_t, uint64_t> order_statistics(const GroupClosure& g) {
  std::map<uint64_t, uint64_t> h;
  for (const auto& m : g.elements) ++h[element_order(m)];
  return h;
}

} // namespace ramagraph
