#include "ramagraph/building.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ramagraph {

PolyMatrix PolyMatrix::identity(unsigned n, const Field& fq) {
  PolyMatrix m;
  m.n = n;
  m.fq = fq;
  m.a.assign(static_cast<size_t>(n) * n, Polynomial(fq));
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = Polynomial::from_ints(fq, {1});
  return m;
}

PolyMatrix PolyMatrix::from_int_table(unsigned n, const Field& fq,
                                      const std::vector<std::vector<int64_t>>& entries) {
  if (entries.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("entry count does not match dimension");
  PolyMatrix m;
  m.n = n;
  m.fq = fq;
  m.a.reserve(entries.size());
  for (const auto& e : entries) m.a.push_back(Polynomial::from_ints(fq, e));
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n != o.n || !fq->same_field(*o.fq))
    throw std::invalid_argument("matrix shape or field mismatch");
  PolyMatrix r;
  r.n = n;
  r.fq = fq;
  r.a.assign(static_cast<size_t>(n) * n, Polynomial(fq));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      if (at(i, k).is_zero()) continue;
      for (unsigned j = 0; j < n; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

std::string PolyMatrix::str(const std::string& var) const {
  std::string s = "(";
  for (unsigned i = 0; i < n; ++i) {
    if (i) s += ", ";
    s += "(";
    for (unsigned j = 0; j < n; ++j) {
      if (j) s += ", ";
      s += at(i, j).str(var);
    }
    s += ")";
  }
  return s + ")";
}

Polynomial poly_det(const PolyMatrix& m) {
  if (m.n == 1) return m.at(0, 0);
  Polynomial acc(m.fq);
  for (unsigned j = 0; j < m.n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix minor;
    minor.n = m.n - 1;
    minor.fq = m.fq;
    for (unsigned r = 1; r < m.n; ++r)
      for (unsigned c = 0; c < m.n; ++c)
        if (c != j) minor.a.push_back(m.at(r, c));
    Polynomial term = m.at(0, j) * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

unsigned BuildingVertex::color() const {
  unsigned s = 0;
  for (unsigned i = 0; i < mat.n; ++i) s += static_cast<unsigned>(mat.at(i, i).degree());
  return s % mat.n;
}

std::string BuildingVertex::key() const {
  std::string s;
  for (const auto& p : mat.a) {
    s += std::to_string(p.degree());
    s += ':';
    for (const auto& c : p.coeffs()) {
      for (uint32_t v : c.residue()) s += std::to_string(v) + ",";
      s += ';';
    }
    s += '|';
  }
  return s;
}

std::vector<PolyMatrix> neighbor_alphabet(unsigned n, const Field& fq) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  uint64_t q = fq->order();
  std::vector<PolyMatrix> out;
  Polynomial one = Polynomial::from_ints(fq, {1});
  Polynomial t = Polynomial::variable(fq);
  for (uint32_t bits = 1; bits + 1 < (1u << n); ++bits) { // skip all-0 and all-1
    std::vector<unsigned> mvec(n);
    for (unsigned i = 0; i < n; ++i) mvec[i] = (bits >> i) & 1;
    // free positions: i < j with m_i = 1 and m_j = 0 take a constant entry
    std::vector<std::pair<unsigned, unsigned>> free_pos;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (mvec[i] == 1 && mvec[j] == 0) free_pos.emplace_back(i, j);
    std::vector<uint64_t> idx(free_pos.size(), 0);
    while (true) {
      PolyMatrix m;
      m.n = n;
      m.fq = fq;
      m.a.assign(static_cast<size_t>(n) * n, Polynomial(fq));
      for (unsigned i = 0; i < n; ++i) m.at(i, i) = mvec[i] ? t : one;
      for (size_t k = 0; k < free_pos.size(); ++k)
        m.at(free_pos[k].first, free_pos[k].second) =
            Polynomial::constant(fq->element_at(idx[k]));
      out.push_back(std::move(m));
      size_t k = free_pos.size();
      while (k > 0) {
        if (++idx[k - 1] < q) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

namespace {

long val_t(const Polynomial& p) {
  if (p.is_zero()) return -1; // sentinel: infinite valuation
  long v = 0;
  while (p.coeff(v).is_zero()) ++v;
  return v;
}

Polynomial t_power(const Field& fq, long e) {
  std::vector<FieldElement> c(e + 1, fq->zero());
  c[e] = fq->one();
  return Polynomial(fq, std::move(c));
}

Polynomial shift_down(const Polynomial& p, long e) {
  if (p.is_zero()) return p;
  std::vector<FieldElement> c(p.coeffs().begin() + e, p.coeffs().end());
  return Polynomial(p.base(), std::move(c));
}

using Column = std::vector<Polynomial>;

} // namespace

BuildingVertex canonical_vertex(const PolyMatrix& m) {
  const Field& fq = m.fq;
  unsigned n = m.n;
  Polynomial det = poly_det(m);
  if (det.is_zero()) throw std::invalid_argument("singular matrix");
  long v = val_t(det);

  // columns of [M | t^v I]
  std::vector<Column> cols(2 * n, Column(n, Polynomial(fq)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) cols[j][i] = m.at(i, j);
  for (unsigned i = 0; i < n; ++i) cols[n + i][i] = t_power(fq, v);

  // Hermite column reduction over F_q[t], rows bottom-up
  std::vector<size_t> active(2 * n);
  for (size_t i = 0; i < active.size(); ++i) active[i] = i;
  std::vector<size_t> pivot(n);
  for (unsigned r = n; r-- > 0;) {
    while (true) {
      size_t best = SIZE_MAX;
      unsigned nonzero = 0;
      for (size_t ci : active)
        if (!cols[ci][r].is_zero()) {
          ++nonzero;
          if (best == SIZE_MAX || cols[ci][r].degree() < cols[best][r].degree()) best = ci;
        }
      if (best == SIZE_MAX) throw std::logic_error("no pivot available"); // unreachable
      if (nonzero == 1) {
        pivot[r] = best;
        active.erase(std::find(active.begin(), active.end(), best));
        break;
      }
      for (size_t ci : active) {
        if (ci == best || cols[ci][r].is_zero()) continue;
        Polynomial q = cols[ci][r].divmod(cols[best][r]).first;
        for (unsigned i = 0; i <= r; ++i)
          cols[ci][i] = cols[ci][i] - q * cols[best][i];
      }
    }
  }
  for (size_t ci : active)
    for (unsigned i = 0; i < n; ++i)
      if (!cols[ci][i].is_zero())
        throw std::logic_error("leftover nonzero column in Hermite reduction");

  PolyMatrix h;
  h.n = n;
  h.fq = fq;
  h.a.assign(static_cast<size_t>(n) * n, Polynomial(fq));
  for (unsigned j = 0; j < n; ++j) {
    // monicize: the diagonal is a unit times a pure t-power
    Polynomial diag = cols[pivot[j]][j];
    FieldElement lead_inv = diag.leading().inverse();
    for (unsigned i = 0; i <= j; ++i) h.at(i, j) = cols[pivot[j]][i] * lead_inv;
    for (long e = 0; e < h.at(j, j).degree(); ++e)
      if (!h.at(j, j).coeff(e).is_zero())
        throw std::logic_error("diagonal entry is not a pure t-power");
  }
  // reduce row-i entries modulo t^(m_i), bottom-up within each column
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = j; i-- > 0;) {
      Polynomial q = h.at(i, j).divmod(h.at(i, i)).first;
      if (q.is_zero()) continue;
      for (unsigned ii = 0; ii <= i; ++ii)
        h.at(ii, j) = h.at(ii, j) - q * h.at(ii, i);
    }
  // strip the t-power content
  long content = -1;
  for (const auto& p : h.a) {
    long pv = val_t(p);
    if (pv < 0) continue;
    if (content < 0 || pv < content) content = pv;
  }
  if (content > 0)
    for (auto& p : h.a) p = shift_down(p, content);

  // invariants of the canonical form
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (j < i && !h.at(i, j).is_zero())
        throw std::logic_error("canonical form is not upper triangular");
      if (j > i && h.at(i, j).degree() >= h.at(i, i).degree())
        throw std::logic_error("canonical off-diagonal entry not reduced");
    }
  BuildingVertex out;
  out.mat = std::move(h);
  return out;
}

BuildingVertex standard_vertex(unsigned n, const Field& fq) {
  BuildingVertex v;
  v.mat = PolyMatrix::identity(n, fq);
  return v;
}

std::vector<BuildingVertex> neighbors(const BuildingVertex& v) {
  std::vector<BuildingVertex> out;
  std::unordered_set<std::string> seen;
  for (const auto& a : neighbor_alphabet(v.dim(), v.mat.fq)) {
    BuildingVertex w = canonical_vertex(v.mat * a);
    if (seen.insert(w.key()).second) out.push_back(std::move(w));
  }
  return out;
}

std::optional<uint32_t> Ball::find(const BuildingVertex& v) const {
  auto it = index.find(v.key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Ball build_ball(unsigned n, const Field& fq, unsigned radius) {
  Ball b;
  b.n = n;
  b.fq = fq;
  b.radius = radius;
  BuildingVertex root = standard_vertex(n, fq);
  b.verts.push_back(root);
  b.depth.push_back(0);
  b.adj.emplace_back();
  b.index.emplace(root.key(), 0);
  std::deque<uint32_t> queue = {0};
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    if (b.depth[cur] >= radius) continue;
    for (const auto& w : neighbors(b.verts[cur])) {
      auto it = b.index.find(w.key());
      uint32_t wid;
      if (it == b.index.end()) {
        wid = static_cast<uint32_t>(b.verts.size());
        for (unsigned i = 0; i < n; ++i)
          if (w.mat.at(i, i).degree() > static_cast<long>(radius))
            throw std::logic_error("ball vertex exceeds the radius degree cap");
        b.index.emplace(w.key(), wid);
        b.verts.push_back(w);
        b.depth.push_back(b.depth[cur] + 1);
        b.adj.emplace_back();
        queue.push_back(wid);
      } else {
        wid = it->second;
      }
      b.adj[cur].push_back(wid);
    }
  }
  return b;
}

BuildingVertex ramified_image(const BuildingVertex& v) {
  PolyMatrix m = v.mat;
  for (auto& p : m.a)
    if (!p.is_zero()) p = p.substitute_power(2);
  BuildingVertex out;
  out.mat = std::move(m);
  if (!(canonical_vertex(out.mat) == out))
    throw std::logic_error("ramified image left the canonical form");
  return out;
}

BuildingVertex unramified_image(const BuildingVertex& v, const FieldEmbedding& e) {
  PolyMatrix m;
  m.n = v.mat.n;
  m.fq = e.target();
  m.a.reserve(v.mat.a.size());
  for (const auto& p : v.mat.a) m.a.push_back(p.map_coeffs(e));
  BuildingVertex out;
  out.mat = std::move(m);
  return out;
}

TreeAuditReport count_z_neighbors(const Ball& ball,
                                  const std::unordered_set<std::string>& z_keys,
                                  uint64_t expected_count) {
  TreeAuditReport rep;
  rep.pass = true;
  for (uint32_t v = 0; v < ball.size(); ++v) {
    if (ball.depth[v] >= ball.radius) continue; // interior only
    uint64_t cnt = 0;
    for (uint32_t w : ball.adj[v])
      if (z_keys.count(ball.verts[w].key())) ++cnt;
    if (cnt == 0) continue;
    ++rep.audited;
    if (cnt != expected_count) {
      rep.pass = false;
      rep.detail = "vertex " + std::to_string(v) + " touches the image " +
                   std::to_string(cnt) + " times";
      return rep;
    }
  }
  return rep;
}

TreeAuditReport audit_no_unique_neighbors(unsigned n, const Field& fq, unsigned radius) {
  if (radius < 2) throw std::invalid_argument("radius must be >= 2");
  Ball bg = build_ball(n, fq, radius);
  // image of the sub-building in the squared variable; its depth-k vertices
  // sit at depth 2k, so half radius covers everything visible in the ball
  Ball bh = build_ball(n, fq, (radius + 1) / 2);
  std::unordered_set<std::string> z;
  std::vector<BuildingVertex> z_list;
  for (const auto& v : bh.verts) {
    BuildingVertex img = ramified_image(v);
    z.insert(img.key());
    z_list.push_back(std::move(img));
  }
  TreeAuditReport rep = count_z_neighbors(bg, z, 2);
  if (!rep.pass) return rep;

  // constructive witness: the second image-neighbour of M A is M A D(A)
  auto alphabet = neighbor_alphabet(n, fq);
  for (const auto& mv : bh.verts) {
    BuildingVertex m = ramified_image(mv);
    auto mid = bg.find(m);
    if (!mid || bg.depth[*mid] + 2 > radius) continue;
    for (const auto& a : alphabet) {
      PolyMatrix d = PolyMatrix::identity(n, fq);
      for (unsigned i = 0; i < n; ++i) d.at(i, i) = a.at(i, i);
      BuildingVertex mprime = canonical_vertex(m.mat * a);
      BuildingVertex second = canonical_vertex(mprime.mat * d);
      if (!z.count(second.key())) {
        rep.pass = false;
        rep.detail = "witness M A D(A) escapes the image";
        return rep;
      }
      if (second.key() == m.key()) {
        rep.pass = false;
        rep.detail = "witness coincides with the start vertex";
        return rep;
      }
    }
  }
  return rep;
}

TreeAuditReport audit_internal_degree(const Field& fq, unsigned radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  Field fq2 = FieldSpec::make(fq->characteristic(), 2 * fq->degree());
  FieldEmbedding emb = FieldEmbedding::find(fq, fq2);
  Ball bg = build_ball(2, fq2, radius);
  Ball bh = build_ball(2, fq, radius);
  std::unordered_set<std::string> z;
  for (const auto& v : bh.verts) z.insert(unramified_image(v, emb).key());

  TreeAuditReport rep;
  rep.pass = true;
  uint64_t want = fq->order() + 1;
  for (uint32_t v = 0; v < bg.size(); ++v) {
    if (bg.depth[v] >= bg.radius) continue;
    if (!z.count(bg.verts[v].key())) continue;
    uint64_t cnt = 0;
    for (uint32_t w : bg.adj[v])
      if (z.count(bg.verts[w].key())) ++cnt;
    ++rep.audited;
    if (cnt != want) {
      rep.pass = false;
      rep.detail = "image vertex " + std::to_string(v) + " has internal degree " +
                   std::to_string(cnt);
      return rep;
    }
  }
  return rep;
}

std::string ball_dot(const Ball& ball, const std::string& var,
                     const std::unordered_set<std::string>* highlight) {
  std::string s = "graph {\n";
  for (uint32_t v = 0; v < ball.size(); ++v) {
    s += "  " + std::to_string(v) + " [label=\"" + ball.verts[v].mat.str(var) + "\"";
    if (highlight && highlight->count(ball.verts[v].key()))
      s += " style=filled fillcolor=lightblue";
    s += "];\n";
  }
  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (uint32_t v = 0; v < ball.size(); ++v)
    for (uint32_t w : ball.adj[v])
      if (seen.emplace(std::min(v, w), std::max(v, w)).second)
        s += "  " + std::to_string(std::min(v, w)) + " -- " +
             std::to_string(std::max(v, w)) + ";\n";
  return s + "}\n";
}

} // namespace ramagraph
