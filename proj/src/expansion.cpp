#include "ramagraph/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace ramagraph {

Count Count::operator+(Count o) const {
  Count r;
  if (__builtin_add_overflow(v_, o.v_, &r.v_))
    throw std::overflow_error("walk counter overflow (add)");
  return r;
}

Count Count::operator-(Count o) const {
  if (v_ < o.v_) throw std::underflow_error("walk counter underflow");
  Count r;
  r.v_ = v_ - o.v_;
  return r;
}

Count Count::operator*(Count o) const {
  Count r;
  if (__builtin_mul_overflow(v_, o.v_, &r.v_))
    throw std::overflow_error("walk counter overflow (mul)");
  return r;
}

double Count::to_double() const { return static_cast<double>(v_); }

std::string Count::str() const {
  if (v_ == 0) return "0";
  unsigned __int128 v = v_;
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

Subset Subset::of(const Graph& g, std::vector<uint32_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Subset s;
  s.mask.assign(g.n, 0);
  for (uint32_t v : ids) {
    if (v >= g.n) throw std::invalid_argument("subset vertex out of range");
    s.mask[v] = 1;
  }
  s.ids = std::move(ids);
  return s;
}

Subset Subset::from_mask(const Graph& g, const std::vector<uint8_t>& mask) {
  if (mask.size() != g.n) throw std::invalid_argument("mask size mismatch");
  Subset s;
  s.mask = mask;
  for (uint32_t v = 0; v < g.n; ++v)
    if (mask[v]) s.ids.push_back(v);
  return s;
}

NeighborProfile neighbor_profile(const Graph& g, const Subset& y) {
  if (y.ids.empty()) throw std::invalid_argument("empty subset");
  NeighborProfile p;
  for (uint32_t x = 0; x < g.n; ++x) {
    uint64_t cnt = 0;
    for (uint32_t i = g.adj_off[x]; i < g.adj_off[x + 1]; ++i)
      if (y.mask[g.edst[g.adj_edge[i]]]) ++cnt;
    if (cnt == 0) continue;
    p.boundary.push_back(x);
    ++p.histogram[cnt];
    if (cnt == 1) p.has_unique_neighbor = true;
    if (cnt % 2 == 1) p.has_odd_neighbor = true;
  }
  return p;
}

Ratio induced_average_degree(const Graph& g, const Subset& s) {
  if (s.ids.empty()) throw std::invalid_argument("empty subset");
  int64_t inside = 0;
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    if (s.mask[g.esrc[e]] && s.mask[g.edst[e]]) ++inside;
  int64_t den = static_cast<int64_t>(s.ids.size());
  int64_t d = std::gcd(inside, den);
  if (d > 1) { inside /= d; den /= d; }
  return Ratio{inside, den};
}

namespace {

// one transfer step over directed edges: w'(e) = sum over edges e0 with
// t(e0) = s(e), e0 != twin(e), of w(e0)
std::vector<Count> nb_step(const Graph& g, const std::vector<Count>& w) {
  std::vector<Count> in_sum(g.n);
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    in_sum[g.edst[e]] += w[e];
  std::vector<Count> next(g.directed_edges());
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    next[e] = in_sum[g.esrc[e]] - w[g.etwin[e]];
  return next;
}

std::vector<Count> series_from(const Graph& g, unsigned l_max,
                               const std::function<bool(uint32_t)>& start_ok,
                               const std::function<bool(uint32_t)>& end_ok) {
  std::vector<Count> out(l_max + 1);
  std::vector<Count> w(g.directed_edges());
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    w[e] = start_ok(g.esrc[e]) ? 1 : 0;
  for (unsigned l = 1; l <= l_max; ++l) {
    if (l > 1) w = nb_step(g, w);
    Count total;
    for (uint32_t e = 0; e < g.directed_edges(); ++e)
      if (end_ok(g.edst[e])) total += w[e];
    out[l] = total;
  }
  return out;
}

} // namespace

WalkCounts nb_counts(const Graph& g, unsigned l_max, const Subset* s) {
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  WalkCounts wc;
  wc.l_max = l_max;
  auto always = [](uint32_t) { return true; };
  wc.total = series_from(g, l_max, always, always);
  if (s) {
    auto in_s = [s](uint32_t v) { return s->mask[v] != 0; };
    wc.endpoints = series_from(g, l_max, in_s, in_s);
    Graph ind = induced_subgraph(g, s->mask);
    wc.within = series_from(ind, l_max, always, always);
    for (unsigned l = 1; l <= l_max; ++l)
      if (!(wc.within[l] <= wc.endpoints[l]))
        throw std::logic_error("induced counts exceed endpoint counts");
  }
  return wc;
}

MooreReport moore_audit(const Graph& g, unsigned l_max) {
  for (uint32_t v = 0; v < g.n; ++v)
    if (g.degree(v) <= 1)
      throw std::invalid_argument("vertex of degree <= 1 at id " + std::to_string(v) +
                                  "; peel first");
  MooreReport r;
  r.directed_edges = g.directed_edges();
  if (r.directed_edges == 0) throw std::invalid_argument("empty graph");

  long double log_sum = 0; // sum over edges of log(deg(source) - 1)
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    log_sum += std::log(static_cast<long double>(g.degree(g.esrc[e]) - 1));
  long double dt1 = std::exp(log_sum / static_cast<long double>(r.directed_edges));
  r.d_tilde = static_cast<double>(dt1) + 1.0;
  r.d_bar = static_cast<double>(r.directed_edges) / g.n;
  uint32_t d0 = 0;
  r.regular = g.regular(&d0);
  r.dtilde_ge_dbar = r.d_tilde >= r.d_bar - 1e-9 * r.d_bar;

  auto wc = nb_counts(g, l_max);
  bool all = r.dtilde_ge_dbar;
  for (unsigned l = 1; l <= l_max; ++l) {
    long double bound = static_cast<long double>(r.directed_edges);
    for (unsigned i = 1; i < l; ++i) bound *= dt1;
    MooreReport::PerL row;
    row.l = l;
    row.observed = wc.total[l];
    row.bound = static_cast<double>(bound);
    row.pass = static_cast<long double>(row.observed.to_double()) >=
               bound * (1.0L - 1e-12L);
    all = all && row.pass;
    r.rows.push_back(row);
  }

  Bipartition b = bipartition(g);
  if (b.bipartite && g.n > 0) {
    uint64_t nl = 0, nr = 0, ml = 0, mr = 0;
    for (uint32_t v = 0; v < g.n; ++v) {
      if (b.side[v]) { ++nr; mr += g.degree(v); }
      else { ++nl; ml += g.degree(v); }
    }
    if (nl > 0 && nr > 0) {
      double dl = static_cast<double>(ml) / nl, dr = static_cast<double>(mr) / nr;
      bool cmp = (r.d_tilde - 1.0) >= std::sqrt((dl - 1.0) * (dr - 1.0)) - 1e-9;
      r.bipartite_comparison = cmp;
      all = all && cmp;
    }
  }
  r.pass = all;
  return r;
}

namespace {

using Mat = std::vector<int64_t>; // dense n x n, row major

Mat adjacency_int(const Graph& g) {
  Mat a(static_cast<size_t>(g.n) * g.n, 0);
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    a[static_cast<size_t>(g.edst[e]) * g.n + g.esrc[e]] += 1;
  return a;
}

Mat mat_mul(const Mat& a, const Mat& b, uint32_t n) {
  Mat c(static_cast<size_t>(n) * n, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t k = 0; k < n; ++k) {
      int64_t aik = a[static_cast<size_t>(i) * n + k];
      if (aik == 0) continue;
      const int64_t* brow = &b[static_cast<size_t>(k) * n];
      int64_t* crow = &c[static_cast<size_t>(i) * n];
      for (uint32_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  return c;
}

// A_l(x, y) = number of non-backtracking paths of length l from y to x,
// built column by column with the edge transfer recursion
std::vector<Mat> nb_operators(const Graph& g, unsigned l_max) {
  uint32_t n = g.n;
  std::vector<Mat> a(l_max + 1, Mat(static_cast<size_t>(n) * n, 0));
  std::vector<int64_t> w(g.directed_edges()), in_sum(n), next(g.directed_edges());
  for (uint32_t y = 0; y < n; ++y) {
    for (uint32_t e = 0; e < g.directed_edges(); ++e)
      w[e] = g.esrc[e] == y ? 1 : 0;
    for (unsigned l = 1; l <= l_max; ++l) {
      if (l > 1) {
        std::fill(in_sum.begin(), in_sum.end(), 0);
        for (uint32_t e = 0; e < g.directed_edges(); ++e) in_sum[g.edst[e]] += w[e];
        for (uint32_t e = 0; e < g.directed_edges(); ++e)
          next[e] = in_sum[g.esrc[e]] - w[g.etwin[e]];
        std::swap(w, next);
      }
      Mat& al = a[l];
      for (uint32_t e = 0; e < g.directed_edges(); ++e)
        al[static_cast<size_t>(g.edst[e]) * n + y] += w[e];
    }
  }
  return a;
}

// closed-form eigenvalue of A_l for l >= 2 through Chebyshev recurrences:
// (d-1)^(l/2) ((1 - (d-1)^-1) U_l(x) + 2 (d-1)^-1 T_l(x)), x = lambda/(2 sqrt(d-1))
double nb_eigenvalue(double lambda, uint32_t d, unsigned l) {
  if (l == 0) return 1.0;
  if (l == 1) return lambda;
  double q = static_cast<double>(d) - 1.0;
  double x = lambda / (2.0 * std::sqrt(q));
  double t0 = 1.0, t1 = x, u0 = 1.0, u1 = 2.0 * x;
  for (unsigned i = 2; i <= l; ++i) {
    double t2 = 2.0 * x * t1 - t0;
    double u2 = 2.0 * x * u1 - u0;
    t0 = t1; t1 = t2;
    u0 = u1; u1 = u2;
  }
  return std::pow(q, l / 2.0) * ((1.0 - 1.0 / q) * u1 + (2.0 / q) * t1);
}

} // namespace

ChebyshevReport chebyshev_identity_audit(const Graph& g, unsigned l_max, double tol,
                                         uint32_t spectral_limit) {
  uint32_t d = 0;
  if (!g.regular(&d) || d < 2)
    throw std::invalid_argument("audit needs a d-regular graph with d >= 2");
  if (l_max < 2) throw std::invalid_argument("l_max must be >= 2");

  ChebyshevReport rep;
  uint32_t n = g.n;
  auto a = nb_operators(g, l_max);
  Mat adj = adjacency_int(g);

  rep.identities_pass = true;
  if (a[1] != adj) {
    rep.identities_pass = false;
    rep.failed_l = 1;
    rep.detail = "A_1 differs from the adjacency matrix";
  }
  if (rep.identities_pass) {
    // A^2 = d I + A_2
    Mat a2 = mat_mul(adj, adj, n);
    for (uint32_t i = 0; i < n && rep.identities_pass; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        int64_t want = a[2][static_cast<size_t>(i) * n + j] + (i == j ? d : 0);
        if (a2[static_cast<size_t>(i) * n + j] != want) {
          rep.identities_pass = false;
          rep.failed_l = 2;
          rep.detail = "A^2 != d I + A_2 at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
          break;
        }
      }
  }
  for (unsigned l = 2; l + 1 <= l_max && rep.identities_pass; ++l) {
    Mat lhs = mat_mul(adj, a[l], n);
    for (size_t i = 0; i < lhs.size(); ++i) {
      int64_t want = static_cast<int64_t>(d - 1) * a[l - 1][i] + a[l + 1][i];
      if (lhs[i] != want) {
        rep.identities_pass = false;
        rep.failed_l = l;
        rep.detail = "A A_l != (d-1) A_{l-1} + A_{l+1} at l=" + std::to_string(l);
        break;
      }
    }
  }

  if (n <= spectral_limit) {
    rep.spectral_checked = true;
    Eigen::MatrixXd A(n, n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        A(i, j) = static_cast<double>(adj[static_cast<size_t>(i) * n + j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    const auto& V = es.eigenvectors();
    const auto& lam = es.eigenvalues();
    bool ok = true;
    for (unsigned l = 2; l <= l_max && ok; ++l) {
      Eigen::VectorXd f(n);
      for (uint32_t i = 0; i < n; ++i) f(i) = nb_eigenvalue(lam(i), d, l);
      Eigen::MatrixXd Al = V * f.asDiagonal() * V.transpose();
      double scale = std::max(1.0, static_cast<double>(d) *
                                       std::pow(static_cast<double>(d - 1), l - 1));
      for (uint32_t i = 0; i < n && ok; ++i)
        for (uint32_t j = 0; j < n; ++j) {
          double diff = std::abs(Al(i, j) -
                                 static_cast<double>(a[l][static_cast<size_t>(i) * n + j]));
          rep.max_spectral_error = std::max(rep.max_spectral_error, diff / scale);
          if (diff > tol * scale) {
            ok = false;
            rep.detail = "spectral closed form deviates at l=" + std::to_string(l);
            break;
          }
        }
    }
    rep.spectral_pass = ok;
  } else {
    rep.spectral_pass = true;
  }
  return rep;
}

KahaleWalkReport kahale_walk_bound_audit(const Graph& g, const Subset& s, unsigned l) {
  uint32_t d = 0;
  if (!g.regular(&d) || d < 2)
    throw std::invalid_argument("audit needs a d-regular graph with d >= 2");
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  double growth = std::pow(static_cast<double>(d - 1), l / 2.0);
  if (static_cast<double>(s.size()) * growth > static_cast<double>(g.n))
    throw std::invalid_argument("subset too large for this l: |S| (d-1)^(l/2) > n");
  auto wc = nb_counts(g, l, &s);
  KahaleWalkReport r;
  r.l = l;
  r.observed = wc.endpoints[l];
  r.bound = static_cast<double>(s.size()) * (l + 3) * growth;
  r.slack = r.bound - r.observed.to_double();
  r.pass = r.observed.to_double() <= r.bound;
  return r;
}

KahaleVertexReport kahale_vertex_audit(const Graph& g, const Subset& s, unsigned l) {
  uint32_t d = 0;
  if (!g.regular(&d) || d < 2)
    throw std::invalid_argument("audit needs a d-regular graph with d >= 2");
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  if (static_cast<double>(s.size()) * std::pow(static_cast<double>(d - 1), l) >
      static_cast<double>(g.n))
    throw std::invalid_argument("subset too large for this l: |S| (d-1)^l > n");

  auto prof = neighbor_profile(g, s);
  KahaleVertexReport r;
  r.s = s.size();
  r.boundary = prof.boundary.size();
  for (auto [cnt, vertices] : prof.histogram) {
    if (cnt == 1) r.m_unique += vertices;
    else r.m_multi += vertices;
    // edges from S into M only (vertices with >= 2 edge endpoints in S)
    if (cnt >= 2) r.edges_to_m += cnt * vertices;
  }
  if (r.m_multi == 0) throw std::invalid_argument("degenerate subset: M is empty");
  r.bound = std::pow(static_cast<double>(l + 3), 1.0 / l) *
            std::sqrt(static_cast<double>(d - 1));
  double es = static_cast<double>(r.edges_to_m) / static_cast<double>(r.s);
  double em = static_cast<double>(r.edges_to_m) / static_cast<double>(r.m_multi);
  if (es > 1.0 && em > 1.0) {
    r.d_prime_minus_1 = std::sqrt((es - 1.0) * (em - 1.0));
    r.inequality_pass = *r.d_prime_minus_1 <= r.bound + 1e-12;
  } else {
    // below the density threshold the comparison is vacuous
    r.inequality_pass = true;
  }
  r.half_d_times_s = 0.5 * d * static_cast<double>(r.s);
  return r;
}

} // namespace ramagraph
