#include "ramagraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace ramagraph {

namespace {

void require_connected_regular(const Graph& g, uint32_t* d) {
  if (g.n == 0) throw std::invalid_argument("empty graph");
  if (!g.regular(d)) throw std::invalid_argument("spectrum bookkeeping needs a regular graph");
  if (component_count(g) != 1) throw std::invalid_argument("graph is not connected");
}

Eigen::VectorXd matvec(const Graph& g, const Eigen::VectorXd& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(g.n);
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    out(g.edst[e]) += v(g.esrc[e]);
  return out;
}

// strip one eigenvalue closest to target from a descending-sorted list
void drop_closest(std::vector<double>& vals, double target) {
  if (vals.empty()) return;
  size_t best = 0;
  for (size_t i = 1; i < vals.size(); ++i)
    if (std::abs(vals[i] - target) < std::abs(vals[best] - target)) best = i;
  vals.erase(vals.begin() + best);
}

} // namespace

SpectrumReport adjacency_spectrum(const Graph& g, SpectrumMethod method, double tol,
                                  uint32_t dense_limit) {
  uint32_t d = 0;
  require_connected_regular(g, &d);
  Bipartition bip = bipartition(g);

  SpectrumReport rep;
  rep.degree = d;
  rep.bipartite = bip.bipartite;
  rep.tol = tol;

  if (method == SpectrumMethod::Auto)
    method = g.n <= dense_limit ? SpectrumMethod::Dense : SpectrumMethod::Iterative;

  if (method == SpectrumMethod::Dense) {
    if (g.n > dense_limit)
      throw std::invalid_argument("graph exceeds the dense eigensolve limit");
    rep.method = "dense";
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (uint32_t e = 0; e < g.directed_edges(); ++e)
      a(g.edst[e], g.esrc[e]) += 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    rep.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + g.n);
    std::sort(rep.eigenvalues.rbegin(), rep.eigenvalues.rend());
    if (std::abs(rep.eigenvalues.front() - d) > tol * d + 1e-8)
      throw std::runtime_error("leading eigenvalue differs from the degree");
    std::vector<double> rest = rep.eigenvalues;
    drop_closest(rest, static_cast<double>(d));
    if (bip.bipartite) drop_closest(rest, -static_cast<double>(d));
    rep.max_nontrivial_abs = 0;
    for (double v : rest) rep.max_nontrivial_abs = std::max(rep.max_nontrivial_abs, std::abs(v));
  } else {
    rep.method = "iterative";
    const unsigned block = 8;
    const unsigned max_iters = 20000;
    uint32_t n = g.n;
    std::mt19937_64 rng(20240901u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd basis(n, block);
    for (uint32_t i = 0; i < n; ++i)
      for (unsigned j = 0; j < block; ++j) basis(i, j) = gauss(rng);

    Eigen::VectorXd ones = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    Eigen::VectorXd sign;
    if (bip.bipartite) {
      sign.resize(n);
      for (uint32_t i = 0; i < n; ++i) sign(i) = bip.side[i] ? -1.0 : 1.0;
      sign /= sign.norm();
    }
    auto deflate = [&](Eigen::MatrixXd& b) {
      for (unsigned j = 0; j < block; ++j) {
        b.col(j) -= ones.dot(b.col(j)) * ones;
        if (bip.bipartite) b.col(j) -= sign.dot(b.col(j)) * sign;
      }
    };

    // orthogonal iteration on A^2: on bipartite graphs eigenvalues pair up
    // as +-lambda, so iterating A itself never settles on a subspace; A^2
    // is positive on the dominant magnitude block
    bool squared_done = false;
    unsigned it = 0;
    Eigen::MatrixXd q = basis;
    deflate(q);
    {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr0(q);
      q = qr0.householderQ() * Eigen::MatrixXd::Identity(n, block);
    }
    for (; it < max_iters && !squared_done; ++it) {
      Eigen::MatrixXd w(n, block);
      for (unsigned j = 0; j < block; ++j) w.col(j) = matvec(g, matvec(g, q.col(j)));
      deflate(w);
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
      q = qr.householderQ() * Eigen::MatrixXd::Identity(n, block);

      if (it % 10 == 9 || it + 1 == max_iters) {
        Eigen::MatrixXd aaq(n, block);
        for (unsigned j = 0; j < block; ++j) aaq.col(j) = matvec(g, matvec(g, q.col(j)));
        deflate(aaq);
        Eigen::MatrixXd t = q.transpose() * aaq;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(0.5 * (t + t.transpose()));
        Eigen::MatrixXd y = q * small.eigenvectors();
        double max_res = 0;
        for (unsigned j = 0; j < block; ++j) {
          Eigen::VectorXd r =
              matvec(g, matvec(g, y.col(j))) - small.eigenvalues()(j) * y.col(j);
          r -= ones.dot(r) * ones;
          if (bip.bipartite) r -= sign.dot(r) * sign;
          max_res = std::max(max_res, r.norm());
        }
        if (max_res <= tol * d * d) squared_done = true;
      }
    }
    // Rayleigh-Ritz with A over span(q, A q): invariant once q spans a
    // subspace of the dominant magnitude block
    Eigen::MatrixXd wide(n, 2 * block);
    wide.leftCols(block) = q;
    for (unsigned j = 0; j < block; ++j) wide.col(block + j) = matvec(g, q.col(j));
    deflate(wide);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> rr(wide);
    rr.setThreshold(1e-10);
    unsigned rank = static_cast<unsigned>(rr.rank());
    Eigen::MatrixXd qq = rr.householderQ() * Eigen::MatrixXd::Identity(n, rank);
    Eigen::MatrixXd aqq(n, rank);
    for (unsigned j = 0; j < rank; ++j) aqq.col(j) = matvec(g, qq.col(j));
    deflate(aqq);
    Eigen::MatrixXd t = qq.transpose() * aqq;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(0.5 * (t + t.transpose()));
    Eigen::MatrixXd y = qq * small.eigenvectors();

    // keep the Ritz pairs with certified residuals, largest magnitudes first
    std::vector<std::pair<double, double>> pairs; // (|theta|, theta)
    for (unsigned j = 0; j < rank; ++j) {
      double theta = small.eigenvalues()(j);
      Eigen::VectorXd r = matvec(g, y.col(j)) - theta * y.col(j);
      r -= ones.dot(r) * ones;
      if (bip.bipartite) r -= sign.dot(r) * sign;
      if (r.norm() <= tol * d) pairs.emplace_back(std::abs(theta), theta);
    }
    std::sort(pairs.rbegin(), pairs.rend());
    if (pairs.size() > block) pairs.resize(block);
    rep.converged = squared_done && !pairs.empty();
    rep.iterations = it;
    for (const auto& [mag, theta] : pairs) rep.eigenvalues.push_back(theta);
    std::sort(rep.eigenvalues.rbegin(), rep.eigenvalues.rend());
    rep.max_nontrivial_abs = pairs.empty() ? 0 : pairs.front().first;
    if (!rep.converged)
      throw std::runtime_error("iterative eigensolver did not converge in " +
                               std::to_string(max_iters) + " iterations");
  }
  rep.ramanujan_margin = 2.0 * std::sqrt(double(d) - 1.0) - rep.max_nontrivial_abs;
  return rep;
}

RamanujanReport ramanujan_audit(const Graph& g, double tol, uint32_t dense_limit) {
  RamanujanReport r;
  r.spectrum = adjacency_spectrum(g, SpectrumMethod::Auto, tol, dense_limit);
  r.bound = 2.0 * std::sqrt(double(r.spectrum.degree) - 1.0);
  r.max_nontrivial = r.spectrum.max_nontrivial_abs;
  r.margin = r.bound - r.max_nontrivial;
  r.pass = r.max_nontrivial <= r.bound + tol;
  return r;
}

std::vector<int64_t> zero_eigenfunction(const Graph& x, const Graph& y_graph,
                                        const std::vector<uint32_t>& y_vertex_in_x) {
  if (y_graph.n == 0) throw std::invalid_argument("empty subgroup graph");
  if (y_vertex_in_x.size() != y_graph.n)
    throw std::invalid_argument("vertex correspondence size mismatch");
  Bipartition b = bipartition(y_graph);
  if (!b.bipartite)
    throw std::invalid_argument("subgroup graph is not bipartite; sign structure undefined");
  std::vector<int64_t> f(x.n, 0);
  uint8_t identity_side = b.side[0];
  for (uint32_t y = 0; y < y_graph.n; ++y) {
    uint32_t xv = y_vertex_in_x[y];
    if (xv >= x.n) throw std::invalid_argument("correspondence target out of range");
    if (f[xv] != 0) throw std::invalid_argument("correspondence is not injective");
    f[xv] = b.side[y] == identity_side ? 1 : -1;
  }
  return f;
}

AfZeroReport verify_af_zero(const Graph& g, const std::vector<int64_t>& f) {
  if (f.size() != g.n) throw std::invalid_argument("function size mismatch");
  AfZeroReport rep;
  std::vector<int64_t> af(g.n, 0);
  for (uint32_t e = 0; e < g.directed_edges(); ++e)
    af[g.edst[e]] += f[g.esrc[e]];
  for (uint32_t v = 0; v < g.n; ++v)
    if (af[v] != 0) {
      rep.zero = false;
      rep.first_violation = v;
      rep.violation_value = af[v];
      return rep;
    }
  return rep;
}

} // namespace ramagraph
