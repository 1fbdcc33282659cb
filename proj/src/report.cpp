#include "ramagraph/report.hpp"

#include <cmath>
#include <cstdio>

namespace ramagraph {

json element_json(const FieldElement& a) {
  json arr = json::array();
  const auto& c = a.residue();
  for (uint32_t i = 0; i < a.field()->degree(); ++i)
    arr.push_back(i < c.size() ? c[i] : 0);
  return arr;
}

json poly_json(const Polynomial& p) {
  json arr = json::array();
  bool prime = p.base()->degree() == 1;
  for (long i = 0; i <= p.degree(); ++i) {
    FieldElement c = p.coeff(i);
    if (prime)
      arr.push_back(c.residue().empty() ? 0 : c.residue()[0]);
    else
      arr.push_back(element_json(c));
  }
  return arr;
}

json matrix_json(const ProjectiveMatrix& m) {
  json arr = json::array();
  for (unsigned i = 0; i < m.dim(); ++i)
    for (unsigned j = 0; j < m.dim(); ++j) arr.push_back(element_json(m.at(i, j)));
  return arr;
}

json params_json(const InstanceParams& p) {
  json j;
  j["q"] = p.fq->order();
  j["m"] = p.m;
  j["htilde"] = poly_json(p.htilde);
  j["h"] = poly_json(p.h);
  j["epsilon"] = element_json(p.epsilon);
  j["sqrt_epsilon"] = element_json(p.sqrt_epsilon);
  j["classification"] = to_string(p.type);
  j["quotient_field"] = {{"p", p.big->characteristic()},
                         {"k", p.big->degree()},
                         {"modulus", p.big->modulus()}};
  return j;
}

json graph_summary_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  j["directed_edges"] = g.directed_edges();
  uint32_t d = 0;
  j["regular"] = g.regular(&d);
  if (j["regular"].get<bool>()) j["degree"] = d;
  auto gi = girth(g);
  if (gi) j["girth"] = *gi;
  else j["girth"] = "infinity";
  Bipartition b = bipartition(g);
  j["bipartite"] = b.bipartite;
  if (b.bipartite) {
    uint64_t c0 = 0, c1 = 0;
    for (uint8_t s : b.side) (s ? c1 : c0)++;
    j["classes"] = {c0, c1};
  }
  j["components"] = component_count(g);
  return j;
}

json instance_summary_json(const Instance& inst) {
  json j;
  j["params"] = params_json(inst.params);
  j["x"] = graph_summary_json(inst.x_graph);
  j["y"] = graph_summary_json(inst.y_graph);
  j["y_size"] = inst.y_group.size();
  j["y_over_sqrt_x"] =
      static_cast<double>(inst.y_group.size()) /
      std::sqrt(static_cast<double>(inst.x_group.size()));
  return j;
}

json closure_json(const GroupClosure& g) {
  json j;
  j["size"] = g.size();
  json els = json::array();
  for (size_t i = 0; i < g.size(); ++i)
    els.push_back({{"id", i}, {"depth", g.depth[i]}, {"matrix", matrix_json(g.elements[i])}});
  j["elements"] = els;
  return j;
}

json spectrum_json(const SpectrumReport& r) {
  json j;
  j["degree"] = r.degree;
  j["bipartite"] = r.bipartite;
  j["method"] = r.method;
  j["tol"] = r.tol;
  j["converged"] = r.converged;
  if (r.method == "iterative") j["iterations"] = r.iterations;
  j["max_nontrivial_abs"] = r.max_nontrivial_abs;
  j["ramanujan_margin"] = r.ramanujan_margin;
  j["eigenvalues"] = r.eigenvalues;
  return j;
}

json ramanujan_json(const RamanujanReport& r) {
  json j;
  j["pass"] = r.pass;
  j["bound"] = r.bound;
  j["max_nontrivial"] = r.max_nontrivial;
  j["margin"] = r.margin;
  j["method"] = r.spectrum.method;
  return j;
}

json neighbor_profile_json(const NeighborProfile& p) {
  json j;
  j["boundary_size"] = p.boundary.size();
  json h = json::object();
  for (auto [k, v] : p.histogram) h[std::to_string(k)] = v;
  j["histogram"] = h;
  j["has_unique_neighbor"] = p.has_unique_neighbor;
  j["has_odd_neighbor"] = p.has_odd_neighbor;
  return j;
}

json moore_json(const MooreReport& r) {
  json j;
  j["directed_edges"] = r.directed_edges;
  j["d_tilde"] = r.d_tilde;
  j["d_bar"] = r.d_bar;
  j["regular"] = r.regular;
  j["dtilde_ge_dbar"] = r.dtilde_ge_dbar;
  if (r.bipartite_comparison) j["bipartite_comparison"] = *r.bipartite_comparison;
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"l", row.l},
                    {"observed", row.observed.str()},
                    {"bound", row.bound},
                    {"pass", row.pass}});
  j["rows"] = rows;
  j["pass"] = r.pass;
  return j;
}

json chebyshev_json(const ChebyshevReport& r) {
  json j;
  j["identities_pass"] = r.identities_pass;
  j["spectral_checked"] = r.spectral_checked;
  j["spectral_pass"] = r.spectral_pass;
  j["max_spectral_error"] = r.max_spectral_error;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json kahale_walk_json(const KahaleWalkReport& r) {
  json j;
  j["l"] = r.l;
  j["observed"] = r.observed.str();
  j["bound"] = r.bound;
  j["slack"] = r.slack;
  j["pass"] = r.pass;
  return j;
}

json kahale_vertex_json(const KahaleVertexReport& r) {
  json j;
  j["subset_size"] = r.s;
  j["boundary_size"] = r.boundary;
  j["multi_neighbors"] = r.m_multi;
  j["unique_neighbors"] = r.m_unique;
  j["edges_to_multi"] = r.edges_to_m;
  if (r.d_prime_minus_1) j["d_prime_minus_1"] = *r.d_prime_minus_1;
  j["bound"] = r.bound;
  j["inequality_pass"] = r.inequality_pass;
  j["half_d_times_s"] = r.half_d_times_s;
  return j;
}

json tree_audit_json(const TreeAuditReport& r) {
  json j;
  j["pass"] = r.pass;
  j["audited"] = r.audited;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::string spectrum_csv(const SpectrumReport& r) {
  std::string s = "index,eigenvalue\n";
  char buf[64];
  for (size_t i = 0; i < r.eigenvalues.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, r.eigenvalues[i]);
    s += buf;
  }
  return s;
}

std::string walk_series_csv(const WalkCounts& w) {
  std::string s = "l,total";
  bool subset = !w.endpoints.empty();
  if (subset) s += ",within,endpoints";
  s += "\n";
  for (unsigned l = 1; l <= w.l_max; ++l) {
    s += std::to_string(l) + "," + w.total[l].str();
    if (subset) s += "," + w.within[l].str() + "," + w.endpoints[l].str();
    s += "\n";
  }
  return s;
}

} // namespace ramagraph
