#include "ramagraph/construction.hpp"

#include <cmath>

namespace ramagraph {

namespace {

// q = p^e with p prime, or throws
std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  for (uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    uint32_t e = 0;
    uint64_t r = q;
    while (r % p == 0) { r /= p; ++e; }
    if (r != 1) throw std::invalid_argument("q is not a prime power");
    return {static_cast<uint32_t>(p), e};
  }
  return {static_cast<uint32_t>(q), 1};
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("group order overflow");
  return a * b;
}

uint64_t pow_u64(uint64_t b, unsigned e) {
  uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

} // namespace

InstanceParams InstanceParams::create(uint64_t q, unsigned m,
                                      std::optional<std::vector<int64_t>> htilde_coeffs,
                                      std::optional<int64_t> epsilon,
                                      bool conjugate_root) {
  auto [p, e] = factor_prime_power(q);
  if (p == 2) throw std::invalid_argument("q must be odd");
  Field fq = FieldSpec::make(p, e);
  Polynomial htilde;
  if (htilde_coeffs) {
    if (e > 1)
      throw std::invalid_argument("coefficient list input needs prime q; pass a Polynomial");
    htilde = Polynomial::from_ints(fq, *htilde_coeffs);
    if (htilde.degree() != static_cast<long>(m))
      throw std::invalid_argument("parameter degree does not match m");
  } else {
    for (const Polynomial& cand : monic_polynomials(fq, m)) {
      if (!is_irreducible(cand)) continue;
      if (cand.eval(fq->zero()).is_zero() || cand.eval(fq->one()).is_zero()) continue;
      if (!is_inert(cand)) continue;
      htilde = cand;
      break;
    }
    if (htilde.is_zero())
      throw std::invalid_argument("no admissible parameter of this degree");
  }
  std::optional<FieldElement> eps;
  if (epsilon) eps = fq->from_int(*epsilon);
  return create(fq, htilde, eps, conjugate_root);
}

InstanceParams InstanceParams::create(const Field& fq, const Polynomial& htilde,
                                      std::optional<FieldElement> epsilon,
                                      bool conjugate_root) {
  if (fq->characteristic() == 2) throw std::invalid_argument("q must be odd");
  if (!htilde.base()->same_field(*fq))
    throw std::invalid_argument("parameter polynomial over the wrong field");
  if (!htilde.is_monic() || htilde.degree() < 1)
    throw std::invalid_argument("parameter must be monic of degree >= 1");
  if (!is_irreducible(htilde)) throw std::invalid_argument("parameter must be irreducible");
  if (!is_inert(htilde)) throw std::invalid_argument("parameter must be inert");

  InstanceParams p;
  p.fq = fq;
  p.m = static_cast<unsigned>(htilde.degree());
  p.htilde = htilde;
  p.h = htilde.substitute_power(2);
  if (!is_irreducible(p.h))
    throw std::logic_error("inert parameter with reducible lift"); // unreachable
  p.type = classify_cayley_type(htilde);

  p.epsilon = epsilon ? *epsilon : least_nonsquare(fq);
  if (!p.epsilon.field()->same_field(*fq) || p.epsilon.is_zero() || is_square(p.epsilon))
    throw std::invalid_argument("epsilon must be a non-square in F_q");

  uint32_t prime = fq->characteristic();
  if (fq->degree() == 1) {
    // quotient presentation F_q[t]/h(t): tau is the residue class of t
    std::vector<uint32_t> mod(p.h.degree() + 1);
    for (long i = 0; i <= p.h.degree(); ++i) {
      auto r = p.h.coeff(i).residue();
      mod[i] = r.empty() ? 0 : r[0];
    }
    p.big = FieldSpec::make(prime, 2 * p.m, mod);
    p.lift = FieldEmbedding::find(fq, p.big);
    p.tau = p.big->generator();
  } else {
    // prime-power q: present the quotient over the prime field and locate a
    // root of the lifted h there (lexicographically least, for determinism)
    p.big = FieldSpec::make(prime, 2 * p.m * fq->degree());
    p.lift = FieldEmbedding::find(fq, p.big);
    Polynomial hbig = p.h.map_coeffs(p.lift);
    FieldElement root;
    for (uint64_t i = 0; i < p.big->order(); ++i) {
      FieldElement cand = p.big->element_at(i);
      if (hbig.eval(cand).is_zero()) { root = cand; break; }
    }
    if (!root.valid()) throw std::logic_error("no root of h in the quotient field");
    p.tau = root;
  }
  p.sqrt_epsilon = sqrt_of(p.lift(p.epsilon));
  if (conjugate_root) p.sqrt_epsilon = -p.sqrt_epsilon;
  return p;
}

std::vector<std::pair<FieldElement, FieldElement>>
norm_solutions(const Field& fq, const FieldElement& epsilon) {
  if (fq->characteristic() == 2) throw std::invalid_argument("odd q required");
  if (epsilon.is_zero() || is_square(epsilon))
    throw std::invalid_argument("epsilon must be a non-square");
  std::vector<std::pair<FieldElement, FieldElement>> out;
  FieldElement one = fq->one();
  for (uint64_t di = 0; di < fq->order(); ++di) {
    FieldElement d = fq->element_at(di);
    FieldElement ed2 = epsilon * d * d;
    for (uint64_t ci = 0; ci < fq->order(); ++ci) {
      FieldElement c = fq->element_at(ci);
      if (ed2 - c * c == one) out.emplace_back(c, d);
    }
  }
  if (out.size() != fq->order() + 1)
    throw std::logic_error("norm equation does not have q+1 solutions");
  return out;
}

GeneratorSet build_generators(const InstanceParams& p) {
  auto sols = norm_solutions(p.fq, p.epsilon);
  const Field& big = p.big;
  FieldElement one = big->one();
  FieldElement tp1 = p.tau + one;
  FieldElement t2m1 = p.tau * p.tau - one;

  GeneratorSet gs;
  for (const auto& [c, d] : sols) {
    FieldElement cb = p.lift(c), db = p.lift(d);
    FieldElement u = cb - db * p.sqrt_epsilon;
    FieldElement v = (cb + db * p.sqrt_epsilon) * t2m1;
    gs.gammas.push_back(ProjectiveMatrix::make(big, 2, {tp1, u, v, tp1}));
    gs.deltas.push_back(gs.gammas.back() * gs.gammas.back());
  }
  // all distinct and inverse-closed
  gs.inverse_pair.assign(gs.gammas.size(), UINT32_MAX);
  for (size_t i = 0; i < gs.gammas.size(); ++i) {
    for (size_t j = i + 1; j < gs.gammas.size(); ++j)
      if (gs.gammas[i] == gs.gammas[j])
        throw std::logic_error("coincident generators");
    ProjectiveMatrix inv = gs.gammas[i].inverse();
    for (size_t j = 0; j < gs.gammas.size(); ++j)
      if (gs.gammas[j] == inv) { gs.inverse_pair[i] = static_cast<uint32_t>(j); break; }
    if (gs.inverse_pair[i] == UINT32_MAX)
      throw std::logic_error("generator set is not inverse-closed");
  }
  return gs;
}

uint64_t Instance::expected_x_order() const {
  uint64_t qq = pow_u64(params.fq->order(), 2 * params.m); // q^(2m)
  uint64_t full = checked_mul(qq, checked_mul(qq - 1, qq + 1));
  return params.type == CayleyType::PglBipartite ? full : full / 2;
}

uint64_t Instance::expected_y_order() const {
  uint64_t qm = pow_u64(params.fq->order(), params.m); // q^m
  return checked_mul(qm, checked_mul(qm - 1, qm + 1));
}

Instance build_instance(const InstanceParams& p, double cap_factor) {
  Instance inst;
  inst.params = p;
  inst.gens = build_generators(p);

  uint64_t ex = inst.expected_x_order();
  uint64_t ey = inst.expected_y_order();
  auto cap = [cap_factor](uint64_t n) {
    return static_cast<size_t>(std::ceil(cap_factor * static_cast<double>(n)));
  };
  inst.x_group = generate_closure(inst.gens.gammas, cap(ex));
  if (inst.x_group.size() != ex)
    throw std::logic_error("closure order disagrees with the classification");
  inst.y_group = generate_closure(inst.gens.deltas, cap(ey));
  if (inst.y_group.size() != ey)
    throw std::logic_error("subgroup order disagrees with the prediction");

  inst.x_graph = cayley_graph(inst.x_group, inst.gens.gammas);
  inst.y_graph = cayley_graph(inst.y_group, inst.gens.deltas);

  inst.y_vertex_in_x.reserve(inst.y_group.size());
  inst.y_mask_in_x.assign(inst.x_group.size(), 0);
  for (const auto& el : inst.y_group.elements) {
    auto id = inst.x_group.find(el);
    if (!id) throw std::logic_error("subgroup element missing from the group");
    inst.y_vertex_in_x.push_back(*id);
    inst.y_mask_in_x[*id] = 1;
  }
  return inst;
}

} // namespace ramagraph
