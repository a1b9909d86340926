#include "catefs/efs.hpp"

#include <string>

namespace catefs {

namespace {

std::vector<ObjId> bo_preimage(const FinFunctor& eps) {
  std::vector<ObjId> pre(eps.cod.objects(), -1);
  for (ObjId x = 0; x < eps.dom.objects(); ++x) pre[eps.obj_map[x]] = x;
  return pre;
}

}  // namespace

Report validate_fill_square(const FillSquare& sq) {
  Report r;
  r.merge(validate_functor(sq.eps), "eps");
  r.merge(validate_functor(sq.mu), "mu");
  r.merge(validate_functor(sq.alpha), "alpha");
  r.merge(validate_functor(sq.alpha_prime), "alpha_prime");
  if (!r.ok()) return r;
  if (sq.eps.dom != sq.alpha.dom || sq.eps.cod != sq.alpha_prime.dom ||
      sq.mu.dom != sq.alpha.cod || sq.mu.cod != sq.alpha_prime.cod) {
    r.add("BadBoundary", "square corners do not match");
    return r;
  }
  if (!is_bijective_on_objects(sq.eps)) r.add("NotBijectiveOnObjects", "eps");
  if (!is_fully_faithful(sq.mu)) r.add("NotFullyFaithful", "mu");
  if (sq.psi.dom_f != compose_functors(sq.alpha_prime, sq.eps) ||
      sq.psi.cod_f != compose_functors(sq.mu, sq.alpha)) {
    r.add("BadPsiBoundary", "psi must run alpha'∘eps => mu∘alpha");
    return r;
  }
  r.merge(validate_nat(sq.psi), "psi");
  if (r.ok() && !is_natural_iso(sq.psi)) r.add("NotInvertible", "psi");
  return r;
}

FillResult diagonal_fill(const FillSquare& sq) {
  {
    Report r = validate_fill_square(sq);
    if (!r.ok()) throw PreconditionFailed("diagonal_fill: " + r.to_string());
  }
  const FinCat& fprime = sq.eps.cod;
  const FinCat& g = sq.mu.dom;
  const FinCat& gprime = sq.mu.cod;
  std::vector<ObjId> pre = bo_preimage(sq.eps);

  FillResult out;
  out.delta.dom = fprime;
  out.delta.cod = g;
  out.delta.obj_map.resize(fprime.objects());
  for (ObjId xp = 0; xp < fprime.objects(); ++xp)
    out.delta.obj_map[xp] = sq.alpha.obj_map[pre[xp]];

  out.psi_tilde.dom_f = sq.alpha_prime;
  out.psi_tilde.components.resize(fprime.objects());
  for (ObjId xp = 0; xp < fprime.objects(); ++xp)
    out.psi_tilde.components[xp] = sq.psi.components[pre[xp]];

  // delta on a morphism f': x' -> y' is the unique mu-preimage of
  // psi_tilde_{y'} ∘ alpha'(f') ∘ psi_tilde_{x'}^{-1}.
  out.delta.mor_map.resize(fprime.morphisms());
  for (MorId fp = 0; fp < fprime.morphisms(); ++fp) {
    ObjId xp = fprime.src(fp), yp = fprime.tgt(fp);
    auto inv = gprime.inverse(out.psi_tilde.components[xp]);
    internal_check(inv.has_value(), "diagonal_fill: psi component not invertible");
    MorId conj = gprime.compose(out.psi_tilde.components[yp],
                                gprime.compose(sq.alpha_prime.mor_map[fp], *inv));
    MorId found = kNoMor;
    for (MorId u : g.hom(out.delta.obj_map[xp], out.delta.obj_map[yp]))
      if (sq.mu.mor_map[u] == conj) {
        found = u;
        break;
      }
    internal_check(found != kNoMor, "diagonal_fill: mu-preimage missing");
    out.delta.mor_map[fp] = found;
  }

  // postconditions, recomputed rather than trusted
  internal_check(validate_functor(out.delta).ok(), "diagonal_fill: delta not a functor");
  internal_check(compose_functors(out.delta, sq.eps) == sq.alpha,
                 "diagonal_fill: delta∘eps != alpha");
  out.psi_tilde.cod_f = compose_functors(sq.mu, out.delta);
  internal_check(validate_nat(out.psi_tilde).ok(), "diagonal_fill: psi_tilde not natural");
  internal_check(is_natural_iso(out.psi_tilde), "diagonal_fill: psi_tilde not invertible");
  internal_check(whisker_right(out.psi_tilde, sq.eps) == sq.psi,
                 "diagonal_fill: psi_tilde·eps != psi");
  if (sq.psi == identity_nat(sq.psi.dom_f)) {
    internal_check(compose_functors(sq.mu, out.delta) == sq.alpha_prime,
                   "diagonal_fill: identity case mu∘delta != alpha'");
    internal_check(out.psi_tilde == identity_nat(sq.alpha_prime),
                   "diagonal_fill: identity case psi_tilde != id");
  }
  return out;
}

NatTrans two_cell_fill(const FinFunctor& eps, const FinFunctor& mu,
                       const FinFunctor& delta1, const FinFunctor& delta2,
                       const NatTrans& phi, const NatTrans& phi_prime) {
  if (!is_bijective_on_objects(eps)) throw PreconditionFailed("two_cell_fill: eps not bo");
  if (!is_fully_faithful(mu)) throw NotFullyFaithful("two_cell_fill: mu not ff");
  if (delta1.dom != eps.cod || delta2.dom != eps.cod || delta1.cod != mu.dom ||
      delta2.cod != mu.dom)
    throw BoundaryMismatch("two_cell_fill: diagonals");
  if (phi.dom_f != compose_functors(delta1, eps) || phi.cod_f != compose_functors(delta2, eps))
    throw BoundaryMismatch("two_cell_fill: phi must run delta1∘eps => delta2∘eps");
  if (phi_prime.dom_f != compose_functors(mu, delta1) ||
      phi_prime.cod_f != compose_functors(mu, delta2))
    throw BoundaryMismatch("two_cell_fill: phi' must run mu∘delta1 => mu∘delta2");
  if (whisker_left(mu, phi) != whisker_right(phi_prime, eps))
    throw PreconditionFailed("two_cell_fill: compatibility mu·phi != phi'·eps");

  std::vector<ObjId> pre = bo_preimage(eps);
  NatTrans out;
  out.dom_f = delta1;
  out.cod_f = delta2;
  out.components.resize(eps.cod.objects());
  for (ObjId xp = 0; xp < eps.cod.objects(); ++xp)
    out.components[xp] = phi.components[pre[xp]];

  internal_check(validate_nat(out).ok(), "two_cell_fill: result not natural");
  internal_check(whisker_right(out, eps) == phi, "two_cell_fill: result·eps != phi");
  internal_check(whisker_left(mu, out) == phi_prime, "two_cell_fill: mu·result != phi'");
  return out;
}

NatTrans create_invertible(const FinFunctor& mu, const FinFunctor& alpha,
                           const FinFunctor& beta, const NatTrans& psi) {
  if (!is_fully_faithful(mu)) throw NotFullyFaithful("create_invertible: mu not ff");
  if (!is_natural_iso(psi)) throw NotInvertible("create_invertible: psi not invertible");
  NatTrans out = lift_through_ff(mu, alpha, beta, psi);
  internal_check(is_natural_iso(out), "create_invertible: lift not invertible");
  internal_check(whisker_left(mu, out) == psi, "create_invertible: mu·psi_hat != psi");
  return out;
}

NatTrans rigidity_witness(const FinFunctor& mu, const FinFunctor& alpha,
                          const NatTrans& psi) {
  if (!is_fully_faithful(mu)) throw NotFullyFaithful("rigidity_witness: mu not ff");
  if (mu.dom != alpha.cod || mu.cod != alpha.dom)
    throw BoundaryMismatch("rigidity_witness: mu and alpha are not opposed");
  if (psi.dom_f != compose_functors(mu, alpha) || psi.cod_f != identity_functor(mu.cod))
    throw BoundaryMismatch("rigidity_witness: psi must run mu∘alpha => id");
  if (!is_natural_iso(psi)) throw NotInvertible("rigidity_witness: psi not invertible");
  // lift psi·mu: mu∘(alpha∘mu) => mu∘id through the fully faithful mu
  NatTrans psi_mu = whisker_right(psi, mu);
  NatTrans whiskered = psi_mu;
  whiskered.dom_f = compose_functors(mu, compose_functors(alpha, mu));
  whiskered.cod_f = compose_functors(mu, identity_functor(mu.dom));
  NatTrans out = lift_through_ff(mu, compose_functors(alpha, mu), identity_functor(mu.dom),
                                 whiskered);
  internal_check(is_natural_iso(out), "rigidity_witness: witness not invertible");
  internal_check(whisker_left(mu, out) == psi_mu, "rigidity_witness: mu·phi_hat != psi·mu");
  return out;
}

bool check_separation(const FinFunctor& eps, const FinFunctor& mu,
                      const FinFunctor& alpha, const FinFunctor& beta) {
  if (alpha.dom != beta.dom || alpha.cod != beta.cod)
    throw BoundaryMismatch("check_separation: alpha, beta not parallel");
  if (eps.cod != alpha.dom) throw BoundaryMismatch("check_separation: eps target");
  if (mu.dom != alpha.cod) throw BoundaryMismatch("check_separation: mu source");
  if (!is_bijective_on_objects(eps))
    throw PreconditionFailed("check_separation: eps not bo");
  if (!is_fully_faithful(mu)) throw PreconditionFailed("check_separation: mu not ff");
  bool premise = compose_functors(alpha, eps) == compose_functors(beta, eps) &&
                 compose_functors(mu, alpha) == compose_functors(mu, beta);
  if (!premise) return true;
  return alpha == beta;
}

}  // namespace catefs
