// Brute-force uniqueness oracles shared by the unit and acceptance tests.
// Each oracle enumerates the full candidate space independently of the
// construction under test and reports how many candidates satisfy the
// defining equations.
#pragma once

#include <vector>

#include "catefs/efs.hpp"
#include "catefs/enumerate.hpp"
#include "catefs/fincat.hpp"

namespace oracles {

using namespace catefs;

/// All (delta, psi_tilde) pairs satisfying the fill equations of the square.
inline std::vector<FillResult> all_fills(const FillSquare& sq) {
  std::vector<FillResult> out;
  for (const FinFunctor& delta : enumerate_functors(sq.eps.cod, sq.mu.dom, 5000000)) {
    if (compose_functors(delta, sq.eps) != sq.alpha) continue;
    FinFunctor mu_delta = compose_functors(sq.mu, delta);
    for (const NatTrans& pt : enumerate_nat_trans(sq.alpha_prime, mu_delta)) {
      if (!is_natural_iso(pt)) continue;
      if (whisker_right(pt, sq.eps) != sq.psi) continue;
      out.push_back({delta, pt});
    }
  }
  return out;
}

/// All Delta: delta1 => delta2 with Delta·eps = phi and mu·Delta = phi'.
inline std::vector<NatTrans> all_two_cell_fills(const FinFunctor& eps, const FinFunctor& mu,
                                                const FinFunctor& delta1,
                                                const FinFunctor& delta2, const NatTrans& phi,
                                                const NatTrans& phi_prime) {
  std::vector<NatTrans> out;
  for (const NatTrans& d : enumerate_nat_trans(delta1, delta2)) {
    if (whisker_right(d, eps) != phi) continue;
    if (whisker_left(mu, d) != phi_prime) continue;
    out.push_back(d);
  }
  return out;
}

/// All invertible psi_hat: alpha => beta with mu·psi_hat = psi.
inline std::vector<NatTrans> all_created(const FinFunctor& mu, const FinFunctor& alpha,
                                         const FinFunctor& beta, const NatTrans& psi) {
  std::vector<NatTrans> out;
  for (const NatTrans& c : enumerate_nat_trans(alpha, beta)) {
    if (!is_natural_iso(c)) continue;
    if (whisker_left(mu, c) != psi) continue;
    out.push_back(c);
  }
  return out;
}

/// True when every hom set of the category has at most `limit` nonidentity
/// morphisms (the scale bound of the exhaustive criteria).
inline bool homs_within(const FinCat& c, int limit) {
  for (ObjId x = 0; x < c.objects(); ++x)
    for (ObjId y = 0; y < c.objects(); ++y) {
      int nonid = 0;
      for (MorId m : c.hom(x, y))
        if (!c.is_identity(m)) ++nonid;
      if (nonid > limit) return false;
    }
  return true;
}

inline bool square_within(const FillSquare& sq, int max_objects, int per_hom) {
  for (const FinCat* c : {&sq.eps.dom, &sq.eps.cod, &sq.mu.dom, &sq.mu.cod})
    if (c->objects() > max_objects || !homs_within(*c, per_hom)) return false;
  return true;
}

}  // namespace oracles
