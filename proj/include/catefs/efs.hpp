#pragma once

#include "catefs/fincat.hpp"

namespace catefs {

/// The data of a square eps/mu/alpha/alpha' together with an invertible
/// comparison psi: alpha'∘eps => mu∘alpha, where eps is bijective on objects
/// and mu is fully faithful.
struct FillSquare {
  FinFunctor eps;          // F -> F', bijective on objects
  FinFunctor mu;           // G -> G', fully faithful
  FinFunctor alpha;        // F -> G
  FinFunctor alpha_prime;  // F' -> G'
  NatTrans psi;            // alpha'∘eps => mu∘alpha, invertible

  bool operator==(const FillSquare&) const = default;
};

Report validate_fill_square(const FillSquare& sq);

/// The unique diagonal produced by diagonal_fill.
struct FillResult {
  FinFunctor delta;     // F' -> G, with delta∘eps = alpha
  NatTrans psi_tilde;   // alpha' => mu∘delta, invertible, psi_tilde·eps = psi

  bool operator==(const FillResult&) const = default;
};

/// The unique (delta, psi_tilde) filling the square.  When psi is the
/// identity, mu∘delta = alpha' exactly and psi_tilde is the identity.
/// Throws PreconditionFailed if the square invariants fail; all
/// postconditions are recomputed, with violations raised as
/// InternalCheckFailure.
FillResult diagonal_fill(const FillSquare& sq);

/// The unique 2-cell between two diagonals of strictly commuting squares.
/// delta1 and delta2 are the fills of the squares (eps, mu, delta_i∘eps,
/// mu∘delta_i); phi: delta1∘eps => delta2∘eps and phi': mu∘delta1 =>
/// mu∘delta2 must satisfy mu·phi = phi'·eps.
NatTrans two_cell_fill(const FinFunctor& eps, const FinFunctor& mu,
                       const FinFunctor& delta1, const FinFunctor& delta2,
                       const NatTrans& phi, const NatTrans& phi_prime);

/// The unique invertible psi_hat: alpha => beta with mu·psi_hat = psi, for
/// fully faithful mu and invertible psi: mu∘alpha => mu∘beta.
NatTrans create_invertible(const FinFunctor& mu, const FinFunctor& alpha,
                           const FinFunctor& beta, const NatTrans& psi);

/// For fully faithful mu: F -> G and alpha: G -> F with invertible
/// psi: mu∘alpha => id_G, the unique invertible phi_hat: alpha∘mu => id_F
/// with mu·phi_hat = psi·mu.
NatTrans rigidity_witness(const FinFunctor& mu, const FinFunctor& alpha,
                          const NatTrans& psi);

/// Evaluates the separation property for a concrete instance: true when the
/// premises fail or when alpha = beta; false signals a counterexample (which
/// never occurs over Cat).
bool check_separation(const FinFunctor& eps, const FinFunctor& mu,
                      const FinFunctor& alpha, const FinFunctor& beta);

}  // namespace catefs
