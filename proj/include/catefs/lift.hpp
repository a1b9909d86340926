#pragma once

#include <cstdint>

#include "catefs/gen.hpp"
#include "catefs/report.hpp"
#include "catefs/twocat.hpp"

namespace catefs {

/// Factorization of a 2-natural transformation through an interpolating
/// 2-functor: eps is componentwise bijective on objects, mu componentwise
/// fully faithful, and mu∘eps is the original transformation on the nose.
struct LevelwiseFactorization {
  CatValued2Functor mid;
  TwoNatTrans eps;  // F => mid
  TwoNatTrans mu;   // mid => G
};

/// Builds the interpolating 2-functor by factoring each component and
/// filling the naturality squares (identity comparison cells, so the fills
/// are strict); 2-cells of the domain go through the unique 2-cell fill.
/// All functoriality and naturality conclusions are re-verified, raising
/// InternalCheckFailure on any mismatch.
LevelwiseFactorization levelwise_factor(const TwoNatTrans& alpha);

/// A fill square in the functor 2-category: eps componentwise bijective on
/// objects, mu componentwise fully faithful, and an invertible modification
/// psi: alpha_prime∘eps => mu∘alpha.
struct TwoFillSquare {
  TwoNatTrans eps;
  TwoNatTrans mu;
  TwoNatTrans alpha;
  TwoNatTrans alpha_prime;
  Modification psi;

  bool operator==(const TwoFillSquare&) const = default;
};

Report validate_two_fill_square(const TwoFillSquare& sq);

struct TwoFillResult {
  TwoNatTrans delta;       // with delta∘eps = alpha
  Modification psi_tilde;  // alpha_prime => mu∘delta, invertible

  bool operator==(const TwoFillResult&) const = default;
};

/// Componentwise diagonal fill; the components assemble into a 2-natural
/// transformation and an invertible modification, which is re-verified both
/// directly and through the assembly of 1-naturality plus the coherent
/// 2-cell family.
TwoFillResult lifted_diagonal_fill(const TwoFillSquare& sq);

/// Componentwise 2-cell fill between two diagonals of strictly commuting
/// squares; the result is the unique modification Delta with Delta·eps = phi
/// and mu·Delta = phi_prime.
Modification lifted_two_cell_fill(const TwoNatTrans& eps, const TwoNatTrans& mu,
                                  const TwoNatTrans& delta1, const TwoNatTrans& delta2,
                                  const Modification& phi, const Modification& phi_prime);

/// Componentwise creation of invertible modifications through a componentwise
/// fully faithful mu: the unique invertible psi_hat: alpha => beta with
/// mu·psi_hat = psi.
Modification lifted_create_invertible(const TwoNatTrans& mu, const TwoNatTrans& alpha,
                                      const TwoNatTrans& beta, const Modification& psi);

/// For componentwise fully faithful mu: F => G and alpha: G => F with an
/// invertible modification psi: mu∘alpha => id_G, the unique invertible
/// phi_hat: alpha∘mu => id_F with mu·phi_hat = psi·mu.
Modification lifted_rigidity_witness(const TwoNatTrans& mu, const TwoNatTrans& alpha,
                                     const Modification& psi);

/// Extension of a 2-functor by an indiscrete factor, with the section at
/// index 0, the projection, and the invertible counit modification
/// include∘project => id.  The section is componentwise fully faithful; the
/// harness and the tests use this to manufacture nonstrict squares and
/// rigidity instances.
struct IndiscreteExtension {
  CatValued2Functor ghat;
  TwoNatTrans include;   // g => ghat, x -> (x, 0)
  TwoNatTrans project;   // ghat => g
  Modification counit;   // include∘project => id_ghat, invertible
};

IndiscreteExtension times_indiscrete(const CatValued2Functor& g, int k);

/// Randomized end-to-end check of the factorization system axioms in the
/// functor 2-category over the given shape: factorizations, strict and
/// nonstrict diagonal fills with their uniqueness data, 2-cell fills, and
/// the rigidity witness.  Deterministic in (seed, cases); one violation per
/// failed check, tagged with the case index.
Report check_lifted_efs(const GeneratedTwoCat& shape, std::uint64_t seed, int cases,
                        const GenParams& params);

}  // namespace catefs
