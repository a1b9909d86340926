#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "catefs/efs.hpp"
#include "catefs/fincat.hpp"
#include "catefs/rng.hpp"
#include "catefs/twocat.hpp"

namespace catefs {

/// Generator families.  Only constructive families are used: a uniformly
/// random composition table is essentially never associative, so instances
/// are drawn from classes that are valid by construction.
enum class CatFamily {
  WalkingShape,
  FreeAcyclicGraph,
  Preorder,
  MonoidTable,
  Product,
  Mixed,  // pick one of the above at random
};

struct GenParams {
  int max_objects = 4;
  int max_morphisms = 12;
  CatFamily family = CatFamily::Mixed;
};

/// A generated category, remembering enough of its construction to extend
/// arbitrary generator assignments to functors.
struct GeneratedCat {
  enum class Kind { Free, Thin, Other };
  FinCat cat;
  Kind kind = Kind::Other;
  std::vector<MorId> generators;            // Free: generating edges
  std::vector<std::vector<MorId>> factors;  // Free: morphism as generator word,
                                            // leftmost factor applied first
};

GeneratedCat gen_fincat(Rng& rng, const GenParams& p);
inline GeneratedCat gen_fincat(std::uint64_t seed, const GenParams& p) {
  Rng rng(seed);
  return gen_fincat(rng, p);
}

/// Indexed list of small standard categories (index 0 is terminal).
FinCat walking_shape_cat(int index);
int walking_shape_count();

/// Free category on an acyclic graph; every path is a morphism.
GeneratedCat free_category_on_graph(int n_nodes,
                                    const std::vector<std::pair<ObjId, ObjId>>& edges);

/// Random functor with the generated domain.  Free domains extend random
/// generator images; thin domains get a random monotone map, with
/// NoFunctorExists raised when none exists.
FinFunctor gen_functor(Rng& rng, const GeneratedCat& dom, const FinCat& cod);
inline FinFunctor gen_functor(std::uint64_t seed, const GeneratedCat& dom, const FinCat& cod) {
  Rng rng(seed);
  return gen_functor(rng, dom, cod);
}

/// Identity-on-objects functor into the indiscrete category on the same
/// object set; the universal bo collapse.
FinFunctor indiscrete_collapse(const FinCat& x);

/// A fill square whose unique solution is known by construction: delta0 and
/// an invertible psi_tilde0 are chosen first, then alpha := delta0∘eps and
/// psi := psi_tilde0·eps.
struct FillInstance {
  FillSquare square;
  FinFunctor delta0;
  NatTrans psi_tilde0;
};

FillInstance gen_fill_instance(Rng& rng, const GenParams& p, bool identity_psi = false);
inline FillInstance gen_fill_instance(std::uint64_t seed, const GenParams& p,
                                      bool identity_psi = false) {
  Rng rng(seed);
  return gen_fill_instance(rng, p, identity_psi);
}

// ---- 2-categorical generators ---------------------------------------------

enum class TwoCatShape {
  Terminal,
  Discrete,
  WalkingArrow,
  Walking2Cell,
  ComposablePair,
  Composable2Cells,
  LocallyDiscreteFree,
  OneObjectMonoid,
  Product,
};

/// A generated 2-category together with the shape information the instance
/// generator exploits (free shapes admit free choices on generating cells).
struct GeneratedTwoCat {
  FinTwoCat tc;
  TwoCatShape shape = TwoCatShape::Terminal;
  GeneratedCat base;  // LocallyDiscreteFree: the underlying free 1-category
};

GeneratedTwoCat gen_two_cat(Rng& rng, const GenParams& p);
inline GeneratedTwoCat gen_two_cat(std::uint64_t seed, const GenParams& p) {
  Rng rng(seed);
  return gen_two_cat(rng, p);
}

/// Named shapes for the CLI and the harness.
GeneratedTwoCat named_two_cat(const std::string& name, Rng& rng, const GenParams& p);

struct TwoInstance {
  CatValued2Functor f;
  CatValued2Functor g;
  TwoNatTrans alpha;
};

/// A valid 2-natural transformation over the generated 2-category, drawn
/// from shape-specific families (free choices on generating cells where the
/// shape is free, structured fallbacks otherwise).
TwoInstance gen_two_instance(Rng& rng, const GeneratedTwoCat& c, const GenParams& p);
inline TwoInstance gen_two_instance(std::uint64_t seed, const GeneratedTwoCat& c,
                                    const GenParams& p) {
  Rng rng(seed);
  return gen_two_instance(rng, c, p);
}

}  // namespace catefs
