#pragma once

#include <utility>
#include <vector>

#include "catefs/fincat.hpp"

namespace catefs {

/// A finite strict 2-category.
///
/// hom(a, b) is a FinCat whose objects are the 1-cells a -> b and whose
/// morphisms are the 2-cells between them.  hcomp(a, b, c) is a plain
/// FinFunctor from product_category(hom(b, c), hom(a, b)) to hom(a, c); its
/// functoriality is exactly the interchange law.
struct FinTwoCat {
  int n_objects = 0;
  std::vector<FinCat> homs;        // n*n, homs[a*n + b] = hom(a, b)
  std::vector<FinFunctor> hcomps;  // n^3, hcomps[(a*n + b)*n + c]
  std::vector<ObjId> units;        // per object a, an object of hom(a, a)

  int objects() const { return n_objects; }

  const FinCat& hom(ObjId a, ObjId b) const { return homs[a * n_objects + b]; }
  FinCat& hom(ObjId a, ObjId b) { return homs[a * n_objects + b]; }

  const FinFunctor& hcomp(ObjId a, ObjId b, ObjId c) const {
    return hcomps[(a * n_objects + b) * n_objects + c];
  }
  FinFunctor& hcomp(ObjId a, ObjId b, ObjId c) {
    return hcomps[(a * n_objects + b) * n_objects + c];
  }

  /// Composite 1-cell g∘f for g in hom(b, c), f in hom(a, b).
  ObjId compose1(ObjId a, ObjId b, ObjId c, ObjId g, ObjId f) const {
    return hcomp(a, b, c).obj_map[pair_obj(hom(a, b), g, f)];
  }
  /// Horizontal composite of 2-cells mg in hom(b, c), mf in hom(a, b).
  MorId compose2(ObjId a, ObjId b, ObjId c, MorId mg, MorId mf) const {
    return hcomp(a, b, c).mor_map[pair_mor(hom(a, b), mg, mf)];
  }

  bool operator==(const FinTwoCat&) const = default;
};

Report validate_two_cat(const FinTwoCat& c);

/// The 2-category with one object and only identity cells.
FinTwoCat terminal_two_cat();
FinTwoCat discrete_two_cat(int n);
/// Two objects 0, 1 and a single generating 1-cell 0 -> 1.
FinTwoCat walking_arrow_two_cat();
/// Two objects; hom(0, 1) is the walking arrow category (one generating
/// 2-cell between two parallel 1-cells).
FinTwoCat walking_two_cell_two_cat();
/// Free composable pair of 1-cells: objects 0 < 1 < 2.
FinTwoCat composable_pair_two_cat();
/// Two objects; hom(0, 1) a 3-chain (a vertically composable pair of 2-cells).
FinTwoCat composable_two_cells_two_cat();
/// All 2-cells identities; 1-cells and their composition from a 1-category.
FinTwoCat locally_discrete_two_cat(const FinCat& c);
/// One object; 1-cells the elements of a monoid, 2-cells identities.
FinTwoCat one_object_two_cat(const std::vector<std::vector<int>>& monoid_table);
FinTwoCat product_two_cat(const FinTwoCat& a, const FinTwoCat& b);

// ---- Cat-valued 2-functors ------------------------------------------------

/// A strict 2-functor from a finite 2-category into Cat.
struct CatValued2Functor {
  FinTwoCat dom;
  std::vector<FinCat> on_obj;                  // per object of dom
  std::vector<std::vector<FinFunctor>> on_one; // [a*n+b][object of hom(a,b)]
  std::vector<std::vector<NatTrans>> on_two;   // [a*n+b][morphism of hom(a,b)]

  const FinFunctor& one(ObjId a, ObjId b, ObjId f) const {
    return on_one[a * dom.n_objects + b][f];
  }
  const NatTrans& two(ObjId a, ObjId b, MorId m) const {
    return on_two[a * dom.n_objects + b][m];
  }

  bool operator==(const CatValued2Functor&) const = default;
};

Report validate_two_functor(const CatValued2Functor& f);

CatValued2Functor constant_two_functor(const FinTwoCat& c, const FinCat& value);

struct TwoNatTrans {
  CatValued2Functor dom_f;
  CatValued2Functor cod_f;
  std::vector<FinFunctor> components;  // per object c, F(c) -> G(c)

  bool operator==(const TwoNatTrans&) const = default;
};

Report validate_two_natural(const TwoNatTrans& a);

TwoNatTrans identity_two_nat(const CatValued2Functor& f);
/// Composite 1-cell in the functor 2-category; componentwise composition.
TwoNatTrans compose_two_nat(const TwoNatTrans& mu, const TwoNatTrans& eps);

struct Modification {
  TwoNatTrans dom_t;
  TwoNatTrans cod_t;
  std::vector<NatTrans> components;  // per object c, a 2-cell alpha_c => beta_c

  bool operator==(const Modification&) const = default;
};

Report validate_modification(const Modification& m);

Modification identity_modification(const TwoNatTrans& t);
bool is_invertible_modification(const Modification& m);

/// Assembly of a 2-natural transformation from 1-naturality data plus a
/// coherent family of invertible 2-cells: given 2-natural alpha: F => G,
/// candidate components beta_c, and invertible phi_c: alpha_c => beta_c
/// satisfying the per-1-cell compatibility, the beta_c form a 2-natural
/// transformation and the phi_c an invertible modification.  Preconditions
/// are checked and reported via PreconditionFailed / NotInvertible; the
/// conclusion is re-verified and any failure raises InternalCheckFailure.
std::pair<TwoNatTrans, Modification> assemble_two_natural(
    const TwoNatTrans& alpha, std::vector<FinFunctor> beta_components,
    std::vector<NatTrans> phi_components);

// ---- pasting expressions ---------------------------------------------------

/// A tree of whiskers and vertical composites over natural transformations.
struct PasteExpr {
  enum class Kind { Leaf, WhiskerLeft, WhiskerRight, Vertical };
  Kind kind = Kind::Leaf;
  NatTrans leaf;        // Leaf
  FinFunctor fun;       // WhiskerLeft / WhiskerRight
  std::vector<PasteExpr> kids;

  static PasteExpr make_leaf(NatTrans a);
  static PasteExpr make_whisker_left(FinFunctor h, PasteExpr e);
  static PasteExpr make_whisker_right(PasteExpr e, FinFunctor k);
  static PasteExpr make_vertical(PasteExpr b, PasteExpr a);
};

/// Evaluates the tree; throws BoundaryMismatch at the offending node.
NatTrans paste_whiskers(const PasteExpr& expr);

}  // namespace catefs
