#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catefs/errors.hpp"
#include "catefs/report.hpp"

namespace catefs {

using ObjId = std::int32_t;
using MorId = std::int32_t;

inline constexpr MorId kNoMor = -1;

/// A finite category presented by a total composition table.
///
/// Objects are 0..objects()-1, morphisms 0..morphisms()-1.  comp holds
/// morphisms()^2 entries; comp[g * morphisms() + f] is g∘f when src(g) =
/// tgt(f) and kNoMor otherwise.  All axioms are finite equality checks; see
/// validate_category.
struct FinCat {
  struct Mor {
    ObjId src{};
    ObjId tgt{};
    bool operator==(const Mor&) const = default;
  };

  std::vector<Mor> mor;
  std::vector<MorId> id_of;  // identity morphism of each object
  std::vector<MorId> comp;   // row-major, comp[g * morphisms() + f] = g∘f

  int objects() const { return static_cast<int>(id_of.size()); }
  int morphisms() const { return static_cast<int>(mor.size()); }

  ObjId src(MorId f) const { return mor[f].src; }
  ObjId tgt(MorId f) const { return mor[f].tgt; }
  MorId identity(ObjId x) const { return id_of[x]; }
  bool is_identity(MorId f) const { return id_of[mor[f].src] == f; }

  bool composable(MorId g, MorId f) const { return mor[f].tgt == mor[g].src; }

  MorId compose(MorId g, MorId f) const {
    MorId h = comp[static_cast<std::size_t>(g) * mor.size() + f];
    internal_check(h != kNoMor, "composite missing from table");
    return h;
  }

  MorId table(MorId g, MorId f) const {
    return comp[static_cast<std::size_t>(g) * mor.size() + f];
  }

  void set_comp(MorId g, MorId f, MorId h) {
    comp[static_cast<std::size_t>(g) * mor.size() + f] = h;
  }

  std::vector<MorId> hom(ObjId x, ObjId y) const {
    std::vector<MorId> out;
    for (MorId f = 0; f < morphisms(); ++f)
      if (mor[f].src == x && mor[f].tgt == y) out.push_back(f);
    return out;
  }

  /// Two-sided inverse of f located by table scan, if one exists.
  std::optional<MorId> inverse(MorId f) const {
    for (MorId g = 0; g < morphisms(); ++g) {
      if (mor[g].src != mor[f].tgt || mor[g].tgt != mor[f].src) continue;
      if (table(g, f) == id_of[mor[f].src] && table(f, g) == id_of[mor[f].tgt])
        return g;
    }
    return std::nullopt;
  }

  bool operator==(const FinCat&) const = default;
};

Report validate_category(const FinCat& c);

// ---- standard small categories -------------------------------------------

FinCat terminal_category();
FinCat discrete_category(int n);
/// Exactly one morphism between every ordered pair of objects.
FinCat indiscrete_category(int n);
FinCat walking_arrow_category();
/// Thin linear order 0 < 1 < ... < n-1.
FinCat chain_category(int n);
/// One-object category from a monoid multiplication table (table[i][j] = i*j,
/// element 0 is the unit).
FinCat monoid_category(const std::vector<std::vector<int>>& table);
/// Thin category of a preorder given by its reachability matrix.
FinCat preorder_category(const std::vector<std::vector<bool>>& leq);
FinCat disjoint_union(const FinCat& a, const FinCat& b);

/// Product category.  Object (i, j) has index i * b.objects() + j and
/// morphism (u, v) has index u * b.morphisms() + v, with a the first factor.
FinCat product_category(const FinCat& a, const FinCat& b);

inline ObjId pair_obj(const FinCat& b, ObjId i, ObjId j) { return i * b.objects() + j; }
inline MorId pair_mor(const FinCat& b, MorId u, MorId v) { return u * b.morphisms() + v; }
inline ObjId fst_obj(const FinCat& b, ObjId p) { return p / b.objects(); }
inline ObjId snd_obj(const FinCat& b, ObjId p) { return p % b.objects(); }
inline MorId fst_mor(const FinCat& b, MorId p) { return p / b.morphisms(); }
inline MorId snd_mor(const FinCat& b, MorId p) { return p % b.morphisms(); }

// ---- functors -------------------------------------------------------------

struct FinFunctor {
  FinCat dom;
  FinCat cod;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId on_obj(ObjId x) const { return obj_map[x]; }
  MorId on_mor(MorId f) const { return mor_map[f]; }

  bool operator==(const FinFunctor&) const = default;
};

Report validate_functor(const FinFunctor& f);

FinFunctor identity_functor(const FinCat& c);
FinFunctor constant_functor(const FinCat& dom, const FinCat& cod, ObjId at);
/// Throws DomainMismatch unless cod(f) = dom(g) as structural values.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

bool is_bijective_on_objects(const FinFunctor& f);
bool is_fully_faithful(const FinFunctor& f);
/// Isomorphism of categories: bijective on objects and on morphisms.
bool is_cat_iso(const FinFunctor& f);

/// Canonical (bijective-on-objects, fully-faithful) factorization.
///
/// mid has the objects of dom(f); its hom from x to y is the hom set of
/// cod(f) from f(x) to f(y), with morphisms ordered lexicographically by
/// (src index, tgt index, codomain morphism index).
struct Factorization {
  FinFunctor bo;   // dom(f) -> mid, identity on objects
  FinCat mid;
  FinFunctor ff;   // mid -> cod(f), f's object map, identity reindexing on homs
};

Factorization factor_bo_ff(const FinFunctor& f);

// ---- natural transformations ---------------------------------------------

struct NatTrans {
  FinFunctor dom_f;
  FinFunctor cod_f;
  std::vector<MorId> components;  // per object of dom(dom_f), morphism of cod

  MorId at(ObjId c) const { return components[c]; }

  bool operator==(const NatTrans&) const = default;
};

Report validate_nat(const NatTrans& a);

NatTrans identity_nat(const FinFunctor& f);
/// Componentwise composite in the codomain category; throws BoundaryMismatch.
NatTrans vertical_compose(const NatTrans& b, const NatTrans& a);
/// Post-whisker h·a: components are h applied to the components of a.
NatTrans whisker_left(const FinFunctor& h, const NatTrans& a);
/// Pre-whisker a·k: component at c is a's component at k(c).
NatTrans whisker_right(const NatTrans& a, const FinFunctor& k);
/// Horizontal composite b ⋆ a (b after a).
NatTrans horizontal_compose(const NatTrans& b, const NatTrans& a);

bool is_natural_iso(const NatTrans& a);
/// Componentwise inverse; throws NotInvertible.
NatTrans invert_nat(const NatTrans& a);

/// The unique η̂: g ⇒ h with f·η̂ = eta, for fully faithful f and
/// eta: f∘g ⇒ f∘h.  g and h are passed explicitly since f need not be
/// injective on objects.  η̂ is invertible whenever eta is.
NatTrans lift_through_ff(const FinFunctor& f, const FinFunctor& g,
                         const FinFunctor& h, const NatTrans& eta);

}  // namespace catefs
