#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catefs/fincat.hpp"
#include "catefs/twocat.hpp"

namespace catefs {

/// Blocks of the text format.  Categories are stored in canonical layout:
/// objects 0..n-1 in declaration order, morphism ids 0..n-1 the identities
/// (in object order, named "id(x)"), then the declared morphisms in
/// declaration order.  Identity morphism and unit composition lines are
/// implicit in the format.
struct CatBlock {
  std::string name;
  std::vector<std::string> obs;
  std::vector<std::string> mors;  // nonidentity names; morphism id = obs.size() + index
  FinCat cat;

  std::string mor_name(MorId m) const;
  ObjId ob_index(const std::string& s) const;    // -1 when absent
  MorId mor_index(const std::string& s) const;   // handles "id(x)"; kNoMor when absent

  bool operator==(const CatBlock&) const = default;
};

struct FunBlock {
  std::string name, dom, cod;
  FinFunctor fun;

  bool operator==(const FunBlock&) const = default;
};

struct NatBlock {
  std::string name, dom, cod;  // dom/cod name fun blocks
  NatTrans nat;

  bool operator==(const NatBlock&) const = default;
};

/// hcomp functors are serialized as fun blocks whose domain is an explicit
/// cat block matching the structural product of the two hom categories:
/// object k of the block is the pair with product index k, and the block's
/// nonidentity morphisms enumerate the product's nonidentity morphisms in
/// ascending product index.  tc holds the reassembled structural 2-category.
struct TwoCatBlock {
  std::string name;
  std::vector<std::string> obs;
  std::vector<std::string> homs;    // n*n cat block names
  std::vector<std::string> hcomps;  // n^3 fun block names
  FinTwoCat tc;

  bool operator==(const TwoCatBlock&) const = default;
};

struct TwoFunBlock {
  std::string name, twocat;
  std::vector<std::string> values;                // cat block names per object
  std::vector<std::vector<std::string>> ones;     // [a*n+b] fun block names per 1-cell
  std::vector<std::vector<std::string>> twos;     // [a*n+b] nat block names per
                                                  // nonidentity 2-cell, in id order
  CatValued2Functor f;

  bool operator==(const TwoFunBlock&) const = default;
};

struct TwoNatBlock {
  std::string name, dom, cod;  // 2fun block names
  std::vector<std::string> comps;  // fun block names per object
  TwoNatTrans t;

  bool operator==(const TwoNatBlock&) const = default;
};

struct ModBlock {
  std::string name, dom, cod;  // 2nat block names
  std::vector<std::string> comps;  // nat block names per object
  Modification m;

  bool operator==(const ModBlock&) const = default;
};

struct Document {
  enum class BlockType { Cat, Fun, Nat, TwoCat, TwoFun, TwoNat, Mod };
  struct Entry {
    BlockType type;
    int index;
    bool operator==(const Entry&) const = default;
  };

  std::vector<Entry> order;
  std::vector<CatBlock> cats;
  std::vector<FunBlock> funs;
  std::vector<NatBlock> nats;
  std::vector<TwoCatBlock> two_cats;
  std::vector<TwoFunBlock> two_funs;
  std::vector<TwoNatBlock> two_nats;
  std::vector<ModBlock> mods;

  const CatBlock* find_cat(const std::string& name) const;
  const FunBlock* find_fun(const std::string& name) const;
  const NatBlock* find_nat(const std::string& name) const;
  const TwoCatBlock* find_two_cat(const std::string& name) const;
  const TwoFunBlock* find_two_fun(const std::string& name) const;
  const TwoNatBlock* find_two_nat(const std::string& name) const;
  const ModBlock* find_mod(const std::string& name) const;

  bool operator==(const Document&) const = default;
};

/// Parses the line-oriented text format ('#' starts a comment, tokens are
/// whitespace-separated).  Every block is validated on load; failures raise
/// ParseError or ValidationError.
Document parse(const std::string& text);

/// Canonical text: blocks in document order, two-space indentation, one
/// declaration per line.  parse(render(d)) == d for documents produced by
/// parse or DocBuilder, and render(parse(t)) is idempotent on text.
std::string render(const Document& doc);

/// Relabeling of a category into canonical layout (identities first);
/// perm[old id] = canonical id.
std::pair<FinCat, std::vector<MorId>> canonical_cat(const FinCat& c);

/// Assembles documents from in-memory structures, relabeling all morphism
/// ids into canonical layout and generating the auxiliary blocks the format
/// needs (value categories, component functors, hcomp domains).  References
/// are by the names returned from earlier add calls.
class DocBuilder {
 public:
  std::string add_cat(const std::string& name, const FinCat& c);
  std::string add_fun(const std::string& name, const FinFunctor& f, const std::string& dom,
                      const std::string& cod);
  std::string add_nat(const std::string& name, const NatTrans& a, const std::string& dom,
                      const std::string& cod);
  std::string add_two_cat(const std::string& name, const FinTwoCat& tc);
  std::string add_two_fun(const std::string& name, const CatValued2Functor& f,
                          const std::string& twocat);
  std::string add_two_nat(const std::string& name, const TwoNatTrans& t,
                          const std::string& dom, const std::string& cod);
  std::string add_mod(const std::string& name, const Modification& m, const std::string& dom,
                      const std::string& cod);

  const Document& doc() const { return doc_; }
  Document take() { return std::move(doc_); }

 private:
  struct CatInfo {
    FinCat original;
    std::vector<MorId> perm;  // original id -> canonical id
    int block = -1;
  };
  template <typename T>
  struct OriginalOf {
    T original;
    int block = -1;
  };
  Document doc_;
  std::map<std::string, CatInfo> cat_info_;
  std::map<std::string, OriginalOf<FinFunctor>> fun_info_;
  std::map<std::string, OriginalOf<NatTrans>> nat_info_;
  std::map<std::string, OriginalOf<FinTwoCat>> two_cat_info_;
  std::map<std::string, OriginalOf<CatValued2Functor>> two_fun_info_;
  std::map<std::string, OriginalOf<TwoNatTrans>> two_nat_info_;

  const CatInfo& cat_of(const std::string& name) const;
  void require_fresh(const std::string& name) const;
};

}  // namespace catefs
