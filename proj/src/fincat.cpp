#include "catefs/fincat.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace catefs {

namespace {

std::string mor_str(MorId f) { return "mor " + std::to_string(f); }

}  // namespace

Report validate_category(const FinCat& c) {
  Report r;
  const int n = c.objects();
  const int m = c.morphisms();
  if (static_cast<int>(c.id_of.size()) != n) {
    r.add("BadShape", "identity table size mismatch");
    return r;
  }
  if (c.comp.size() != static_cast<std::size_t>(m) * m) {
    r.add("BadShape", "composition table has wrong dimensions");
    return r;
  }
  for (MorId f = 0; f < m; ++f) {
    if (c.mor[f].src < 0 || c.mor[f].src >= n || c.mor[f].tgt < 0 || c.mor[f].tgt >= n)
      r.add("BadEndpoints", mor_str(f) + " has out-of-range endpoints");
  }
  if (!r.ok()) return r;
  for (ObjId x = 0; x < n; ++x) {
    MorId e = c.id_of[x];
    if (e < 0 || e >= m) {
      r.add("BadIdentity", "object " + std::to_string(x) + " has no identity");
      continue;
    }
    if (c.mor[e].src != x || c.mor[e].tgt != x)
      r.add("BadIdentity", "identity of object " + std::to_string(x) + " is not an endomorphism");
  }
  if (!r.ok()) return r;
  // totality and definedness pattern
  for (MorId g = 0; g < m; ++g) {
    for (MorId f = 0; f < m; ++f) {
      MorId h = c.table(g, f);
      if (c.composable(g, f)) {
        if (h == kNoMor) {
          r.add("MissingComposite", mor_str(g) + " . " + mor_str(f));
        } else if (h < 0 || h >= m) {
          r.add("BadComposite", mor_str(g) + " . " + mor_str(f) + " out of range");
        } else if (c.mor[h].src != c.mor[f].src || c.mor[h].tgt != c.mor[g].tgt) {
          r.add("BadCompositeEndpoints", mor_str(g) + " . " + mor_str(f));
        }
      } else if (h != kNoMor) {
        r.add("SpuriousComposite", mor_str(g) + " . " + mor_str(f) + " defined but not composable");
      }
    }
  }
  if (!r.ok()) return r;
  // unit laws
  for (MorId f = 0; f < m; ++f) {
    if (c.table(c.id_of[c.mor[f].tgt], f) != f)
      r.add("UnitLaw", "id . " + mor_str(f) + " != " + mor_str(f));
    if (c.table(f, c.id_of[c.mor[f].src]) != f)
      r.add("UnitLaw", mor_str(f) + " . id != " + mor_str(f));
  }
  // associativity
  for (MorId h = 0; h < m; ++h)
    for (MorId g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      for (MorId f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.table(h, c.table(g, f)) != c.table(c.table(h, g), f))
          r.add("NonAssociative", mor_str(h) + " . " + mor_str(g) + " . " + mor_str(f));
      }
    }
  return r;
}

// ---- builders -------------------------------------------------------------

namespace {

FinCat make_empty_tables(int n_obj, int n_mor) {
  FinCat c;
  c.mor.resize(n_mor);
  c.id_of.resize(n_obj, kNoMor);
  c.comp.assign(static_cast<std::size_t>(n_mor) * n_mor, kNoMor);
  return c;
}

}  // namespace

FinCat terminal_category() { return discrete_category(1); }

FinCat discrete_category(int n) {
  FinCat c = make_empty_tables(n, n);
  for (ObjId x = 0; x < n; ++x) {
    c.mor[x] = {x, x};
    c.id_of[x] = x;
    c.set_comp(x, x, x);
  }
  return c;
}

FinCat indiscrete_category(int n) {
  FinCat c = make_empty_tables(n, n * n);
  auto at = [n](ObjId x, ObjId y) { return static_cast<MorId>(x * n + y); };  // x -> y
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) c.mor[at(x, y)] = {x, y};
    c.id_of[x] = at(x, x);
  }
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z) c.set_comp(at(y, z), at(x, y), at(x, z));
  return c;
}

FinCat walking_arrow_category() { return chain_category(2); }

FinCat chain_category(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) leq[x][y] = true;
  return preorder_category(leq);
}

FinCat preorder_category(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<ObjId, ObjId>> arrows;
  std::map<std::pair<ObjId, ObjId>, MorId> index;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      if (x == y || leq[x][y]) {
        index[{x, y}] = static_cast<MorId>(arrows.size());
        arrows.emplace_back(x, y);
      }
  FinCat c = make_empty_tables(n, static_cast<int>(arrows.size()));
  for (MorId f = 0; f < c.morphisms(); ++f) c.mor[f] = {arrows[f].first, arrows[f].second};
  for (ObjId x = 0; x < n; ++x) c.id_of[x] = index.at({x, x});
  for (MorId g = 0; g < c.morphisms(); ++g)
    for (MorId f = 0; f < c.morphisms(); ++f)
      if (c.composable(g, f)) c.set_comp(g, f, index.at({c.mor[f].src, c.mor[g].tgt}));
  return c;
}

FinCat monoid_category(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  FinCat c = make_empty_tables(1, m);
  for (MorId f = 0; f < m; ++f) c.mor[f] = {0, 0};
  c.id_of[0] = 0;
  for (MorId g = 0; g < m; ++g)
    for (MorId f = 0; f < m; ++f) c.set_comp(g, f, table[g][f]);
  return c;
}

FinCat disjoint_union(const FinCat& a, const FinCat& b) {
  FinCat c = make_empty_tables(a.objects() + b.objects(), a.morphisms() + b.morphisms());
  for (MorId f = 0; f < a.morphisms(); ++f) c.mor[f] = a.mor[f];
  for (MorId f = 0; f < b.morphisms(); ++f)
    c.mor[a.morphisms() + f] = {static_cast<ObjId>(b.mor[f].src + a.objects()),
                                static_cast<ObjId>(b.mor[f].tgt + a.objects())};
  for (ObjId x = 0; x < a.objects(); ++x) c.id_of[x] = a.id_of[x];
  for (ObjId x = 0; x < b.objects(); ++x) c.id_of[a.objects() + x] = a.morphisms() + b.id_of[x];
  for (MorId g = 0; g < a.morphisms(); ++g)
    for (MorId f = 0; f < a.morphisms(); ++f)
      if (a.table(g, f) != kNoMor) c.set_comp(g, f, a.table(g, f));
  for (MorId g = 0; g < b.morphisms(); ++g)
    for (MorId f = 0; f < b.morphisms(); ++f)
      if (b.table(g, f) != kNoMor)
        c.set_comp(a.morphisms() + g, a.morphisms() + f, a.morphisms() + b.table(g, f));
  return c;
}

FinCat product_category(const FinCat& a, const FinCat& b) {
  FinCat c = make_empty_tables(a.objects() * b.objects(), a.morphisms() * b.morphisms());
  for (MorId u = 0; u < a.morphisms(); ++u)
    for (MorId v = 0; v < b.morphisms(); ++v)
      c.mor[pair_mor(b, u, v)] = {pair_obj(b, a.mor[u].src, b.mor[v].src),
                                  pair_obj(b, a.mor[u].tgt, b.mor[v].tgt)};
  for (ObjId x = 0; x < a.objects(); ++x)
    for (ObjId y = 0; y < b.objects(); ++y)
      c.id_of[pair_obj(b, x, y)] = pair_mor(b, a.id_of[x], b.id_of[y]);
  for (MorId g = 0; g < c.morphisms(); ++g)
    for (MorId f = 0; f < c.morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      MorId ga = fst_mor(b, g), gb = snd_mor(b, g);
      MorId fa = fst_mor(b, f), fb = snd_mor(b, f);
      if (a.table(ga, fa) != kNoMor && b.table(gb, fb) != kNoMor)
        c.set_comp(g, f, pair_mor(b, a.table(ga, fa), b.table(gb, fb)));
    }
  return c;
}

// ---- functors -------------------------------------------------------------

Report validate_functor(const FinFunctor& f) {
  Report r;
  if (static_cast<int>(f.obj_map.size()) != f.dom.objects() ||
      static_cast<int>(f.mor_map.size()) != f.dom.morphisms()) {
    r.add("BadShape", "functor map sizes do not match the domain");
    return r;
  }
  for (ObjId x = 0; x < f.dom.objects(); ++x)
    if (f.obj_map[x] < 0 || f.obj_map[x] >= f.cod.objects())
      r.add("BadObjectImage", "object " + std::to_string(x));
  for (MorId u = 0; u < f.dom.morphisms(); ++u) {
    MorId v = f.mor_map[u];
    if (v < 0 || v >= f.cod.morphisms()) {
      r.add("BadMorphismImage", mor_str(u));
      continue;
    }
    if (f.cod.src(v) != f.obj_map[f.dom.src(u)] || f.cod.tgt(v) != f.obj_map[f.dom.tgt(u)])
      r.add("EndpointsNotPreserved", mor_str(u));
  }
  if (!r.ok()) return r;
  for (ObjId x = 0; x < f.dom.objects(); ++x)
    if (f.mor_map[f.dom.identity(x)] != f.cod.identity(f.obj_map[x]))
      r.add("IdentityNotPreserved", "object " + std::to_string(x));
  for (MorId g = 0; g < f.dom.morphisms(); ++g)
    for (MorId u = 0; u < f.dom.morphisms(); ++u) {
      if (!f.dom.composable(g, u)) continue;
      if (f.mor_map[f.dom.compose(g, u)] != f.cod.compose(f.mor_map[g], f.mor_map[u]))
        r.add("CompositionNotPreserved", mor_str(g) + " . " + mor_str(u));
    }
  return r;
}

FinFunctor identity_functor(const FinCat& c) {
  FinFunctor f;
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(c.objects());
  f.mor_map.resize(c.morphisms());
  for (ObjId x = 0; x < c.objects(); ++x) f.obj_map[x] = x;
  for (MorId u = 0; u < c.morphisms(); ++u) f.mor_map[u] = u;
  return f;
}

FinFunctor constant_functor(const FinCat& dom, const FinCat& cod, ObjId at) {
  FinFunctor f;
  f.dom = dom;
  f.cod = cod;
  f.obj_map.assign(dom.objects(), at);
  f.mor_map.assign(dom.morphisms(), cod.identity(at));
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.cod != g.dom) throw DomainMismatch("compose_functors: cod(f) != dom(g)");
  FinFunctor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.obj_map.resize(f.dom.objects());
  h.mor_map.resize(f.dom.morphisms());
  for (ObjId x = 0; x < f.dom.objects(); ++x) h.obj_map[x] = g.obj_map[f.obj_map[x]];
  for (MorId u = 0; u < f.dom.morphisms(); ++u) h.mor_map[u] = g.mor_map[f.mor_map[u]];
  return h;
}

bool is_bijective_on_objects(const FinFunctor& f) {
  if (f.dom.objects() != f.cod.objects()) return false;
  std::vector<bool> hit(f.cod.objects(), false);
  for (ObjId x : f.obj_map) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

bool is_fully_faithful(const FinFunctor& f) {
  for (ObjId x = 0; x < f.dom.objects(); ++x)
    for (ObjId y = 0; y < f.dom.objects(); ++y) {
      auto dom_hom = f.dom.hom(x, y);
      auto cod_hom = f.cod.hom(f.obj_map[x], f.obj_map[y]);
      if (dom_hom.size() != cod_hom.size()) return false;
      std::vector<MorId> images;
      for (MorId u : dom_hom) images.push_back(f.mor_map[u]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
      // injective and equal cardinality onto a finite set: bijective
    }
  return true;
}

bool is_cat_iso(const FinFunctor& f) {
  return is_bijective_on_objects(f) && is_fully_faithful(f);
}

Factorization factor_bo_ff(const FinFunctor& f) {
  const FinCat& d = f.cod;
  const int n = f.dom.objects();
  // morphisms of mid: (x, y, d-morphism from f(x) to f(y)), lexicographic
  std::vector<std::array<MorId, 3>> mid_mors;
  std::map<std::array<MorId, 3>, MorId> index;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (MorId u : d.hom(f.obj_map[x], f.obj_map[y])) {
        index[{x, y, u}] = static_cast<MorId>(mid_mors.size());
        mid_mors.push_back({x, y, u});
      }
  FinCat mid;
  mid.mor.resize(mid_mors.size());
  mid.id_of.assign(n, kNoMor);
  mid.comp.assign(mid_mors.size() * mid_mors.size(), kNoMor);
  for (MorId k = 0; k < mid.morphisms(); ++k) mid.mor[k] = {mid_mors[k][0], mid_mors[k][1]};
  for (ObjId x = 0; x < n; ++x) mid.id_of[x] = index.at({x, x, d.identity(f.obj_map[x])});
  for (MorId g = 0; g < mid.morphisms(); ++g)
    for (MorId u = 0; u < mid.morphisms(); ++u) {
      if (!mid.composable(g, u)) continue;
      MorId w = d.compose(mid_mors[g][2], mid_mors[u][2]);
      mid.set_comp(g, u, index.at({mid_mors[u][0], mid_mors[g][1], w}));
    }

  Factorization out;
  out.mid = mid;
  out.bo.dom = f.dom;
  out.bo.cod = mid;
  out.bo.obj_map.resize(n);
  for (ObjId x = 0; x < n; ++x) out.bo.obj_map[x] = x;
  out.bo.mor_map.resize(f.dom.morphisms());
  for (MorId u = 0; u < f.dom.morphisms(); ++u)
    out.bo.mor_map[u] = index.at({f.dom.src(u), f.dom.tgt(u), f.mor_map[u]});
  out.ff.dom = mid;
  out.ff.cod = d;
  out.ff.obj_map = f.obj_map;
  out.ff.mor_map.resize(mid.morphisms());
  for (MorId k = 0; k < mid.morphisms(); ++k) out.ff.mor_map[k] = mid_mors[k][2];
  return out;
}

// ---- natural transformations ---------------------------------------------

Report validate_nat(const NatTrans& a) {
  Report r;
  const FinFunctor& f = a.dom_f;
  const FinFunctor& g = a.cod_f;
  if (f.dom != g.dom || f.cod != g.cod) {
    r.add("BadBoundary", "parallel functors required");
    return r;
  }
  if (static_cast<int>(a.components.size()) != f.dom.objects()) {
    r.add("BadShape", "one component per object required");
    return r;
  }
  const FinCat& e = f.cod;
  for (ObjId c = 0; c < f.dom.objects(); ++c) {
    MorId k = a.components[c];
    if (k < 0 || k >= e.morphisms()) {
      r.add("BadComponent", "object " + std::to_string(c));
      continue;
    }
    if (e.src(k) != f.obj_map[c] || e.tgt(k) != g.obj_map[c])
      r.add("BadComponentEndpoints", "object " + std::to_string(c));
  }
  if (!r.ok()) return r;
  for (MorId u = 0; u < f.dom.morphisms(); ++u) {
    ObjId c = f.dom.src(u), c2 = f.dom.tgt(u);
    if (e.compose(a.components[c2], f.mor_map[u]) != e.compose(g.mor_map[u], a.components[c]))
      r.add("NotNatural", mor_str(u));
  }
  return r;
}

NatTrans identity_nat(const FinFunctor& f) {
  NatTrans a;
  a.dom_f = f;
  a.cod_f = f;
  a.components.resize(f.dom.objects());
  for (ObjId c = 0; c < f.dom.objects(); ++c) a.components[c] = f.cod.identity(f.obj_map[c]);
  return a;
}

NatTrans vertical_compose(const NatTrans& b, const NatTrans& a) {
  if (a.cod_f != b.dom_f) throw BoundaryMismatch("vertical_compose: cod(a) != dom(b)");
  NatTrans out;
  out.dom_f = a.dom_f;
  out.cod_f = b.cod_f;
  out.components.resize(a.components.size());
  const FinCat& e = a.dom_f.cod;
  for (std::size_t c = 0; c < a.components.size(); ++c)
    out.components[c] = e.compose(b.components[c], a.components[c]);
  return out;
}

NatTrans whisker_left(const FinFunctor& h, const NatTrans& a) {
  if (a.dom_f.cod != h.dom) throw BoundaryMismatch("whisker_left: boundary categories differ");
  NatTrans out;
  out.dom_f = compose_functors(h, a.dom_f);
  out.cod_f = compose_functors(h, a.cod_f);
  out.components.resize(a.components.size());
  for (std::size_t c = 0; c < a.components.size(); ++c)
    out.components[c] = h.mor_map[a.components[c]];
  return out;
}

NatTrans whisker_right(const NatTrans& a, const FinFunctor& k) {
  if (k.cod != a.dom_f.dom) throw BoundaryMismatch("whisker_right: boundary categories differ");
  NatTrans out;
  out.dom_f = compose_functors(a.dom_f, k);
  out.cod_f = compose_functors(a.cod_f, k);
  out.components.resize(k.dom.objects());
  for (ObjId c = 0; c < k.dom.objects(); ++c) out.components[c] = a.components[k.obj_map[c]];
  return out;
}

NatTrans horizontal_compose(const NatTrans& b, const NatTrans& a) {
  // b: F => F' between D -> E, a: G => G' between C -> D
  NatTrans left = whisker_right(b, a.cod_f);    // F G' => F' G'
  NatTrans right = whisker_left(b.dom_f, a);    // F G => F G'
  return vertical_compose(left, right);
}

bool is_natural_iso(const NatTrans& a) {
  const FinCat& e = a.dom_f.cod;
  for (MorId k : a.components)
    if (!e.inverse(k)) return false;
  return true;
}

NatTrans invert_nat(const NatTrans& a) {
  NatTrans out;
  out.dom_f = a.cod_f;
  out.cod_f = a.dom_f;
  out.components.resize(a.components.size());
  const FinCat& e = a.dom_f.cod;
  for (std::size_t c = 0; c < a.components.size(); ++c) {
    auto inv = e.inverse(a.components[c]);
    if (!inv) throw NotInvertible("invert_nat: component at object " + std::to_string(c));
    out.components[c] = *inv;
  }
  return out;
}

NatTrans lift_through_ff(const FinFunctor& f, const FinFunctor& g,
                         const FinFunctor& h, const NatTrans& eta) {
  if (!is_fully_faithful(f)) throw NotFullyFaithful("lift_through_ff");
  if (g.cod != f.dom || h.cod != f.dom || g.dom != h.dom)
    throw BoundaryMismatch("lift_through_ff: functor boundaries");
  if (eta.dom_f != compose_functors(f, g) || eta.cod_f != compose_functors(f, h))
    throw BoundaryMismatch("lift_through_ff: eta is not f.g => f.h");
  NatTrans out;
  out.dom_f = g;
  out.cod_f = h;
  out.components.resize(g.dom.objects());
  for (ObjId c = 0; c < g.dom.objects(); ++c) {
    MorId found = kNoMor;
    for (MorId u : f.dom.hom(g.obj_map[c], h.obj_map[c]))
      if (f.mor_map[u] == eta.components[c]) {
        found = u;
        break;
      }
    internal_check(found != kNoMor, "lift_through_ff: no preimage component");
    out.components[c] = found;
  }
  internal_check(validate_nat(out).ok(), "lift_through_ff: lifted family not natural");
  return out;
}

}  // namespace catefs
