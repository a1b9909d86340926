#include "catefs/gen.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "catefs/enumerate.hpp"
#include "catefs/errors.hpp"

namespace catefs {
namespace {

/// The unique morphism x -> y in a category whose hom sets are singletons
/// wherever this is called (indiscrete categories, mostly).
MorId only_mor(const FinCat& c, ObjId x, ObjId y) {
  auto h = c.hom(x, y);
  internal_check(h.size() == 1, "expected a singleton hom set");
  return h[0];
}

/// Extends an object map into an indiscrete category to the unique functor
/// with that object part.
FinFunctor functor_into_indiscrete(const FinCat& dom, const FinCat& cod,
                                   std::vector<ObjId> obj_map) {
  FinFunctor f;
  f.dom = dom;
  f.cod = cod;
  f.obj_map = std::move(obj_map);
  f.mor_map.resize(dom.morphisms());
  for (MorId m = 0; m < dom.morphisms(); ++m)
    f.mor_map[m] = only_mor(cod, f.obj_map[dom.src(m)], f.obj_map[dom.tgt(m)]);
  return f;
}

/// The unique natural transformation f => g when the codomain is indiscrete.
NatTrans forced_nat(const FinFunctor& f, const FinFunctor& g) {
  NatTrans a;
  a.dom_f = f;
  a.cod_f = g;
  a.components.resize(f.dom.objects());
  for (ObjId x = 0; x < f.dom.objects(); ++x)
    a.components[x] = only_mor(f.cod, f.obj_map[x], g.obj_map[x]);
  return a;
}

std::vector<ObjId> random_obj_map(Rng& rng, int dom_objects, int cod_objects) {
  std::vector<ObjId> m(dom_objects);
  for (auto& x : m) x = rng.below_int(cod_objects);
  return m;
}

std::vector<ObjId> random_injection(Rng& rng, int dom_objects, int cod_objects) {
  std::vector<ObjId> pool(cod_objects);
  for (int i = 0; i < cod_objects; ++i) pool[i] = i;
  for (int i = 0; i < dom_objects; ++i)
    std::swap(pool[i], pool[i + rng.below_int(cod_objects - i)]);
  pool.resize(dom_objects);
  return pool;
}

std::vector<std::vector<bool>> transitive_closure(std::vector<std::vector<bool>> leq) {
  const int n = static_cast<int>(leq.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

GeneratedCat thin_generated(FinCat c) {
  GeneratedCat g;
  g.cat = std::move(c);
  g.kind = GeneratedCat::Kind::Thin;
  return g;
}

GeneratedCat other_generated(FinCat c) {
  GeneratedCat g;
  g.cat = std::move(c);
  g.kind = GeneratedCat::Kind::Other;
  return g;
}

GeneratedCat walking_shape_gen(int index) {
  using Edge = std::pair<ObjId, ObjId>;
  switch (index) {
    case 0: return free_category_on_graph(1, {});
    case 1: return free_category_on_graph(3, {});
    case 2: return free_category_on_graph(2, {Edge{0, 1}});
    case 3: return free_category_on_graph(3, {Edge{0, 1}, Edge{1, 2}});
    case 4: return free_category_on_graph(2, {Edge{0, 1}, Edge{0, 1}});
    case 5: return free_category_on_graph(3, {Edge{0, 1}, Edge{0, 2}});
    case 6: return free_category_on_graph(3, {Edge{0, 2}, Edge{1, 2}});
    case 7: {
      // commuting square: 0 below 1 and 2, both below 3
      std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
      for (int i = 0; i < 4; ++i) leq[i][i] = true;
      leq[0][1] = leq[0][2] = leq[1][3] = leq[2][3] = true;
      return thin_generated(preorder_category(transitive_closure(leq)));
    }
    case 8: return thin_generated(indiscrete_category(2));
    case 9: return other_generated(monoid_category({{0, 1}, {1, 0}}));
    default: throw Error("walking shape index out of range");
  }
}

GeneratedCat gen_free_dag(Rng& rng, const GenParams& p) {
  const int n = 1 + rng.below_int(std::max(1, p.max_objects));
  std::vector<std::pair<ObjId, ObjId>> edges;
  if (n > 1) {
    int want = rng.below_int(n + 2);
    for (int i = 0; i < want; ++i) {
      ObjId a = rng.below_int(n - 1);
      ObjId b = a + 1 + rng.below_int(n - 1 - a);
      edges.emplace_back(a, b);
    }
  }
  for (;;) {
    try {
      GeneratedCat g = free_category_on_graph(n, edges);
      if (g.cat.morphisms() <= std::max(p.max_morphisms, n)) return g;
    } catch (const PreconditionFailed&) {
      // too many paths; drop an edge and retry
    }
    if (edges.empty()) return free_category_on_graph(n, {});
    edges.pop_back();
  }
}

GeneratedCat gen_preorder(Rng& rng, const GenParams& p) {
  const int n = 1 + rng.below_int(std::max(1, p.max_objects));
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(1, 3)) leq[i][j] = true;
    leq = transitive_closure(leq);
    int count = 0;
    for (const auto& row : leq)
      for (bool b : row) count += b ? 1 : 0;
    if (count <= std::max(p.max_morphisms, n)) return thin_generated(preorder_category(leq));
  }
  return free_category_on_graph(n, {});
}

GeneratedCat gen_monoid(Rng& rng, const GenParams&) {
  if (rng.chance(1, 4)) return other_generated(monoid_category({{0, 1}, {1, 1}}));
  const int k = 1 + rng.below_int(4);
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = (i + j) % k;
  return other_generated(monoid_category(table));
}

GeneratedCat gen_product(Rng& rng, const GenParams& p) {
  GeneratedCat a = walking_shape_gen(rng.below_int(walking_shape_count()));
  GeneratedCat b = walking_shape_gen(rng.below_int(walking_shape_count()));
  FinCat prod = product_category(a.cat, b.cat);
  if (prod.morphisms() > std::max(p.max_morphisms, 16)) return a;
  return other_generated(std::move(prod));
}

/// A small category guaranteed to contain nonidentity isomorphisms, used
/// where conjugation needs something to conjugate by.
FinCat iso_rich_cat(Rng& rng) {
  switch (rng.below_int(3)) {
    case 0: return indiscrete_category(2 + rng.below_int(2));
    case 1: return monoid_category({{0, 1}, {1, 0}});
    default:
      return disjoint_union(indiscrete_category(2), walking_arrow_category());
  }
}

std::vector<MorId> isos_into(const FinCat& c, ObjId target) {
  std::vector<MorId> out;
  for (MorId g = 0; g < c.morphisms(); ++g)
    if (c.tgt(g) == target && c.inverse(g)) out.push_back(g);
  return out;
}

/// Wide subcategory of c spanned by the identities and a random subset of
/// morphisms, closed under composition; returns the inclusion.
FinFunctor random_wide_subcategory(Rng& rng, const FinCat& c) {
  std::vector<bool> in(c.morphisms(), false);
  for (ObjId x = 0; x < c.objects(); ++x) in[c.identity(x)] = true;
  for (MorId m = 0; m < c.morphisms(); ++m)
    if (!c.is_identity(m) && rng.chance(1, 2)) in[m] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (MorId g = 0; g < c.morphisms(); ++g)
      for (MorId f = 0; f < c.morphisms(); ++f)
        if (in[g] && in[f] && c.composable(g, f) && !in[c.compose(g, f)]) {
          in[c.compose(g, f)] = true;
          changed = true;
        }
  }
  std::vector<MorId> keep;
  std::vector<MorId> index(c.morphisms(), kNoMor);
  for (MorId m = 0; m < c.morphisms(); ++m)
    if (in[m]) {
      index[m] = static_cast<MorId>(keep.size());
      keep.push_back(m);
    }
  FinCat sub;
  sub.mor.resize(keep.size());
  sub.id_of.resize(c.objects());
  sub.comp.assign(keep.size() * keep.size(), kNoMor);
  for (std::size_t i = 0; i < keep.size(); ++i) sub.mor[i] = c.mor[keep[i]];
  for (ObjId x = 0; x < c.objects(); ++x) sub.id_of[x] = index[c.identity(x)];
  for (std::size_t g = 0; g < keep.size(); ++g)
    for (std::size_t f = 0; f < keep.size(); ++f)
      if (c.composable(keep[g], keep[f]))
        sub.set_comp(static_cast<MorId>(g), static_cast<MorId>(f),
                     index[c.compose(keep[g], keep[f])]);
  FinFunctor inc;
  inc.dom = std::move(sub);
  inc.cod = c;
  inc.obj_map.resize(c.objects());
  for (ObjId x = 0; x < c.objects(); ++x) inc.obj_map[x] = x;
  inc.mor_map = std::move(keep);
  return inc;
}

}  // namespace

int walking_shape_count() { return 10; }

FinCat walking_shape_cat(int index) { return walking_shape_gen(index).cat; }

GeneratedCat free_category_on_graph(int n_nodes,
                                    const std::vector<std::pair<ObjId, ObjId>>& edges) {
  // cycle check (paths must be finite)
  {
    std::vector<int> indeg(n_nodes, 0);
    for (const auto& e : edges) ++indeg[e.second];
    std::vector<ObjId> queue;
    for (ObjId v = 0; v < n_nodes; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
      ObjId v = queue.back();
      queue.pop_back();
      ++seen;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == v && --indeg[edges[e].second] == 0)
          queue.push_back(edges[e].second);
    }
    if (seen != n_nodes) throw PreconditionFailed("graph has a cycle");
  }

  struct Path {
    ObjId src, tgt;
    std::vector<MorId> word;  // edge indices, leftmost applied first
  };
  std::vector<Path> paths;
  for (ObjId v = 0; v < n_nodes; ++v) paths.push_back({v, v, {}});
  std::size_t level_begin = 0;
  while (level_begin < paths.size()) {
    std::size_t level_end = paths.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == paths[i].tgt) {
          Path q = paths[i];
          q.word.push_back(static_cast<MorId>(e));
          q.tgt = edges[e].second;
          paths.push_back(std::move(q));
          if (paths.size() > 512) throw PreconditionFailed("free category too large");
        }
    level_begin = level_end;
  }

  std::map<std::pair<ObjId, std::vector<MorId>>, MorId> by_word;
  for (std::size_t i = 0; i < paths.size(); ++i)
    by_word[{paths[i].src, paths[i].word}] = static_cast<MorId>(i);

  GeneratedCat g;
  g.kind = GeneratedCat::Kind::Free;
  g.cat.mor.resize(paths.size());
  g.cat.id_of.resize(n_nodes);
  g.cat.comp.assign(paths.size() * paths.size(), kNoMor);
  for (std::size_t i = 0; i < paths.size(); ++i) g.cat.mor[i] = {paths[i].src, paths[i].tgt};
  for (ObjId v = 0; v < n_nodes; ++v) g.cat.id_of[v] = v;
  for (MorId gm = 0; gm < g.cat.morphisms(); ++gm)
    for (MorId fm = 0; fm < g.cat.morphisms(); ++fm) {
      if (paths[fm].tgt != paths[gm].src) continue;
      std::vector<MorId> word = paths[fm].word;
      word.insert(word.end(), paths[gm].word.begin(), paths[gm].word.end());
      g.cat.set_comp(gm, fm, by_word.at({paths[fm].src, std::move(word)}));
    }
  g.generators.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    g.generators[e] = by_word.at({edges[e].first, {static_cast<MorId>(e)}});
  g.factors.resize(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) g.factors[i] = paths[i].word;
  return g;
}

GeneratedCat gen_fincat(Rng& rng, const GenParams& p) {
  CatFamily fam = p.family;
  if (fam == CatFamily::Mixed) {
    switch (rng.below_int(5)) {
      case 0: fam = CatFamily::WalkingShape; break;
      case 1: fam = CatFamily::FreeAcyclicGraph; break;
      case 2: fam = CatFamily::Preorder; break;
      case 3: fam = CatFamily::MonoidTable; break;
      default: fam = CatFamily::Product; break;
    }
  }
  switch (fam) {
    case CatFamily::WalkingShape: return walking_shape_gen(rng.below_int(walking_shape_count()));
    case CatFamily::FreeAcyclicGraph: return gen_free_dag(rng, p);
    case CatFamily::Preorder: return gen_preorder(rng, p);
    case CatFamily::MonoidTable: return gen_monoid(rng, p);
    case CatFamily::Product: return gen_product(rng, p);
    default: throw Error("unhandled generator family");
  }
}

FinFunctor gen_functor(Rng& rng, const GeneratedCat& dom, const FinCat& cod) {
  if (dom.cat.objects() == 0) {
    FinFunctor f;
    f.dom = dom.cat;
    f.cod = cod;
    return f;
  }
  if (cod.objects() == 0) throw NoFunctorExists("codomain is empty");

  if (dom.kind == GeneratedCat::Kind::Free) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<ObjId> omap = random_obj_map(rng, dom.cat.objects(), cod.objects());
      std::vector<MorId> gen_img(dom.generators.size());
      bool ok = true;
      for (std::size_t e = 0; e < dom.generators.size(); ++e) {
        MorId edge = dom.generators[e];
        auto h = cod.hom(omap[dom.cat.src(edge)], omap[dom.cat.tgt(edge)]);
        if (h.empty()) {
          ok = false;
          break;
        }
        gen_img[e] = rng.pick(h);
      }
      if (!ok) continue;
      FinFunctor f;
      f.dom = dom.cat;
      f.cod = cod;
      f.obj_map = std::move(omap);
      f.mor_map.resize(dom.cat.morphisms());
      for (MorId m = 0; m < dom.cat.morphisms(); ++m) {
        MorId cur = cod.identity(f.obj_map[dom.cat.src(m)]);
        for (MorId e : dom.factors[m]) cur = cod.compose(gen_img[e], cur);
        f.mor_map[m] = cur;
      }
      return f;
    }
    return constant_functor(dom.cat, cod, rng.below_int(cod.objects()));
  }

  auto found = find_functor(dom.cat, cod, [&rng] { return rng.next(); });
  if (found) return *found;
  return constant_functor(dom.cat, cod, rng.below_int(cod.objects()));
}

FinFunctor indiscrete_collapse(const FinCat& x) {
  FinCat cod = indiscrete_category(x.objects());
  std::vector<ObjId> omap(x.objects());
  for (ObjId v = 0; v < x.objects(); ++v) omap[v] = v;
  FinFunctor f = functor_into_indiscrete(x, cod, std::move(omap));
  f.dom = x;
  return f;
}

FillInstance gen_fill_instance(Rng& rng, const GenParams& p, bool identity_psi) {
  // F' and the wide subcategory F with bo inclusion eps
  GeneratedCat fprime = gen_fincat(rng, p);
  FinFunctor eps = random_wide_subcategory(rng, fprime.cat);

  // target G, a random diagonal delta0, and a fully faithful mu out of G
  GenParams small = p;
  small.max_objects = std::min(p.max_objects, 3);
  GeneratedCat gcat = gen_fincat(rng, small);
  FinFunctor delta0 = gen_functor(rng, fprime, gcat.cat);

  FinFunctor mu;
  mu.dom = gcat.cat;
  switch (identity_psi ? rng.below_int(2) : rng.below_int(3)) {
    case 0:
      mu = identity_functor(gcat.cat);
      break;
    case 1: {
      FinCat extra = iso_rich_cat(rng);
      mu.cod = disjoint_union(gcat.cat, extra);
      mu.obj_map.resize(gcat.cat.objects());
      mu.mor_map.resize(gcat.cat.morphisms());
      for (ObjId x = 0; x < gcat.cat.objects(); ++x) mu.obj_map[x] = x;
      for (MorId m = 0; m < gcat.cat.morphisms(); ++m) mu.mor_map[m] = m;
      break;
    }
    default: {
      FinCat ind = indiscrete_category(2 + rng.below_int(2));
      mu.cod = product_category(gcat.cat, ind);
      mu.obj_map.resize(gcat.cat.objects());
      mu.mor_map.resize(gcat.cat.morphisms());
      for (ObjId x = 0; x < gcat.cat.objects(); ++x) mu.obj_map[x] = pair_obj(ind, x, 0);
      for (MorId m = 0; m < gcat.cat.morphisms(); ++m)
        mu.mor_map[m] = pair_mor(ind, m, ind.identity(0));
      break;
    }
  }

  FinFunctor md = compose_functors(mu, delta0);

  // alpha' is mu∘delta0 conjugated by an invertible family t; psi_tilde0 = t
  const FinCat& gp = mu.cod;
  std::vector<MorId> t(fprime.cat.objects());
  for (ObjId x = 0; x < fprime.cat.objects(); ++x) {
    if (identity_psi) {
      t[x] = gp.identity(md.obj_map[x]);
    } else {
      t[x] = rng.pick(isos_into(gp, md.obj_map[x]));
    }
  }
  FinFunctor alpha_prime;
  alpha_prime.dom = fprime.cat;
  alpha_prime.cod = gp;
  alpha_prime.obj_map.resize(fprime.cat.objects());
  alpha_prime.mor_map.resize(fprime.cat.morphisms());
  for (ObjId x = 0; x < fprime.cat.objects(); ++x) alpha_prime.obj_map[x] = gp.src(t[x]);
  for (MorId m = 0; m < fprime.cat.morphisms(); ++m) {
    MorId tinv = *gp.inverse(t[fprime.cat.tgt(m)]);
    alpha_prime.mor_map[m] =
        gp.compose(tinv, gp.compose(md.mor_map[m], t[fprime.cat.src(m)]));
  }
  NatTrans psi_tilde0;
  psi_tilde0.dom_f = alpha_prime;
  psi_tilde0.cod_f = md;
  psi_tilde0.components = std::move(t);

  FillInstance inst;
  inst.square.eps = eps;
  inst.square.mu = mu;
  inst.square.alpha = compose_functors(delta0, eps);
  inst.square.alpha_prime = alpha_prime;
  inst.square.psi = whisker_right(psi_tilde0, eps);
  inst.delta0 = std::move(delta0);
  inst.psi_tilde0 = std::move(psi_tilde0);
  return inst;
}

// ---- 2-categorical generators ---------------------------------------------

namespace {

GeneratedTwoCat locally_discrete_gen(GeneratedCat base, TwoCatShape shape) {
  GeneratedTwoCat g;
  g.tc = locally_discrete_two_cat(base.cat);
  g.shape = shape;
  g.base = std::move(base);
  return g;
}

/// 2-functor over a locally discrete free base from values on objects and
/// generating edges; every 2-cell is an identity.
CatValued2Functor free_base_two_functor(const GeneratedTwoCat& c,
                                        std::vector<FinCat> values,
                                        const std::vector<FinFunctor>& gen_img) {
  const FinCat& base = c.base.cat;
  const int n = base.objects();
  CatValued2Functor f;
  f.dom = c.tc;
  f.on_obj = std::move(values);
  f.on_one.resize(static_cast<std::size_t>(n) * n);
  f.on_two.resize(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const std::vector<MorId> cell = base.hom(a, b);
      for (MorId m : cell) {
        FinFunctor img = identity_functor(f.on_obj[a]);
        for (MorId e : c.base.factors[m]) img = compose_functors(gen_img[e], img);
        f.on_one[a * n + b].push_back(img);
        f.on_two[a * n + b].push_back(identity_nat(f.on_one[a * n + b].back()));
      }
    }
  return f;
}

TwoInstance identity_instance(CatValued2Functor f) {
  TwoInstance inst;
  inst.alpha = identity_two_nat(f);
  inst.g = f;
  inst.f = std::move(f);
  return inst;
}

TwoInstance constant_instance(Rng& rng, const FinTwoCat& tc, const GenParams& p) {
  GeneratedCat x = gen_fincat(rng, p);
  GeneratedCat y = gen_fincat(rng, p);
  FinFunctor h;
  if (y.cat.objects() == 0 || x.cat.objects() == 0) {
    y = x;
    h = identity_functor(x.cat);
  } else {
    h = gen_functor(rng, x, y.cat);
  }
  TwoInstance inst;
  inst.f = constant_two_functor(tc, x.cat);
  inst.g = constant_two_functor(tc, y.cat);
  inst.alpha.dom_f = inst.f;
  inst.alpha.cod_f = inst.g;
  inst.alpha.components.assign(tc.objects(), h);
  return inst;
}

/// Instance over a discrete 2-category: values and components are chosen
/// independently per object.
TwoInstance discrete_instance(Rng& rng, const FinTwoCat& tc, const GenParams& p) {
  const int n = tc.objects();
  TwoInstance inst;
  inst.f.dom = tc;
  inst.g.dom = tc;
  inst.f.on_one.resize(static_cast<std::size_t>(n) * n);
  inst.f.on_two.resize(static_cast<std::size_t>(n) * n);
  inst.g.on_one.resize(static_cast<std::size_t>(n) * n);
  inst.g.on_two.resize(static_cast<std::size_t>(n) * n);
  for (ObjId c2 = 0; c2 < n; ++c2) {
    GeneratedCat x = gen_fincat(rng, p);
    if (x.cat.objects() == 0) x = walking_shape_gen(0);
    FinFunctor comp;
    if (rng.chance(1, 3)) {
      comp = indiscrete_collapse(x.cat);
    } else {
      GeneratedCat y = gen_fincat(rng, p);
      if (y.cat.objects() == 0) y = walking_shape_gen(0);
      comp = gen_functor(rng, x, y.cat);
    }
    inst.f.on_obj.push_back(comp.dom);
    inst.g.on_obj.push_back(comp.cod);
    inst.f.on_one[c2 * n + c2].push_back(identity_functor(comp.dom));
    inst.f.on_two[c2 * n + c2].push_back(identity_nat(inst.f.on_one[c2 * n + c2][0]));
    inst.g.on_one[c2 * n + c2].push_back(identity_functor(comp.cod));
    inst.g.on_two[c2 * n + c2].push_back(identity_nat(inst.g.on_one[c2 * n + c2][0]));
    inst.alpha.components.push_back(std::move(comp));
  }
  inst.alpha.dom_f = inst.f;
  inst.alpha.cod_f = inst.g;
  return inst;
}

/// Instance over a locally discrete free base.  All values are indiscrete,
/// generator images are free object maps, and the components are injections;
/// naturality holds on objects by construction and morphism parts are forced.
TwoInstance free_base_instance(Rng& rng, const GeneratedTwoCat& c, const GenParams& p) {
  const FinCat& base = c.base.cat;
  const int n = base.objects();
  const int cap = std::max(1, p.max_objects);

  std::vector<FinCat> fv(n), gv(n);
  std::vector<int> fsize(n), gsize(n);
  for (ObjId v = 0; v < n; ++v) {
    fsize[v] = 1 + rng.below_int(cap);
    gsize[v] = fsize[v] + rng.below_int(2);
    fv[v] = indiscrete_category(fsize[v]);
    gv[v] = indiscrete_category(gsize[v]);
  }
  std::vector<FinFunctor> fgen(c.base.generators.size());
  for (std::size_t e = 0; e < c.base.generators.size(); ++e) {
    MorId edge = c.base.generators[e];
    ObjId a = base.src(edge), b = base.tgt(edge);
    fgen[e] = functor_into_indiscrete(fv[a], fv[b], random_obj_map(rng, fsize[a], fsize[b]));
  }
  std::vector<FinFunctor> comps(n);
  for (ObjId v = 0; v < n; ++v)
    comps[v] = functor_into_indiscrete(fv[v], gv[v], random_injection(rng, fsize[v], gsize[v]));
  std::vector<FinFunctor> ggen(c.base.generators.size());
  for (std::size_t e = 0; e < c.base.generators.size(); ++e) {
    MorId edge = c.base.generators[e];
    ObjId a = base.src(edge), b = base.tgt(edge);
    // match the components on the image of alpha_a, free elsewhere
    std::vector<ObjId> omap(gsize[a]);
    for (ObjId y = 0; y < gsize[a]; ++y) omap[y] = rng.below_int(gsize[b]);
    for (ObjId x = 0; x < fsize[a]; ++x)
      omap[comps[a].obj_map[x]] = comps[b].obj_map[fgen[e].obj_map[x]];
    ggen[e] = functor_into_indiscrete(gv[a], gv[b], std::move(omap));
  }

  TwoInstance inst;
  inst.f = free_base_two_functor(c, std::move(fv), fgen);
  inst.g = free_base_two_functor(c, std::move(gv), ggen);
  inst.alpha.dom_f = inst.f;
  inst.alpha.cod_f = inst.g;
  inst.alpha.components = std::move(comps);
  return inst;
}

/// Instance over hom(0,1)-only shapes (one nontrivial hom category that is
/// free on its covering 2-cells).  The value at 1 is indiscrete, so 1-cell
/// images are free object maps and every 2-cell image is forced.
TwoInstance hom_shape_instance(Rng& rng, const GeneratedTwoCat& c, const GenParams& p) {
  const FinTwoCat& tc = c.tc;
  const FinCat& hom01 = tc.hom(0, 1);
  const int cap = std::max(1, p.max_objects);

  GeneratedCat xg = gen_fincat(rng, p);
  if (xg.cat.objects() == 0) xg = walking_shape_gen(0);
  const FinCat& x = xg.cat;
  const int k = 1 + rng.below_int(cap);
  FinCat f1 = indiscrete_category(k);

  CatValued2Functor f;
  f.dom = tc;
  f.on_obj = {x, f1};
  f.on_one.resize(4);
  f.on_two.resize(4);
  f.on_one[0 * 2 + 0] = {identity_functor(x)};
  f.on_two[0 * 2 + 0] = {identity_nat(f.on_one[0][0])};
  f.on_one[1 * 2 + 1] = {identity_functor(f1)};
  f.on_two[1 * 2 + 1] = {identity_nat(f.on_one[3][0])};
  for (ObjId cell = 0; cell < hom01.objects(); ++cell)
    f.on_one[0 * 2 + 1].push_back(
        functor_into_indiscrete(x, f1, random_obj_map(rng, x.objects(), k)));
  for (MorId m = 0; m < hom01.morphisms(); ++m)
    f.on_two[0 * 2 + 1].push_back(
        forced_nat(f.on_one[0 * 2 + 1][hom01.src(m)], f.on_one[0 * 2 + 1][hom01.tgt(m)]));

  // alpha_0 is either the identity or the indiscrete collapse of x; both are
  // identity maps on objects, so G's 1-cell images are determined there.
  const bool collapse = rng.chance(1, 2);
  FinFunctor alpha0 = collapse ? indiscrete_collapse(x) : identity_functor(x);
  const FinCat& g0 = alpha0.cod;
  const int m1 = k + rng.below_int(2);
  FinCat g1 = indiscrete_category(m1);
  FinFunctor alpha1 =
      functor_into_indiscrete(f1, g1, random_injection(rng, k, m1));

  CatValued2Functor g;
  g.dom = tc;
  g.on_obj = {g0, g1};
  g.on_one.resize(4);
  g.on_two.resize(4);
  g.on_one[0 * 2 + 0] = {identity_functor(g0)};
  g.on_two[0 * 2 + 0] = {identity_nat(g.on_one[0][0])};
  g.on_one[1 * 2 + 1] = {identity_functor(g1)};
  g.on_two[1 * 2 + 1] = {identity_nat(g.on_one[3][0])};
  for (ObjId cell = 0; cell < hom01.objects(); ++cell) {
    std::vector<ObjId> omap(g0.objects());
    for (ObjId v = 0; v < g0.objects(); ++v)
      omap[v] = alpha1.obj_map[f.on_one[0 * 2 + 1][cell].obj_map[v]];
    g.on_one[0 * 2 + 1].push_back(functor_into_indiscrete(g0, g1, std::move(omap)));
  }
  for (MorId m = 0; m < hom01.morphisms(); ++m)
    g.on_two[0 * 2 + 1].push_back(
        forced_nat(g.on_one[0 * 2 + 1][hom01.src(m)], g.on_one[0 * 2 + 1][hom01.tgt(m)]));

  TwoInstance inst;
  inst.alpha.dom_f = f;
  inst.alpha.cod_f = g;
  inst.alpha.components = {alpha0, alpha1};
  inst.f = std::move(f);
  inst.g = std::move(g);
  return inst;
}

}  // namespace

GeneratedTwoCat gen_two_cat(Rng& rng, const GenParams& p) {
  switch (rng.below_int(9)) {
    case 0: return named_two_cat("terminal", rng, p);
    case 1: return named_two_cat("discrete-3", rng, p);
    case 2: return named_two_cat("walking-arrow", rng, p);
    case 3: return named_two_cat("walking-2cell", rng, p);
    case 4: return named_two_cat("composable-pair", rng, p);
    case 5: return named_two_cat("composable-2cells", rng, p);
    case 6: return named_two_cat("locally-discrete-random", rng, p);
    case 7: return named_two_cat("one-object-monoid", rng, p);
    default: return named_two_cat("product", rng, p);
  }
}

GeneratedTwoCat named_two_cat(const std::string& name, Rng& rng, const GenParams& p) {
  using Edge = std::pair<ObjId, ObjId>;
  GeneratedTwoCat g;
  if (name == "terminal") {
    g.tc = terminal_two_cat();
    g.shape = TwoCatShape::Terminal;
  } else if (name == "discrete-3") {
    g.tc = discrete_two_cat(3);
    g.shape = TwoCatShape::Discrete;
  } else if (name == "walking-arrow") {
    g = locally_discrete_gen(free_category_on_graph(2, {Edge{0, 1}}), TwoCatShape::WalkingArrow);
  } else if (name == "walking-2cell") {
    g.tc = walking_two_cell_two_cat();
    g.shape = TwoCatShape::Walking2Cell;
  } else if (name == "composable-pair") {
    g = locally_discrete_gen(free_category_on_graph(3, {Edge{0, 1}, Edge{1, 2}}),
                             TwoCatShape::ComposablePair);
  } else if (name == "composable-2cells") {
    g.tc = composable_two_cells_two_cat();
    g.shape = TwoCatShape::Composable2Cells;
  } else if (name == "locally-discrete-random") {
    g = locally_discrete_gen(gen_free_dag(rng, p), TwoCatShape::LocallyDiscreteFree);
  } else if (name == "one-object-monoid") {
    g.tc = one_object_two_cat({{0, 1}, {1, 0}});
    g.shape = TwoCatShape::OneObjectMonoid;
  } else if (name == "product") {
    g.tc = product_two_cat(walking_arrow_two_cat(), discrete_two_cat(2));
    g.shape = TwoCatShape::Product;
  } else {
    throw Error("unknown 2-category shape: " + name);
  }
  return g;
}

TwoInstance gen_two_instance(Rng& rng, const GeneratedTwoCat& c, const GenParams& p) {
  // occasional degenerate instances keep the boundary cases covered
  if (rng.chance(1, 8)) {
    if (rng.chance(1, 2)) return constant_instance(rng, c.tc, p);
    return identity_instance(constant_two_functor(c.tc, gen_fincat(rng, p).cat));
  }
  switch (c.shape) {
    case TwoCatShape::Terminal:
    case TwoCatShape::Discrete:
      return discrete_instance(rng, c.tc, p);
    case TwoCatShape::WalkingArrow:
    case TwoCatShape::ComposablePair:
    case TwoCatShape::LocallyDiscreteFree:
      return free_base_instance(rng, c, p);
    case TwoCatShape::Walking2Cell:
    case TwoCatShape::Composable2Cells:
      return hom_shape_instance(rng, c, p);
    case TwoCatShape::OneObjectMonoid:
    case TwoCatShape::Product:
      return constant_instance(rng, c.tc, p);
  }
  throw Error("unhandled 2-category shape");
}

}  // namespace catefs
