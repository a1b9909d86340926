#include "catefs/twocat.hpp"

#include <functional>
#include <string>

namespace catefs {

namespace {

using ComposeObj = std::function<ObjId(ObjId, ObjId, ObjId, ObjId, ObjId)>;
using ComposeMor = std::function<MorId(ObjId, ObjId, ObjId, MorId, MorId)>;

FinTwoCat assemble_two_cat(int n, std::vector<FinCat> homs, std::vector<ObjId> units,
                           const ComposeObj& cobj, const ComposeMor& cmor) {
  FinTwoCat t;
  t.n_objects = n;
  t.homs = std::move(homs);
  t.units = std::move(units);
  t.hcomps.resize(static_cast<std::size_t>(n) * n * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c) {
        FinFunctor h;
        h.dom = product_category(t.hom(b, c), t.hom(a, b));
        h.cod = t.hom(a, c);
        h.obj_map.resize(h.dom.objects());
        h.mor_map.resize(h.dom.morphisms());
        const FinCat& second = t.hom(a, b);
        for (ObjId g = 0; g < t.hom(b, c).objects(); ++g)
          for (ObjId f = 0; f < second.objects(); ++f)
            h.obj_map[pair_obj(second, g, f)] = cobj(a, b, c, g, f);
        for (MorId mg = 0; mg < t.hom(b, c).morphisms(); ++mg)
          for (MorId mf = 0; mf < second.morphisms(); ++mf)
            h.mor_map[pair_mor(second, mg, mf)] = cmor(a, b, c, mg, mf);
        t.hcomp(a, b, c) = std::move(h);
      }
  return t;
}

FinCat empty_category() {
  FinCat c;
  return c;
}

std::string obj_str(ObjId a) { return std::to_string(a); }

}  // namespace

Report validate_two_cat(const FinTwoCat& t) {
  Report r;
  const int n = t.n_objects;
  if (static_cast<int>(t.homs.size()) != n * n ||
      static_cast<int>(t.hcomps.size()) != n * n * n ||
      static_cast<int>(t.units.size()) != n) {
    r.add("BadShape", "hom/hcomp/unit table sizes do not match object count");
    return r;
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      r.merge(validate_category(t.hom(a, b)), "hom(" + obj_str(a) + "," + obj_str(b) + ")");
  if (!r.ok()) return r;
  for (ObjId a = 0; a < n; ++a) {
    if (t.units[a] < 0 || t.units[a] >= t.hom(a, a).objects())
      r.add("BadUnit", "object " + obj_str(a));
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c) {
        const FinFunctor& h = t.hcomp(a, b, c);
        std::string where = "hcomp(" + obj_str(a) + "," + obj_str(b) + "," + obj_str(c) + ")";
        if (h.dom != product_category(t.hom(b, c), t.hom(a, b)))
          r.add("BadHcompDomain", where);
        else if (h.cod != t.hom(a, c))
          r.add("BadHcompCodomain", where);
        else
          r.merge(validate_functor(h), where);
      }
  if (!r.ok()) return r;
  // strict unit laws
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const FinCat& ab = t.hom(a, b);
      for (ObjId f = 0; f < ab.objects(); ++f) {
        if (t.compose1(a, a, b, f, t.units[a]) != f)
          r.add("UnitLaw1Cell", "right unit at hom(" + obj_str(a) + "," + obj_str(b) + ") 1-cell " + obj_str(f));
        if (t.compose1(a, b, b, t.units[b], f) != f)
          r.add("UnitLaw1Cell", "left unit at hom(" + obj_str(a) + "," + obj_str(b) + ") 1-cell " + obj_str(f));
      }
      MorId ida = t.hom(a, a).identity(t.units[a]);
      MorId idb = t.hom(b, b).identity(t.units[b]);
      for (MorId m = 0; m < ab.morphisms(); ++m) {
        if (t.compose2(a, a, b, m, ida) != m)
          r.add("UnitLaw2Cell", "right unit at hom(" + obj_str(a) + "," + obj_str(b) + ") 2-cell " + obj_str(m));
        if (t.compose2(a, b, b, idb, m) != m)
          r.add("UnitLaw2Cell", "left unit at hom(" + obj_str(a) + "," + obj_str(b) + ") 2-cell " + obj_str(m));
      }
    }
  // strict associativity
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId d = 0; d < n; ++d) {
          for (ObjId h = 0; h < t.hom(c, d).objects(); ++h)
            for (ObjId g = 0; g < t.hom(b, c).objects(); ++g)
              for (ObjId f = 0; f < t.hom(a, b).objects(); ++f)
                if (t.compose1(a, c, d, h, t.compose1(a, b, c, g, f)) !=
                    t.compose1(a, b, d, t.compose1(b, c, d, h, g), f))
                  r.add("NonAssociative1Cell",
                        obj_str(a) + "->" + obj_str(b) + "->" + obj_str(c) + "->" + obj_str(d));
          for (MorId mh = 0; mh < t.hom(c, d).morphisms(); ++mh)
            for (MorId mg = 0; mg < t.hom(b, c).morphisms(); ++mg)
              for (MorId mf = 0; mf < t.hom(a, b).morphisms(); ++mf)
                if (t.compose2(a, c, d, mh, t.compose2(a, b, c, mg, mf)) !=
                    t.compose2(a, b, d, t.compose2(b, c, d, mh, mg), mf))
                  r.add("NonAssociative2Cell",
                        obj_str(a) + "->" + obj_str(b) + "->" + obj_str(c) + "->" + obj_str(d));
        }
  // interchange, asserted directly
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c) {
        const FinCat& bc = t.hom(b, c);
        const FinCat& ab = t.hom(a, b);
        const FinCat& ac = t.hom(a, c);
        for (MorId m2 = 0; m2 < bc.morphisms(); ++m2)
          for (MorId m1 = 0; m1 < bc.morphisms(); ++m1) {
            if (!bc.composable(m2, m1)) continue;
            for (MorId n2 = 0; n2 < ab.morphisms(); ++n2)
              for (MorId n1 = 0; n1 < ab.morphisms(); ++n1) {
                if (!ab.composable(n2, n1)) continue;
                MorId lhs = t.compose2(a, b, c, bc.compose(m2, m1), ab.compose(n2, n1));
                MorId rhs = ac.compose(t.compose2(a, b, c, m2, n2), t.compose2(a, b, c, m1, n1));
                if (lhs != rhs)
                  r.add("Interchange", "hom(" + obj_str(a) + "," + obj_str(b) + "," + obj_str(c) + ")");
              }
          }
      }
  return r;
}

// ---- builders -------------------------------------------------------------

FinTwoCat terminal_two_cat() { return discrete_two_cat(1); }

FinTwoCat discrete_two_cat(int n) {
  std::vector<FinCat> homs(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) homs[a * n + b] = a == b ? terminal_category() : empty_category();
  std::vector<ObjId> units(n, 0);
  return assemble_two_cat(
      n, std::move(homs), std::move(units),
      [](ObjId, ObjId, ObjId, ObjId, ObjId) { return 0; },
      [](ObjId, ObjId, ObjId, MorId, MorId) { return 0; });
}

FinTwoCat walking_arrow_two_cat() { return locally_discrete_two_cat(walking_arrow_category()); }

FinTwoCat walking_two_cell_two_cat() {
  std::vector<FinCat> homs(4);
  homs[0 * 2 + 0] = terminal_category();
  homs[0 * 2 + 1] = walking_arrow_category();
  homs[1 * 2 + 0] = empty_category();
  homs[1 * 2 + 1] = terminal_category();
  std::vector<ObjId> units(2, 0);
  // the only nontrivial composites are with units, which act trivially
  return assemble_two_cat(
      2, std::move(homs), std::move(units),
      [](ObjId a, ObjId b, ObjId c, ObjId g, ObjId f) { return a == b ? g : (b == c ? f : 0); },
      [](ObjId a, ObjId b, ObjId c, MorId mg, MorId mf) { return a == b ? mg : (b == c ? mf : 0); });
}

FinTwoCat composable_pair_two_cat() { return locally_discrete_two_cat(chain_category(3)); }

FinTwoCat composable_two_cells_two_cat() {
  std::vector<FinCat> homs(4);
  homs[0 * 2 + 0] = terminal_category();
  homs[0 * 2 + 1] = chain_category(3);
  homs[1 * 2 + 0] = empty_category();
  homs[1 * 2 + 1] = terminal_category();
  std::vector<ObjId> units(2, 0);
  return assemble_two_cat(
      2, std::move(homs), std::move(units),
      [](ObjId a, ObjId b, ObjId c, ObjId g, ObjId f) { return a == b ? g : (b == c ? f : 0); },
      [](ObjId a, ObjId b, ObjId c, MorId mg, MorId mf) { return a == b ? mg : (b == c ? mf : 0); });
}

FinTwoCat locally_discrete_two_cat(const FinCat& c) {
  const int n = c.objects();
  // objects of hom(a, b) index into c.hom(a, b) in morphism-id order
  std::vector<std::vector<MorId>> cell(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<ObjId>> cell_index(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      cell[a * n + b] = c.hom(a, b);
      cell_index[a * n + b].assign(c.morphisms(), -1);
      for (std::size_t k = 0; k < cell[a * n + b].size(); ++k)
        cell_index[a * n + b][cell[a * n + b][k]] = static_cast<ObjId>(k);
    }
  std::vector<FinCat> homs(static_cast<std::size_t>(n) * n);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      homs[a * n + b] = discrete_category(static_cast<int>(cell[a * n + b].size()));
  std::vector<ObjId> units(n);
  for (ObjId a = 0; a < n; ++a) units[a] = cell_index[a * n + a][c.identity(a)];
  auto compose_cells = [&c, &cell, &cell_index, n](ObjId a, ObjId b, ObjId cc, ObjId g, ObjId f) {
    MorId gm = cell[b * n + cc][g];
    MorId fm = cell[a * n + b][f];
    return cell_index[a * n + cc][c.compose(gm, fm)];
  };
  return assemble_two_cat(
      n, std::move(homs), std::move(units), compose_cells,
      [compose_cells](ObjId a, ObjId b, ObjId cc, MorId mg, MorId mf) {
        return static_cast<MorId>(compose_cells(a, b, cc, mg, mf));
      });
}

FinTwoCat one_object_two_cat(const std::vector<std::vector<int>>& monoid_table) {
  const int m = static_cast<int>(monoid_table.size());
  std::vector<FinCat> homs{discrete_category(m)};
  std::vector<ObjId> units{0};
  return assemble_two_cat(
      1, std::move(homs), std::move(units),
      [&monoid_table](ObjId, ObjId, ObjId, ObjId g, ObjId f) { return monoid_table[g][f]; },
      [&monoid_table](ObjId, ObjId, ObjId, MorId mg, MorId mf) { return monoid_table[mg][mf]; });
}

FinTwoCat product_two_cat(const FinTwoCat& a, const FinTwoCat& b) {
  const int n = a.n_objects * b.n_objects;
  auto aof = [&b](ObjId p) { return p / b.n_objects; };
  auto bof = [&b](ObjId p) { return p % b.n_objects; };
  std::vector<FinCat> homs(static_cast<std::size_t>(n) * n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      homs[x * n + y] = product_category(a.hom(aof(x), aof(y)), b.hom(bof(x), bof(y)));
  std::vector<ObjId> units(n);
  for (ObjId x = 0; x < n; ++x)
    units[x] = pair_obj(b.hom(bof(x), bof(x)), a.units[aof(x)], b.units[bof(x)]);
  auto cobj = [&a, &b, aof, bof](ObjId x, ObjId y, ObjId z, ObjId g, ObjId f) {
    ObjId xa = aof(x), ya = aof(y), za = aof(z);
    ObjId xb = bof(x), yb = bof(y), zb = bof(z);
    ObjId ga = fst_obj(b.hom(yb, zb), g), gb = snd_obj(b.hom(yb, zb), g);
    ObjId fa = fst_obj(b.hom(xb, yb), f), fb = snd_obj(b.hom(xb, yb), f);
    return pair_obj(b.hom(xb, zb), a.compose1(xa, ya, za, ga, fa), b.compose1(xb, yb, zb, gb, fb));
  };
  auto cmor = [&a, &b, aof, bof](ObjId x, ObjId y, ObjId z, MorId g, MorId f) {
    ObjId xa = aof(x), ya = aof(y), za = aof(z);
    ObjId xb = bof(x), yb = bof(y), zb = bof(z);
    MorId ga = fst_mor(b.hom(yb, zb), g), gb = snd_mor(b.hom(yb, zb), g);
    MorId fa = fst_mor(b.hom(xb, yb), f), fb = snd_mor(b.hom(xb, yb), f);
    return pair_mor(b.hom(xb, zb), a.compose2(xa, ya, za, ga, fa), b.compose2(xb, yb, zb, gb, fb));
  };
  return assemble_two_cat(n, std::move(homs), std::move(units), cobj, cmor);
}

// ---- Cat-valued 2-functors ------------------------------------------------

Report validate_two_functor(const CatValued2Functor& f) {
  Report r;
  const FinTwoCat& t = f.dom;
  const int n = t.n_objects;
  if (static_cast<int>(f.on_obj.size()) != n ||
      static_cast<int>(f.on_one.size()) != n * n ||
      static_cast<int>(f.on_two.size()) != n * n) {
    r.add("BadShape", "map table sizes do not match the domain 2-category");
    return r;
  }
  for (ObjId c = 0; c < n; ++c)
    r.merge(validate_category(f.on_obj[c]), "value at object " + obj_str(c));
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const FinCat& ab = t.hom(a, b);
      if (static_cast<int>(f.on_one[a * n + b].size()) != ab.objects() ||
          static_cast<int>(f.on_two[a * n + b].size()) != ab.morphisms()) {
        r.add("BadShape", "cell maps at hom(" + obj_str(a) + "," + obj_str(b) + ")");
        continue;
      }
      for (ObjId g = 0; g < ab.objects(); ++g) {
        const FinFunctor& fg = f.one(a, b, g);
        if (fg.dom != f.on_obj[a] || fg.cod != f.on_obj[b])
          r.add("Bad1CellImage", "hom(" + obj_str(a) + "," + obj_str(b) + ") 1-cell " + obj_str(g));
        else
          r.merge(validate_functor(fg), "1-cell image at hom(" + obj_str(a) + "," + obj_str(b) + ")");
      }
      for (MorId m = 0; m < ab.morphisms(); ++m) {
        const NatTrans& fm = f.two(a, b, m);
        if (fm.dom_f != f.one(a, b, ab.src(m)) || fm.cod_f != f.one(a, b, ab.tgt(m)))
          r.add("Bad2CellImage", "hom(" + obj_str(a) + "," + obj_str(b) + ") 2-cell " + obj_str(m));
        else
          r.merge(validate_nat(fm), "2-cell image at hom(" + obj_str(a) + "," + obj_str(b) + ")");
      }
    }
  if (!r.ok()) return r;
  // strict functoriality
  for (ObjId a = 0; a < n; ++a) {
    if (f.one(a, a, t.units[a]) != identity_functor(f.on_obj[a]))
      r.add("UnitNotPreserved", "object " + obj_str(a));
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c) {
        const FinCat& ab = t.hom(a, b);
        const FinCat& bc = t.hom(b, c);
        for (ObjId g = 0; g < bc.objects(); ++g)
          for (ObjId h = 0; h < ab.objects(); ++h)
            if (f.one(a, c, t.compose1(a, b, c, g, h)) !=
                compose_functors(f.one(b, c, g), f.one(a, b, h)))
              r.add("Composition1Cell",
                    "hom(" + obj_str(a) + "," + obj_str(b) + "," + obj_str(c) + ")");
        for (MorId mg = 0; mg < bc.morphisms(); ++mg)
          for (MorId mh = 0; mh < ab.morphisms(); ++mh)
            if (f.two(a, c, t.compose2(a, b, c, mg, mh)) !=
                horizontal_compose(f.two(b, c, mg), f.two(a, b, mh)))
              r.add("Composition2CellHorizontal",
                    "hom(" + obj_str(a) + "," + obj_str(b) + "," + obj_str(c) + ")");
      }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const FinCat& ab = t.hom(a, b);
      for (ObjId g = 0; g < ab.objects(); ++g)
        if (f.two(a, b, ab.identity(g)) != identity_nat(f.one(a, b, g)))
          r.add("Identity2CellNotPreserved",
                "hom(" + obj_str(a) + "," + obj_str(b) + ") 1-cell " + obj_str(g));
      for (MorId m2 = 0; m2 < ab.morphisms(); ++m2)
        for (MorId m1 = 0; m1 < ab.morphisms(); ++m1) {
          if (!ab.composable(m2, m1)) continue;
          if (f.two(a, b, ab.compose(m2, m1)) !=
              vertical_compose(f.two(a, b, m2), f.two(a, b, m1)))
            r.add("Composition2CellVertical",
                  "hom(" + obj_str(a) + "," + obj_str(b) + ")");
        }
    }
  return r;
}

CatValued2Functor constant_two_functor(const FinTwoCat& c, const FinCat& value) {
  CatValued2Functor f;
  f.dom = c;
  const int n = c.n_objects;
  f.on_obj.assign(n, value);
  f.on_one.resize(static_cast<std::size_t>(n) * n);
  f.on_two.resize(static_cast<std::size_t>(n) * n);
  FinFunctor idf = identity_functor(value);
  NatTrans idn = identity_nat(idf);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      f.on_one[a * n + b].assign(c.hom(a, b).objects(), idf);
      f.on_two[a * n + b].assign(c.hom(a, b).morphisms(), idn);
    }
  return f;
}

Report validate_two_natural(const TwoNatTrans& a) {
  Report r;
  const CatValued2Functor& f = a.dom_f;
  const CatValued2Functor& g = a.cod_f;
  if (f.dom != g.dom) {
    r.add("BadBoundary", "2-functors over different 2-categories");
    return r;
  }
  const FinTwoCat& t = f.dom;
  const int n = t.n_objects;
  if (static_cast<int>(a.components.size()) != n) {
    r.add("BadShape", "one component per object required");
    return r;
  }
  for (ObjId c = 0; c < n; ++c) {
    const FinFunctor& ac = a.components[c];
    if (ac.dom != f.on_obj[c] || ac.cod != g.on_obj[c]) {
      r.add("BadComponent", "object " + obj_str(c));
      continue;
    }
    r.merge(validate_functor(ac), "component at object " + obj_str(c));
  }
  if (!r.ok()) return r;
  for (ObjId c = 0; c < n; ++c)
    for (ObjId c2 = 0; c2 < n; ++c2) {
      const FinCat& cc = t.hom(c, c2);
      for (ObjId h = 0; h < cc.objects(); ++h)
        if (compose_functors(g.one(c, c2, h), a.components[c]) !=
            compose_functors(a.components[c2], f.one(c, c2, h)))
          r.add("NotOneNatural", "1-cell " + obj_str(h) + " of hom(" + obj_str(c) + "," + obj_str(c2) + ")");
      for (MorId m = 0; m < cc.morphisms(); ++m)
        if (whisker_right(g.two(c, c2, m), a.components[c]) !=
            whisker_left(a.components[c2], f.two(c, c2, m)))
          r.add("NotTwoNatural", "2-cell " + obj_str(m) + " of hom(" + obj_str(c) + "," + obj_str(c2) + ")");
    }
  return r;
}

TwoNatTrans identity_two_nat(const CatValued2Functor& f) {
  TwoNatTrans a;
  a.dom_f = f;
  a.cod_f = f;
  a.components.reserve(f.on_obj.size());
  for (const FinCat& c : f.on_obj) a.components.push_back(identity_functor(c));
  return a;
}

TwoNatTrans compose_two_nat(const TwoNatTrans& mu, const TwoNatTrans& eps) {
  if (eps.cod_f != mu.dom_f) throw BoundaryMismatch("compose_two_nat: cod(eps) != dom(mu)");
  TwoNatTrans out;
  out.dom_f = eps.dom_f;
  out.cod_f = mu.cod_f;
  out.components.reserve(eps.components.size());
  for (std::size_t c = 0; c < eps.components.size(); ++c)
    out.components.push_back(compose_functors(mu.components[c], eps.components[c]));
  return out;
}

Report validate_modification(const Modification& m) {
  Report r;
  if (m.dom_t.dom_f != m.cod_t.dom_f || m.dom_t.cod_f != m.cod_t.cod_f) {
    r.add("BadBoundary", "parallel 2-natural transformations required");
    return r;
  }
  const CatValued2Functor& f = m.dom_t.dom_f;
  const CatValued2Functor& g = m.dom_t.cod_f;
  const FinTwoCat& t = f.dom;
  const int n = t.n_objects;
  if (static_cast<int>(m.components.size()) != n) {
    r.add("BadShape", "one component per object required");
    return r;
  }
  for (ObjId c = 0; c < n; ++c) {
    const NatTrans& mc = m.components[c];
    if (mc.dom_f != m.dom_t.components[c] || mc.cod_f != m.cod_t.components[c]) {
      r.add("BadComponent", "object " + obj_str(c));
      continue;
    }
    r.merge(validate_nat(mc), "component at object " + obj_str(c));
  }
  if (!r.ok()) return r;
  for (ObjId c = 0; c < n; ++c)
    for (ObjId c2 = 0; c2 < n; ++c2) {
      const FinCat& cc = t.hom(c, c2);
      for (ObjId h = 0; h < cc.objects(); ++h)
        if (whisker_left(g.one(c, c2, h), m.components[c]) !=
            whisker_right(m.components[c2], f.one(c, c2, h)))
          r.add("ModificationCondition",
                "1-cell " + obj_str(h) + " of hom(" + obj_str(c) + "," + obj_str(c2) + ")");
    }
  return r;
}

Modification identity_modification(const TwoNatTrans& t) {
  Modification m;
  m.dom_t = t;
  m.cod_t = t;
  m.components.reserve(t.components.size());
  for (const FinFunctor& c : t.components) m.components.push_back(identity_nat(c));
  return m;
}

bool is_invertible_modification(const Modification& m) {
  for (const NatTrans& c : m.components)
    if (!is_natural_iso(c)) return false;
  return true;
}

std::pair<TwoNatTrans, Modification> assemble_two_natural(
    const TwoNatTrans& alpha, std::vector<FinFunctor> beta_components,
    std::vector<NatTrans> phi_components) {
  const CatValued2Functor& f = alpha.dom_f;
  const CatValued2Functor& g = alpha.cod_f;
  const FinTwoCat& t = f.dom;
  const int n = t.n_objects;
  if (static_cast<int>(beta_components.size()) != n ||
      static_cast<int>(phi_components.size()) != n)
    throw PreconditionFailed("assemble_two_natural: component counts");
  for (ObjId c = 0; c < n; ++c) {
    const NatTrans& phi = phi_components[c];
    if (phi.dom_f != alpha.components[c] || phi.cod_f != beta_components[c] ||
        !validate_nat(phi).ok())
      throw PreconditionFailed("assemble_two_natural: phi at object " + obj_str(c));
    if (!is_natural_iso(phi))
      throw NotInvertible("assemble_two_natural: phi at object " + obj_str(c));
  }
  for (ObjId c = 0; c < n; ++c)
    for (ObjId c2 = 0; c2 < n; ++c2) {
      const FinCat& cc = t.hom(c, c2);
      for (ObjId h = 0; h < cc.objects(); ++h) {
        if (compose_functors(g.one(c, c2, h), beta_components[c]) !=
            compose_functors(beta_components[c2], f.one(c, c2, h)))
          throw PreconditionFailed("assemble_two_natural: square at 1-cell " + obj_str(h) +
                                   " of hom(" + obj_str(c) + "," + obj_str(c2) + ")");
        if (whisker_left(g.one(c, c2, h), phi_components[c]) !=
            whisker_right(phi_components[c2], f.one(c, c2, h)))
          throw PreconditionFailed("assemble_two_natural: modification at 1-cell " + obj_str(h) +
                                   " of hom(" + obj_str(c) + "," + obj_str(c2) + ")");
      }
    }
  TwoNatTrans beta;
  beta.dom_f = f;
  beta.cod_f = g;
  beta.components = std::move(beta_components);
  // the guaranteed conclusion, re-verified
  internal_check(validate_two_natural(beta).ok(), "assemble_two_natural: beta not 2-natural");
  Modification phi;
  phi.dom_t = alpha;
  phi.cod_t = beta;
  phi.components = std::move(phi_components);
  internal_check(validate_modification(phi).ok(), "assemble_two_natural: phi not a modification");
  internal_check(is_invertible_modification(phi), "assemble_two_natural: phi not invertible");
  return {std::move(beta), std::move(phi)};
}

// ---- pasting expressions ---------------------------------------------------

PasteExpr PasteExpr::make_leaf(NatTrans a) {
  PasteExpr e;
  e.kind = Kind::Leaf;
  e.leaf = std::move(a);
  return e;
}

PasteExpr PasteExpr::make_whisker_left(FinFunctor h, PasteExpr inner) {
  PasteExpr e;
  e.kind = Kind::WhiskerLeft;
  e.fun = std::move(h);
  e.kids.push_back(std::move(inner));
  return e;
}

PasteExpr PasteExpr::make_whisker_right(PasteExpr inner, FinFunctor k) {
  PasteExpr e;
  e.kind = Kind::WhiskerRight;
  e.fun = std::move(k);
  e.kids.push_back(std::move(inner));
  return e;
}

PasteExpr PasteExpr::make_vertical(PasteExpr b, PasteExpr a) {
  PasteExpr e;
  e.kind = Kind::Vertical;
  e.kids.push_back(std::move(b));
  e.kids.push_back(std::move(a));
  return e;
}

NatTrans paste_whiskers(const PasteExpr& expr) {
  switch (expr.kind) {
    case PasteExpr::Kind::Leaf:
      return expr.leaf;
    case PasteExpr::Kind::WhiskerLeft:
      return whisker_left(expr.fun, paste_whiskers(expr.kids[0]));
    case PasteExpr::Kind::WhiskerRight:
      return whisker_right(paste_whiskers(expr.kids[0]), expr.fun);
    case PasteExpr::Kind::Vertical:
      return vertical_compose(paste_whiskers(expr.kids[0]), paste_whiskers(expr.kids[1]));
  }
  throw Error("paste_whiskers: malformed expression");
}

}  // namespace catefs
