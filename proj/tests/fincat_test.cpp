#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "catefs/enumerate.hpp"
#include "catefs/errors.hpp"
#include "catefs/fincat.hpp"
#include "catefs/gen.hpp"
#include "catefs/rng.hpp"

using namespace catefs;

namespace {

bool has_code(const Report& r, const std::string& code) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

FinFunctor collapse_to_point(const FinCat& dom) {
  return constant_functor(dom, terminal_category(), 0);
}

/// Inclusion of a full subcategory spanned by the listed objects.
FinFunctor full_inclusion(const FinCat& cod, const std::vector<ObjId>& objs) {
  FinFunctor f;
  f.cod = cod;
  std::vector<MorId> keep;
  std::vector<MorId> back(cod.morphisms(), kNoMor);
  std::vector<ObjId> obj_back(cod.objects(), -1);
  for (std::size_t i = 0; i < objs.size(); ++i) obj_back[objs[i]] = static_cast<ObjId>(i);
  for (MorId m = 0; m < cod.morphisms(); ++m)
    if (obj_back[cod.src(m)] >= 0 && obj_back[cod.tgt(m)] >= 0) {
      back[m] = static_cast<MorId>(keep.size());
      keep.push_back(m);
    }
  f.dom.mor.resize(keep.size());
  f.dom.id_of.resize(objs.size());
  f.dom.comp.assign(keep.size() * keep.size(), kNoMor);
  f.mor_map = keep;
  f.obj_map = objs;
  for (std::size_t i = 0; i < keep.size(); ++i)
    f.dom.mor[i] = {obj_back[cod.src(keep[i])], obj_back[cod.tgt(keep[i])]};
  for (std::size_t i = 0; i < objs.size(); ++i) f.dom.id_of[i] = back[cod.identity(objs[i])];
  for (std::size_t g = 0; g < keep.size(); ++g)
    for (std::size_t h = 0; h < keep.size(); ++h)
      if (f.dom.composable(g, h)) f.dom.set_comp(g, h, back[cod.compose(keep[g], keep[h])]);
  REQUIRE(validate_category(f.dom).ok());
  REQUIRE(validate_functor(f).ok());
  return f;
}

}  // namespace

TEST_CASE("category validation accepts the terminal category") {
  CHECK(validate_category(terminal_category()).ok());
  CHECK(validate_category(discrete_category(0)).ok());
  CHECK(validate_category(indiscrete_category(3)).ok());
  CHECK(validate_category(chain_category(4)).ok());
}

TEST_CASE("category validation flags a missing composite") {
  FinCat c = chain_category(3);
  MorId long_arrow = c.hom(0, 2)[0];
  c.set_comp(c.hom(1, 2)[0], c.hom(0, 1)[0], kNoMor);
  CHECK(has_code(validate_category(c), "MissingComposite"));
  c.set_comp(c.hom(1, 2)[0], c.hom(0, 1)[0], long_arrow);
  CHECK(validate_category(c).ok());
}

TEST_CASE("category validation flags a non-associative unital table") {
  // Search the 3-element unital magmas {id, a, b} for one that fails
  // associativity; such tables exist, and the validator must reject each.
  const int n = 3;
  int found = 0;
  for (int t = 0; t < 3 * 3 * 3 * 3; ++t) {
    int vals[3][3];
    int code = t;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        vals[i][j] = code % 3;
        code /= 3;
      }
    for (int i = 0; i < n; ++i) vals[0][i] = vals[i][0] = i;
    bool assoc = true;
    for (int i = 0; i < n && assoc; ++i)
      for (int j = 0; j < n && assoc; ++j)
        for (int k = 0; k < n && assoc; ++k)
          assoc = vals[vals[i][j]][k] == vals[i][vals[j][k]];
    if (assoc) continue;
    FinCat c;
    c.mor.assign(n, {0, 0});
    c.id_of = {0};
    c.comp.assign(n * n, kNoMor);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c.set_comp(i, j, vals[i][j]);
    CHECK(has_code(validate_category(c), "NonAssociative"));
    ++found;
  }
  CHECK(found > 0);
}

TEST_CASE("functor composition") {
  FinCat two = discrete_category(2);
  FinFunctor point_in = constant_functor(terminal_category(), two, 0);
  FinFunctor collapse = collapse_to_point(two);

  SUBCASE("identity is neutral") {
    CHECK(compose_functors(identity_functor(two), point_in) == point_in);
    CHECK(compose_functors(point_in, identity_functor(terminal_category())) == point_in);
  }
  SUBCASE("inclusion then collapse is the identity of the point") {
    CHECK(compose_functors(collapse, point_in) == identity_functor(terminal_category()));
  }
  SUBCASE("mismatched middle category throws") {
    CHECK_THROWS_AS(compose_functors(collapse, collapse), DomainMismatch);
  }
}

TEST_CASE("bijective-on-objects predicate") {
  FinCat two = discrete_category(2);
  CHECK(is_bijective_on_objects(identity_functor(two)));
  CHECK_FALSE(is_bijective_on_objects(collapse_to_point(two)));
  // identity on objects into the indiscrete category: bo but far from ff
  FinFunctor collapse = indiscrete_collapse(two);
  CHECK(is_bijective_on_objects(collapse));
  CHECK_FALSE(is_bijective_on_objects(constant_functor(two, two, 1)));
}

TEST_CASE("fully-faithful predicate") {
  FinCat two = discrete_category(2);
  FinCat chain = chain_category(3);
  CHECK(is_fully_faithful(identity_functor(chain)));
  CHECK(is_fully_faithful(full_inclusion(chain, {0, 2})));
  CHECK_FALSE(is_fully_faithful(collapse_to_point(two)));
}

TEST_CASE("bo/ff factorization of the identity") {
  Factorization f = factor_bo_ff(identity_functor(terminal_category()));
  CHECK(f.mid == terminal_category());
  CHECK(f.bo == identity_functor(terminal_category()));
  CHECK(f.ff == identity_functor(terminal_category()));
}

TEST_CASE("factoring the collapse of two points gives the indiscrete middle") {
  FinCat two = discrete_category(2);
  FinFunctor collapse = collapse_to_point(two);
  Factorization f = factor_bo_ff(collapse);
  CHECK(f.mid.objects() == 2);
  for (ObjId x = 0; x < 2; ++x)
    for (ObjId y = 0; y < 2; ++y) CHECK(f.mid.hom(x, y).size() == 1);
  CHECK(is_bijective_on_objects(f.bo));
  CHECK(is_fully_faithful(f.ff));
  CHECK(compose_functors(f.ff, f.bo) == collapse);
}

TEST_CASE("factoring a point inclusion keeps the terminal middle") {
  FinFunctor inc = constant_functor(terminal_category(), discrete_category(2), 0);
  Factorization f = factor_bo_ff(inc);
  CHECK(f.mid == terminal_category());
  CHECK(f.bo == identity_functor(terminal_category()));
  CHECK(f.ff == inc);
}

TEST_CASE("factorization soundness over generated functors") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    GeneratedCat dom = gen_fincat(rng, p);
    GeneratedCat cod = gen_fincat(rng, p);
    if (cod.cat.objects() == 0 && dom.cat.objects() > 0) continue;
    FinFunctor f = gen_functor(rng, dom, cod.cat);
    Factorization fact = factor_bo_ff(f);
    CHECK(validate_category(fact.mid).ok());
    CHECK(is_bijective_on_objects(fact.bo));
    CHECK(is_fully_faithful(fact.ff));
    CHECK(compose_functors(fact.ff, fact.bo) == f);
  }
}

TEST_CASE("bo and ff are closed under composition and hold for isomorphisms") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    GeneratedCat a = gen_fincat(rng, p);
    GeneratedCat b = gen_fincat(rng, p);
    if (b.cat.objects() == 0 && a.cat.objects() > 0) continue;
    FinFunctor f = gen_functor(rng, a, b.cat);
    Factorization fact = factor_bo_ff(f);
    // two bo's compose to a bo, two ff's to an ff
    FinFunctor bo2 = compose_functors(indiscrete_collapse(fact.mid), fact.bo);
    CHECK(is_bijective_on_objects(bo2));
    FinFunctor ff2 = compose_functors(identity_functor(b.cat), fact.ff);
    CHECK(is_fully_faithful(ff2));
    CHECK(is_bijective_on_objects(identity_functor(a.cat)));
    CHECK(is_fully_faithful(identity_functor(a.cat)));
    CHECK(is_cat_iso(identity_functor(a.cat)));
  }
}

TEST_CASE("vertical composition of natural transformations") {
  FinCat ind = indiscrete_category(2);
  FinCat one = terminal_category();
  FinFunctor at0 = constant_functor(one, ind, 0);
  FinFunctor at1 = constant_functor(one, ind, 1);
  NatTrans up{at0, at1, {ind.hom(0, 1)[0]}};
  REQUIRE(validate_nat(up).ok());
  NatTrans down = invert_nat(up);

  CHECK(vertical_compose(up, identity_nat(at0)) == up);
  CHECK(vertical_compose(down, up) == identity_nat(at0));
  CHECK(vertical_compose(up, down) == identity_nat(at1));
  CHECK_THROWS_AS(vertical_compose(up, up), BoundaryMismatch);
}

TEST_CASE("whiskering by identities changes nothing") {
  FinCat ind = indiscrete_category(2);
  FinFunctor at0 = constant_functor(terminal_category(), ind, 0);
  FinFunctor at1 = constant_functor(terminal_category(), ind, 1);
  NatTrans up{at0, at1, {ind.hom(0, 1)[0]}};
  CHECK(whisker_left(identity_functor(ind), up) == up);
  CHECK(whisker_right(up, identity_functor(terminal_category())) == up);
}

TEST_CASE("pre-whiskering by a bo functor reads components through the object bijection") {
  FinCat two = discrete_category(2);
  FinCat ind = indiscrete_category(2);
  FinFunctor collapse = indiscrete_collapse(two);  // bo
  FinFunctor f = identity_functor(ind);
  NatTrans a{f, f, {ind.identity(0), ind.identity(1)}};
  NatTrans w = whisker_right(a, collapse);
  for (ObjId x = 0; x < 2; ++x) CHECK(w.components[x] == a.components[collapse.obj_map[x]]);
}

TEST_CASE("lifting a transformation through a fully faithful functor") {
  FinCat chain = chain_category(3);
  FinFunctor inc = full_inclusion(chain, {0, 2});  // ff
  FinCat pt = terminal_category();
  FinFunctor g = constant_functor(pt, inc.dom, 0);
  FinFunctor h = constant_functor(pt, inc.dom, 1);
  NatTrans down{compose_functors(inc, g), compose_functors(inc, h), {chain.hom(0, 2)[0]}};
  REQUIRE(validate_nat(down).ok());

  SUBCASE("identity functor lifts to the transformation itself") {
    NatTrans via_id = lift_through_ff(identity_functor(chain), compose_functors(inc, g),
                                      compose_functors(inc, h), down);
    CHECK(via_id.components == down.components);
  }
  SUBCASE("identity transformation lifts to the identity") {
    NatTrans lifted = lift_through_ff(inc, g, g, identity_nat(compose_functors(inc, g)));
    CHECK(lifted == identity_nat(g));
  }
  SUBCASE("whisker then lift is the identity round trip") {
    NatTrans hat{g, h, {inc.dom.hom(0, 1)[0]}};
    REQUIRE(validate_nat(hat).ok());
    CHECK(lift_through_ff(inc, g, h, whisker_left(inc, hat)) == hat);
  }
  SUBCASE("a non-fully-faithful functor is rejected") {
    FinFunctor collapse = constant_functor(discrete_category(2), chain, 0);
    CHECK_THROWS_AS(
        lift_through_ff(collapse, identity_functor(discrete_category(2)),
                        identity_functor(discrete_category(2)),
                        identity_nat(collapse)),
        NotFullyFaithful);
  }
}

TEST_CASE("natural isomorphism detection") {
  FinCat wa = walking_arrow_category();
  FinFunctor src = constant_functor(terminal_category(), wa, 0);
  FinFunctor tgt = constant_functor(terminal_category(), wa, 1);
  CHECK(is_natural_iso(identity_nat(src)));
  NatTrans arrow{src, tgt, {wa.hom(0, 1)[0]}};
  REQUIRE(validate_nat(arrow).ok());
  CHECK_FALSE(is_natural_iso(arrow));
  FinCat ind = indiscrete_category(3);
  FinFunctor a = constant_functor(terminal_category(), ind, 0);
  FinFunctor b = constant_functor(terminal_category(), ind, 2);
  NatTrans jump{a, b, {ind.hom(0, 2)[0]}};
  CHECK(is_natural_iso(jump));
}

TEST_CASE("ff post-whiskering and bo pre-whiskering cancel") {
  // For ff mu: whisker_left(mu, a) = whisker_left(mu, a') forces a = a';
  // for bo eps: whisker_right(a, eps) = whisker_right(a', eps) forces a = a'.
  GenParams p;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300 && checked < 100; ++seed) {
    Rng rng(seed);
    GeneratedCat dom = gen_fincat(rng, p);
    GeneratedCat cod = gen_fincat(rng, p);
    if (cod.cat.objects() == 0 && dom.cat.objects() > 0) continue;
    FinFunctor f = gen_functor(rng, dom, cod.cat);
    Factorization fact = factor_bo_ff(f);
    std::vector<FinFunctor> deltas = enumerate_functors(fact.mid, fact.mid, 500000);
    for (std::size_t i = 0; i < deltas.size() && i < 4; ++i)
      for (std::size_t j = 0; j < deltas.size() && j < 4; ++j) {
        std::vector<NatTrans> cells = enumerate_nat_trans(deltas[i], deltas[j]);
        for (std::size_t u = 0; u < cells.size() && u < 4; ++u)
          for (std::size_t v = 0; v < cells.size() && v < 4; ++v) {
            if (whisker_left(fact.ff, cells[u]) == whisker_left(fact.ff, cells[v]))
              CHECK(cells[u] == cells[v]);
            if (whisker_right(cells[u], fact.bo) == whisker_right(cells[v], fact.bo))
              CHECK(cells[u] == cells[v]);
            ++checked;
          }
      }
  }
  CHECK(checked > 0);
}

TEST_CASE("functors into an ff functor are separated by their underlying data") {
  // If G, H agree on objects and mu∘G = mu∘H for ff mu, then G = H.
  FinCat chain = chain_category(4);
  FinFunctor inc = full_inclusion(chain, {0, 1, 3});
  std::vector<FinFunctor> gs = enumerate_functors(walking_arrow_category(), inc.dom, 500000);
  for (const FinFunctor& g : gs)
    for (const FinFunctor& h : gs)
      if (g.obj_map == h.obj_map &&
          compose_functors(inc, g) == compose_functors(inc, h))
        CHECK(g == h);
}

TEST_CASE("empty categories are legal everywhere") {
  FinCat empty = discrete_category(0);
  CHECK(validate_category(empty).ok());
  FinFunctor into = constant_functor(empty, terminal_category(), 0);
  into.obj_map.clear();  // no objects to map
  CHECK(validate_functor(into).ok());
  Factorization f = factor_bo_ff(into);
  CHECK(f.mid == empty);
  CHECK(is_bijective_on_objects(f.bo));
  CHECK(is_fully_faithful(f.ff));
}
