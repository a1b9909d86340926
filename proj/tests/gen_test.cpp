#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "catefs/errors.hpp"
#include "catefs/gen.hpp"
#include "catefs/rng.hpp"

using namespace catefs;

TEST_CASE("walking shape index 0 is the terminal category") {
  CHECK(walking_shape_cat(0) == terminal_category());
  CHECK(walking_shape_count() > 5);
  for (int i = 0; i < walking_shape_count(); ++i)
    CHECK(validate_category(walking_shape_cat(i)).ok());
}

TEST_CASE("free category on an acyclic graph enumerates all paths") {
  // 3 nodes, edges 0->1, 1->2, 0->2: paths are 3 identities, the 3 edges,
  // and the concatenation 0->1->2, so 7 morphisms in total.
  GeneratedCat g = free_category_on_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(validate_category(g.cat).ok());
  CHECK(g.cat.objects() == 3);
  CHECK(g.cat.morphisms() == 7);
  CHECK(g.cat.hom(0, 2).size() == 2);
  // composition is path concatenation: the composite of the two generating
  // edges is the unique length-2 path
  MorId e01 = g.generators[0], e12 = g.generators[1];
  MorId path = g.cat.compose(e12, e01);
  CHECK(path != g.generators[2]);
  CHECK(g.cat.src(path) == 0);
  CHECK(g.cat.tgt(path) == 2);
  // the factor word of the composite lists the generator indices in
  // application order
  CHECK(g.factors[path] == std::vector<MorId>{0, 1});
}

TEST_CASE("cyclic graphs are rejected") {
  CHECK_THROWS_AS(free_category_on_graph(2, {{0, 1}, {1, 0}}), PreconditionFailed);
}

TEST_CASE("preorder family generates thin categories") {
  GenParams p;
  p.family = CatFamily::Preorder;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratedCat g = gen_fincat(seed, p);
    CHECK(validate_category(g.cat).ok());
    CHECK(g.kind == GeneratedCat::Kind::Thin);
    for (ObjId x = 0; x < g.cat.objects(); ++x)
      for (ObjId y = 0; y < g.cat.objects(); ++y) CHECK(g.cat.hom(x, y).size() <= 1);
  }
}

TEST_CASE("every generator family is sound over many seeds") {
  GenParams p;
  for (CatFamily fam : {CatFamily::WalkingShape, CatFamily::FreeAcyclicGraph,
                        CatFamily::Preorder, CatFamily::MonoidTable, CatFamily::Product,
                        CatFamily::Mixed}) {
    p.family = fam;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      GeneratedCat g = gen_fincat(seed, p);
      CHECK(validate_category(g.cat).ok());
      CHECK(g.cat.objects() <= 2 * p.max_objects * p.max_objects);  // products of bounded factors
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(gen_fincat(seed, p).cat == gen_fincat(seed, p).cat);
    GeneratedTwoCat a = gen_two_cat(seed, p);
    GeneratedTwoCat b = gen_two_cat(seed, p);
    CHECK(a.tc == b.tc);
    CHECK(gen_two_instance(seed, a, p).alpha == gen_two_instance(seed, b, p).alpha);
  }
}

TEST_CASE("coverage guardrails over 1000 mixed seeds") {
  GenParams p;
  bool empty_hom = false, non_thin = false;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratedCat g = gen_fincat(seed, p);
    for (ObjId x = 0; x < g.cat.objects() && !(empty_hom && non_thin); ++x)
      for (ObjId y = 0; y < g.cat.objects(); ++y) {
        std::size_t h = g.cat.hom(x, y).size();
        if (h == 0) empty_hom = true;
        if (h > 1) non_thin = true;
      }
  }
  CHECK(empty_hom);
  CHECK(non_thin);

  bool nonidentity_two_cell = false;
  for (std::uint64_t seed = 0; seed < 1000 && !nonidentity_two_cell; ++seed) {
    Rng rng(seed);
    GeneratedTwoCat c = gen_two_cat(rng, p);
    TwoInstance inst = gen_two_instance(rng, c, p);
    const int n = c.tc.objects();
    for (int j = 0; j < n * n && !nonidentity_two_cell; ++j)
      for (const NatTrans& cell : inst.f.on_two[j])
        if (cell != identity_nat(cell.dom_f)) {
          nonidentity_two_cell = true;
          break;
        }
  }
  CHECK(nonidentity_two_cell);
}

TEST_CASE("functor generation from a terminal domain picks an identity") {
  GeneratedCat dom = free_category_on_graph(1, {});
  FinCat cod = chain_category(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FinFunctor f = gen_functor(seed, dom, cod);
    CHECK(validate_functor(f).ok());
    CHECK(f.mor_map[dom.cat.identity(0)] == cod.identity(f.obj_map[0]));
  }
}

TEST_CASE("functor generation from the free arrow reaches every morphism") {
  GeneratedCat dom = free_category_on_graph(2, {{0, 1}});
  FinCat cod = chain_category(3);
  std::set<MorId> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    FinFunctor f = gen_functor(seed, dom, cod);
    CHECK(validate_functor(f).ok());
    seen.insert(f.mor_map[dom.generators[0]]);
  }
  CHECK(seen.size() == static_cast<std::size_t>(cod.morphisms()));
}

TEST_CASE("functor generation fails only into the empty category") {
  GeneratedCat dom = free_category_on_graph(1, {});
  CHECK_THROWS_AS(gen_functor(0, dom, discrete_category(0)), NoFunctorExists);
  // empty domain into the empty codomain is fine
  GeneratedCat none = free_category_on_graph(0, {});
  CHECK(validate_functor(gen_functor(0, none, discrete_category(0))).ok());
}

TEST_CASE("generated functors validate over every family pairing") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    GeneratedCat dom = gen_fincat(rng, p);
    GeneratedCat cod = gen_fincat(rng, p);
    if (cod.cat.objects() == 0 && dom.cat.objects() > 0) continue;
    FinFunctor f = gen_functor(rng, dom, cod.cat);
    CHECK(validate_functor(f).ok());
  }
}

TEST_CASE("fill instances satisfy the square invariants by construction") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    FillInstance inst = gen_fill_instance(seed, p);
    CHECK(validate_fill_square(inst.square).ok());
    CHECK(compose_functors(inst.delta0, inst.square.eps) == inst.square.alpha);
    CHECK(whisker_right(inst.psi_tilde0, inst.square.eps) == inst.square.psi);
    CHECK(is_natural_iso(inst.psi_tilde0));
  }
}

TEST_CASE("two-category generation covers the documented shapes and validates") {
  GenParams p;
  std::map<TwoCatShape, int> seen;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratedTwoCat c = gen_two_cat(seed, p);
    CHECK(validate_two_cat(c.tc).ok());
    ++seen[c.shape];
  }
  CHECK(seen.size() >= 5);
}

TEST_CASE("walking arrow and walking 2-cell have the documented homs") {
  GenParams p;
  Rng rng(0);
  GeneratedTwoCat wa = named_two_cat("walking-arrow", rng, p);
  CHECK(wa.tc.objects() == 2);
  CHECK(wa.tc.hom(0, 0) == terminal_category());
  CHECK(wa.tc.hom(1, 0).objects() == 0);
  CHECK(wa.tc.hom(0, 1) == terminal_category());
  GeneratedTwoCat w2 = named_two_cat("walking-2cell", rng, p);
  CHECK(w2.tc.hom(0, 1) == walking_arrow_category());
  CHECK_THROWS_AS(named_two_cat("no-such-shape", rng, p), Error);
}

TEST_CASE("two-instances validate over every named shape") {
  GenParams p;
  for (const char* name :
       {"terminal", "discrete-3", "walking-arrow", "walking-2cell", "composable-pair",
        "composable-2cells", "locally-discrete-random", "one-object-monoid", "product"}) {
    Rng shape_rng(1);
    GeneratedTwoCat c = named_two_cat(name, shape_rng, p);
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      Rng rng(seed);
      TwoInstance inst = gen_two_instance(rng, c, p);
      CHECK(validate_two_functor(inst.f).ok());
      CHECK(validate_two_functor(inst.g).ok());
      CHECK(validate_two_natural(inst.alpha).ok());
      CHECK(inst.alpha.dom_f == inst.f);
      CHECK(inst.alpha.cod_f == inst.g);
    }
  }
}
