#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "catefs/efs.hpp"
#include "catefs/enumerate.hpp"
#include "catefs/gen.hpp"
#include "catefs/lift.hpp"
#include "catefs/rng.hpp"
#include "catefs/textio.hpp"
#include "oracles.hpp"

using namespace catefs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int n, const char* desc, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, desc);
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", n, ": ", desc);
}

/// The nonstrict fill square used throughout: codomain extended by an
/// indiscrete factor, diagonal the fully faithful factorization leg, and the
/// comparison a constant shift in the indiscrete coordinate.
struct ShiftSquare {
  TwoFillSquare sq;
  TwoNatTrans delta0;
  std::vector<NatTrans> t;  // the expected comparison cells, per object
};

ShiftSquare build_shift_square(const TwoInstance& inst, const LevelwiseFactorization& fact,
                               int k, ObjId shift) {
  ShiftSquare out;
  IndiscreteExtension ext = times_indiscrete(inst.g, k);
  FinCat ind = indiscrete_category(k);
  out.delta0 = fact.mu;

  TwoNatTrans alpha_prime;
  alpha_prime.dom_f = fact.mid;
  alpha_prime.cod_f = ext.ghat;
  const int n = static_cast<int>(fact.mu.components.size());
  for (ObjId c = 0; c < n; ++c) {
    const FinFunctor& d0 = out.delta0.components[c];
    FinFunctor ap;
    ap.dom = d0.dom;
    ap.cod = ext.ghat.on_obj[c];
    ap.obj_map.resize(ap.dom.objects());
    ap.mor_map.resize(ap.dom.morphisms());
    for (ObjId y = 0; y < ap.dom.objects(); ++y)
      ap.obj_map[y] = pair_obj(ind, d0.obj_map[y], shift);
    for (MorId m = 0; m < ap.dom.morphisms(); ++m)
      ap.mor_map[m] = pair_mor(ind, d0.mor_map[m], ind.identity(shift));
    NatTrans tc;
    tc.dom_f = ap;
    tc.cod_f = compose_functors(ext.include.components[c], d0);
    tc.components.resize(ap.dom.objects());
    for (ObjId y = 0; y < ap.dom.objects(); ++y)
      tc.components[y] = pair_mor(ind, d0.cod.identity(d0.obj_map[y]),
                                  ind.hom(shift, 0)[0]);
    alpha_prime.components.push_back(std::move(ap));
    out.t.push_back(std::move(tc));
  }

  out.sq.eps = fact.eps;
  out.sq.mu = ext.include;
  out.sq.alpha = compose_two_nat(out.delta0, fact.eps);
  out.sq.alpha_prime = alpha_prime;
  out.sq.psi.dom_t = compose_two_nat(alpha_prime, fact.eps);
  out.sq.psi.cod_t = compose_two_nat(out.sq.mu, out.sq.alpha);
  for (ObjId c = 0; c < n; ++c)
    out.sq.psi.components.push_back(whisker_right(out.t[c], fact.eps.components[c]));
  return out;
}

}  // namespace

TEST_CASE("criterion 1") {
  auto start = Clock::now();
  GenParams p;
  p.max_objects = 6;
  p.max_morphisms = 30;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    GeneratedCat dom = gen_fincat(rng, p);
    GeneratedCat cod = gen_fincat(rng, p);
    FinFunctor f = gen_functor(rng, dom, cod.cat);
    Factorization fact = factor_bo_ff(f);
    bool ok = is_bijective_on_objects(fact.bo) && is_fully_faithful(fact.ff) &&
              compose_functors(fact.ff, fact.bo) == f && validate_category(fact.mid).ok() &&
              validate_functor(fact.bo).ok() && validate_functor(fact.ff).ok();
    if (ok) ++good;
  }
  double t = seconds_since(start);
  report(1, "1000 factorizations are sound within 10 s", good == 1000 && t < 10.0);
}

TEST_CASE("criterion 2") {
  GenParams p;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    FillInstance inst = gen_fill_instance(rng, p, /*identity_psi=*/true);
    FillResult r = diagonal_fill(inst.square);
    bool ok = compose_functors(r.delta, inst.square.eps) == inst.square.alpha &&
              compose_functors(inst.square.mu, r.delta) == inst.square.alpha_prime &&
              r.psi_tilde == identity_nat(inst.square.alpha_prime);
    if (ok) ++good;
  }
  report(2, "500 identity-comparison fills are strict", good == 500);
}

static std::vector<FillInstance> small_squares(int want) {
  GenParams p;
  p.max_objects = 3;
  p.max_morphisms = 8;
  std::vector<FillInstance> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < want && seed < 20000; ++seed) {
    Rng rng(seed);
    FillInstance inst = gen_fill_instance(rng, p);
    if (oracles::square_within(inst.square, 3, 2)) out.push_back(std::move(inst));
  }
  return out;
}

TEST_CASE("criteria 3 and 4") {
  auto start = Clock::now();
  std::vector<FillInstance> squares = small_squares(60);
  bool fill_ok = static_cast<int>(squares.size()) >= 50;
  bool two_cell_ok = fill_ok;
  bool create_ok = fill_ok;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    const FillSquare& sq = squares[i].square;
    FillResult r = diagonal_fill(sq);
    std::vector<FillResult> all = oracles::all_fills(sq);
    if (all.size() != 1 || !(all[0] == r)) fill_ok = false;

    const FinFunctor& d0 = r.delta;
    Rng rng(1000 + i);
    std::vector<NatTrans> nats = enumerate_nat_trans(d0, d0);
    if (!nats.empty()) {
      const NatTrans& chosen = nats[rng.below(nats.size())];
      NatTrans phi = whisker_right(chosen, sq.eps);
      NatTrans phi_prime = whisker_left(sq.mu, chosen);
      NatTrans filled = two_cell_fill(sq.eps, sq.mu, d0, d0, phi, phi_prime);
      std::vector<NatTrans> all2 =
          oracles::all_two_cell_fills(sq.eps, sq.mu, d0, d0, phi, phi_prime);
      if (all2.size() != 1 || !(all2[0] == filled) || !(filled == chosen))
        two_cell_ok = false;

      std::vector<NatTrans> isos;
      for (const NatTrans& a : nats)
        if (is_natural_iso(a)) isos.push_back(a);
      const NatTrans& pick = isos[rng.below(isos.size())];
      NatTrans psi = whisker_left(sq.mu, pick);
      NatTrans created = create_invertible(sq.mu, d0, d0, psi);
      std::vector<NatTrans> all3 = oracles::all_created(sq.mu, d0, d0, psi);
      if (all3.size() != 1 || !(all3[0] == created) || !(created == pick))
        create_ok = false;
    }
  }
  double t = seconds_since(start);
  report(3, "exhaustive fill uniqueness on >= 50 small squares within 60 s",
         fill_ok && t < 60.0);
  report(4, "exhaustive 2-cell-fill and creation uniqueness on the same squares",
         two_cell_ok && create_ok);
}

TEST_CASE("criterion 5") {
  GenParams p;
  p.max_objects = 3;
  p.max_morphisms = 8;
  int epi_pairs = 0, mono_pairs = 0;
  bool ok = true;
  for (std::uint64_t seed = 0; (epi_pairs < 500 || mono_pairs < 500) && seed < 5000;
       ++seed) {
    Rng rng(seed);
    FillInstance inst = gen_fill_instance(rng, p);
    const FinFunctor& eps = inst.square.eps;
    const FinFunctor& mu = inst.square.mu;
    if (epi_pairs < 500) {
      std::vector<NatTrans> nats = enumerate_nat_trans(inst.delta0, inst.delta0);
      for (std::size_t i = 0; i < nats.size() && epi_pairs < 500; ++i)
        for (std::size_t j = 0; j < nats.size() && epi_pairs < 500; ++j) {
          bool whiskers_equal =
              whisker_right(nats[i], eps) == whisker_right(nats[j], eps);
          if (whiskers_equal != (nats[i] == nats[j])) ok = false;
          ++epi_pairs;
        }
    }
    if (mono_pairs < 500) {
      std::vector<NatTrans> nats = enumerate_nat_trans(inst.square.alpha, inst.square.alpha);
      for (std::size_t i = 0; i < nats.size() && mono_pairs < 500; ++i)
        for (std::size_t j = 0; j < nats.size() && mono_pairs < 500; ++j) {
          bool whiskers_equal = whisker_left(mu, nats[i]) == whisker_left(mu, nats[j]);
          if (whiskers_equal != (nats[i] == nats[j])) ok = false;
          ++mono_pairs;
        }
    }
  }
  report(5, "whisker cancellation on 500 pairs in each direction",
         ok && epi_pairs >= 500 && mono_pairs >= 500);
}

TEST_CASE("criterion 6") {
  auto start = Clock::now();
  GenParams p;
  bool ok = true;
  for (const char* name : {"terminal", "discrete-3", "walking-arrow", "walking-2cell",
                           "locally-discrete-random"}) {
    Rng shape_rng(17);
    GeneratedTwoCat c = named_two_cat(name, shape_rng, p);
    Report r = check_lifted_efs(c, 0, 100, p);
    if (!r.ok()) ok = false;
  }
  double t = seconds_since(start);
  report(6, "axiom harness passes 100 cases on each of five shapes within 60 s",
         ok && t < 60.0);
}

TEST_CASE("criterion 7") {
  GenParams p;
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    GeneratedTwoCat c = named_two_cat("discrete-3", rng, p);
    TwoInstance inst = gen_two_instance(rng, c, p);
    LevelwiseFactorization lf = levelwise_factor(inst.alpha);
    for (ObjId i = 0; i < 3; ++i) {
      Factorization flat = factor_bo_ff(inst.alpha.components[i]);
      if (!(lf.mid.on_obj[i] == flat.mid && lf.eps.components[i] == flat.bo &&
            lf.mu.components[i] == flat.ff))
        ok = false;
    }
  }
  report(7, "factorization over the discrete shape equals the independent per-index results",
         ok);
}

TEST_CASE("criterion 8") {
  GenParams p;
  bool assemble_ok = true;
  bool cross_ok = true;
  Rng shape_rng(23);
  GeneratedTwoCat c = named_two_cat("walking-2cell", shape_rng, p);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    TwoInstance inst = gen_two_instance(rng, c, p);
    LevelwiseFactorization fact = levelwise_factor(inst.alpha);
    int k = 2 + rng.below_int(2);
    ObjId shift = static_cast<ObjId>(rng.below_int(k));
    ShiftSquare s = build_shift_square(inst, fact, k, shift);

    // conjugated assembly: the shifted legs plus the comparison cells
    std::vector<FinFunctor> beta;
    std::vector<NatTrans> phi;
    TwoNatTrans mu_delta = compose_two_nat(s.sq.mu, s.delta0);
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      beta.push_back(s.sq.alpha_prime.components[i]);
      NatTrans inv = invert_nat(s.t[i]);
      phi.push_back(inv);
    }
    try {
      auto [assembled, mod] = assemble_two_natural(mu_delta, beta, phi);
      if (!validate_two_natural(assembled).ok() || !validate_modification(mod).ok())
        assemble_ok = false;
      if (!(assembled == s.sq.alpha_prime)) assemble_ok = false;
    } catch (const Error&) {
      assemble_ok = false;
    }

    // the fill recomputes the 2-naturality of the diagonal both directly and
    // through the assembly; a disagreement raises InternalCheckFailure
    if (!validate_two_fill_square(s.sq).ok()) {
      cross_ok = false;
      continue;
    }
    try {
      TwoFillResult r = lifted_diagonal_fill(s.sq);
      if (!(r.delta == s.delta0)) cross_ok = false;
      for (std::size_t i = 0; i < s.t.size(); ++i)
        if (r.psi_tilde.components[i].components != s.t[i].components) cross_ok = false;
    } catch (const InternalCheckFailure&) {
      cross_ok = false;
    }
  }
  report(8, "200 conjugation assemblies validate and every fill cross-check agrees",
         assemble_ok && cross_ok);
}

TEST_CASE("criterion 9") {
  GenParams p;
  bool ok = true;
  auto round_trip = [&ok](DocBuilder& b) {
    Document d = b.take();
    std::string text = render(d);
    Document back = parse(text);
    if (!(back == d) || render(back) != text) ok = false;
  };

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    {
      DocBuilder b;
      b.add_cat("c", gen_fincat(rng, p).cat);
      round_trip(b);
    }
    {
      Rng r2(seed);
      GeneratedCat dom = gen_fincat(r2, p);
      GeneratedCat cod = gen_fincat(r2, p);
      FinFunctor f = gen_functor(r2, dom, cod.cat);
      DocBuilder b;
      std::string dn = b.add_cat("d", dom.cat);
      std::string cn = b.add_cat("c", cod.cat);
      b.add_fun("f", f, dn, cn);
      round_trip(b);
    }
    {
      Rng r2(seed);
      FillInstance inst = gen_fill_instance(r2, p);
      DocBuilder b;
      std::string dc = b.add_cat("dc", inst.square.eps.dom);
      std::string gp = b.add_cat("gp", inst.square.mu.cod);
      std::string alpe = b.add_fun(
          "alpe", compose_functors(inst.square.alpha_prime, inst.square.eps), dc, gp);
      std::string mual =
          b.add_fun("mual", compose_functors(inst.square.mu, inst.square.alpha), dc, gp);
      b.add_nat("psi", inst.square.psi, alpe, mual);
      round_trip(b);
    }
  }

  const char* names[] = {"terminal", "discrete-3", "walking-arrow", "walking-2cell",
                         "composable-pair", "composable-2cells", "one-object-monoid"};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    GeneratedTwoCat c = named_two_cat(names[seed % 7], rng, p);
    TwoInstance inst = gen_two_instance(rng, c, p);
    {
      DocBuilder b;
      b.add_two_cat("c", c.tc);
      round_trip(b);
    }
    {
      DocBuilder b;
      std::string tc = b.add_two_cat("c", c.tc);
      b.add_two_fun("f", inst.f, tc);
      round_trip(b);
    }
    {
      DocBuilder b;
      std::string tc = b.add_two_cat("c", c.tc);
      std::string f = b.add_two_fun("f", inst.f, tc);
      std::string g = b.add_two_fun("g", inst.g, tc);
      b.add_two_nat("a", inst.alpha, f, g);
      round_trip(b);
    }
    {
      DocBuilder b;
      std::string tc = b.add_two_cat("c", c.tc);
      std::string f = b.add_two_fun("f", inst.f, tc);
      std::string g = b.add_two_fun("g", inst.g, tc);
      std::string a = b.add_two_nat("a", inst.alpha, f, g);
      b.add_mod("m", identity_modification(inst.alpha), a, a);
      round_trip(b);
    }
  }
  report(9, "100 generated documents per block type round-trip bit-exactly", ok);
}
