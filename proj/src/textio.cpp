#include "catefs/textio.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "catefs/errors.hpp"

namespace catefs {

// ---- block helpers ---------------------------------------------------------

std::string CatBlock::mor_name(MorId m) const {
  const int n = static_cast<int>(obs.size());
  if (m < n) return "id(" + obs[m] + ")";
  return mors[m - n];
}

ObjId CatBlock::ob_index(const std::string& s) const {
  for (std::size_t i = 0; i < obs.size(); ++i)
    if (obs[i] == s) return static_cast<ObjId>(i);
  return -1;
}

MorId CatBlock::mor_index(const std::string& s) const {
  if (s.size() > 4 && s.compare(0, 3, "id(") == 0 && s.back() == ')') {
    ObjId x = ob_index(s.substr(3, s.size() - 4));
    return x < 0 ? kNoMor : static_cast<MorId>(x);
  }
  for (std::size_t i = 0; i < mors.size(); ++i)
    if (mors[i] == s) return static_cast<MorId>(obs.size() + i);
  return kNoMor;
}

namespace {

template <typename T>
const T* find_block(const std::vector<T>& xs, const std::string& name) {
  for (const auto& x : xs)
    if (x.name == name) return &x;
  return nullptr;
}

}  // namespace

const CatBlock* Document::find_cat(const std::string& n) const { return find_block(cats, n); }
const FunBlock* Document::find_fun(const std::string& n) const { return find_block(funs, n); }
const NatBlock* Document::find_nat(const std::string& n) const { return find_block(nats, n); }
const TwoCatBlock* Document::find_two_cat(const std::string& n) const {
  return find_block(two_cats, n);
}
const TwoFunBlock* Document::find_two_fun(const std::string& n) const {
  return find_block(two_funs, n);
}
const TwoNatBlock* Document::find_two_nat(const std::string& n) const {
  return find_block(two_nats, n);
}
const ModBlock* Document::find_mod(const std::string& n) const { return find_block(mods, n); }

std::pair<FinCat, std::vector<MorId>> canonical_cat(const FinCat& c) {
  const int n = c.objects();
  const int m = c.morphisms();
  std::vector<MorId> perm(m, kNoMor);
  for (ObjId x = 0; x < n; ++x) perm[c.identity(x)] = x;
  MorId next = n;
  for (MorId f = 0; f < m; ++f)
    if (perm[f] == kNoMor) perm[f] = next++;
  FinCat out;
  out.mor.resize(m);
  out.id_of.resize(n);
  out.comp.assign(static_cast<std::size_t>(m) * m, kNoMor);
  for (MorId f = 0; f < m; ++f) out.mor[perm[f]] = c.mor[f];
  for (ObjId x = 0; x < n; ++x) out.id_of[x] = x;
  for (MorId g = 0; g < m; ++g)
    for (MorId f = 0; f < m; ++f)
      if (c.table(g, f) != kNoMor) out.set_comp(perm[g], perm[f], perm[c.table(g, f)]);
  return {std::move(out), std::move(perm)};
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Tok {
  std::string s;
  int line = 0;
  int col = 0;
};

using Line = std::vector<Tok>;

[[noreturn]] void fail(const Tok& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  int line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos
                                                                 : eol - pos);
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    Line toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      toks.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) out.push_back(std::move(toks));
    if (eol == std::string::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return out;
}

struct Parser {
  std::vector<Line> lines;
  std::size_t at = 0;
  Document doc;
  std::set<std::string> names;

  bool done() const { return at >= lines.size(); }
  const Line& cur() const { return lines[at]; }

  void expect_size(const Line& l, std::size_t n, const std::string& what) {
    if (l.size() != n) fail(l[0], "malformed " + what + " line");
  }

  void expect_tok(const Line& l, std::size_t i, const std::string& s) {
    if (l[i].s != s) fail(l[i], "expected '" + s + "'");
  }

  void claim_name(const Tok& t) {
    if (!names.insert(t.s).second) fail(t, "duplicate block name '" + t.s + "'");
  }

  const CatBlock& need_cat(const Tok& t) {
    const CatBlock* b = doc.find_cat(t.s);
    if (!b) fail(t, "unknown category '" + t.s + "'");
    return *b;
  }
  const FunBlock& need_fun(const Tok& t) {
    const FunBlock* b = doc.find_fun(t.s);
    if (!b) fail(t, "unknown functor '" + t.s + "'");
    return *b;
  }
  const NatBlock& need_nat(const Tok& t) {
    const NatBlock* b = doc.find_nat(t.s);
    if (!b) fail(t, "unknown transformation '" + t.s + "'");
    return *b;
  }
  const TwoCatBlock& need_two_cat(const Tok& t) {
    const TwoCatBlock* b = doc.find_two_cat(t.s);
    if (!b) fail(t, "unknown 2-category '" + t.s + "'");
    return *b;
  }
  const TwoFunBlock& need_two_fun(const Tok& t) {
    const TwoFunBlock* b = doc.find_two_fun(t.s);
    if (!b) fail(t, "unknown 2-functor '" + t.s + "'");
    return *b;
  }
  const TwoNatBlock& need_two_nat(const Tok& t) {
    const TwoNatBlock* b = doc.find_two_nat(t.s);
    if (!b) fail(t, "unknown 2-natural transformation '" + t.s + "'");
    return *b;
  }

  /// Collects the body lines of the current block up to "end".
  std::vector<Line> body() {
    std::vector<Line> out;
    ++at;
    while (!done()) {
      if (cur().size() == 1 && cur()[0].s == "end") {
        ++at;
        return out;
      }
      out.push_back(cur());
      ++at;
    }
    throw ParseError(lines.back()[0].line, 1, "missing 'end'");
  }

  void parse_cat() {
    const Line& h = cur();
    expect_size(h, 2, "cat header");
    claim_name(h[1]);
    CatBlock b;
    b.name = h[1].s;
    struct RawMor {
      Tok name, src, tgt;
    };
    struct RawComp {
      Tok g, f, h;
    };
    std::vector<RawMor> raw_mors;
    std::vector<RawComp> raw_comps;
    for (const Line& l : body()) {
      if (l[0].s == "ob") {
        for (std::size_t i = 1; i < l.size(); ++i) {
          if (b.ob_index(l[i].s) >= 0) fail(l[i], "duplicate object '" + l[i].s + "'");
          b.obs.push_back(l[i].s);
        }
      } else if (l[0].s == "mor") {
        expect_size(l, 6, "mor");
        expect_tok(l, 2, ":");
        expect_tok(l, 4, "->");
        raw_mors.push_back({l[1], l[3], l[5]});
      } else if (l[0].s == "comp") {
        expect_size(l, 6, "comp");
        expect_tok(l, 2, ".");
        expect_tok(l, 4, "=");
        raw_comps.push_back({l[1], l[3], l[5]});
      } else {
        fail(l[0], "unexpected '" + l[0].s + "' in cat block");
      }
    }
    const int n = static_cast<int>(b.obs.size());
    for (const RawMor& rm : raw_mors) {
      if (rm.name.s.compare(0, 3, "id(") == 0)
        fail(rm.name, "morphism names may not start with 'id('");
      if (b.mor_index(rm.name.s) != kNoMor) fail(rm.name, "duplicate morphism name");
      if (b.ob_index(rm.src.s) < 0) fail(rm.src, "unknown object '" + rm.src.s + "'");
      if (b.ob_index(rm.tgt.s) < 0) fail(rm.tgt, "unknown object '" + rm.tgt.s + "'");
      b.mors.push_back(rm.name.s);
    }
    const int m = n + static_cast<int>(b.mors.size());
    b.cat.mor.resize(m);
    b.cat.id_of.resize(n);
    b.cat.comp.assign(static_cast<std::size_t>(m) * m, kNoMor);
    for (ObjId x = 0; x < n; ++x) {
      b.cat.id_of[x] = x;
      b.cat.mor[x] = {x, x};
    }
    for (std::size_t i = 0; i < raw_mors.size(); ++i)
      b.cat.mor[n + i] = {b.ob_index(raw_mors[i].src.s), b.ob_index(raw_mors[i].tgt.s)};
    for (MorId f = 0; f < m; ++f) {
      b.cat.set_comp(f, b.cat.identity(b.cat.src(f)), f);
      b.cat.set_comp(b.cat.identity(b.cat.tgt(f)), f, f);
    }
    for (const RawComp& rc : raw_comps) {
      MorId g = b.mor_index(rc.g.s), f = b.mor_index(rc.f.s), res = b.mor_index(rc.h.s);
      if (g == kNoMor) fail(rc.g, "unknown morphism '" + rc.g.s + "'");
      if (f == kNoMor) fail(rc.f, "unknown morphism '" + rc.f.s + "'");
      if (res == kNoMor) fail(rc.h, "unknown morphism '" + rc.h.s + "'");
      if (!b.cat.composable(g, f))
        throw ValidationError(b.name, "composite of non-composable pair " + rc.g.s + " . " +
                                          rc.f.s);
      MorId existing = b.cat.table(g, f);
      if (existing != kNoMor && existing != res)
        throw ValidationError(b.name, "conflicting composite for " + rc.g.s + " . " + rc.f.s);
      b.cat.set_comp(g, f, res);
    }
    for (MorId g = 0; g < m; ++g)
      for (MorId f = 0; f < m; ++f)
        if (b.cat.composable(g, f) && b.cat.table(g, f) == kNoMor)
          throw ValidationError(b.name, "MissingComposite: " + b.mor_name(g) + " . " +
                                            b.mor_name(f));
    Report r = validate_category(b.cat);
    if (!r.ok()) throw ValidationError(b.name, r.to_string());
    doc.order.push_back({Document::BlockType::Cat, static_cast<int>(doc.cats.size())});
    doc.cats.push_back(std::move(b));
  }

  void parse_fun() {
    const Line& h = cur();
    expect_size(h, 6, "fun header");
    expect_tok(h, 2, ":");
    expect_tok(h, 4, "->");
    claim_name(h[1]);
    const CatBlock& a = need_cat(h[3]);
    const CatBlock& c = need_cat(h[5]);
    FunBlock b;
    b.name = h[1].s;
    b.dom = a.name;
    b.cod = c.name;
    b.fun.dom = a.cat;
    b.fun.cod = c.cat;
    b.fun.obj_map.assign(a.cat.objects(), -1);
    b.fun.mor_map.assign(a.cat.morphisms(), kNoMor);
    for (const Line& l : body()) {
      if (l[0].s == "ob") {
        expect_size(l, 4, "ob");
        expect_tok(l, 2, "|->");
        ObjId x = a.ob_index(l[1].s);
        if (x < 0) fail(l[1], "unknown object '" + l[1].s + "'");
        ObjId y = c.ob_index(l[3].s);
        if (y < 0) fail(l[3], "unknown object '" + l[3].s + "'");
        b.fun.obj_map[x] = y;
      } else if (l[0].s == "mor") {
        expect_size(l, 4, "mor");
        expect_tok(l, 2, "|->");
        MorId f = a.mor_index(l[1].s);
        if (f == kNoMor) fail(l[1], "unknown morphism '" + l[1].s + "'");
        MorId g = c.mor_index(l[3].s);
        if (g == kNoMor) fail(l[3], "unknown morphism '" + l[3].s + "'");
        b.fun.mor_map[f] = g;
      } else {
        fail(l[0], "unexpected '" + l[0].s + "' in fun block");
      }
    }
    for (ObjId x = 0; x < a.cat.objects(); ++x)
      if (b.fun.obj_map[x] < 0)
        throw ValidationError(b.name, "object '" + a.obs[x] + "' has no image");
    for (ObjId x = 0; x < a.cat.objects(); ++x) {
      MorId& img = b.fun.mor_map[a.cat.identity(x)];
      MorId forced = c.cat.identity(b.fun.obj_map[x]);
      if (img != kNoMor && img != forced)
        throw ValidationError(b.name, "identity of '" + a.obs[x] + "' mapped incorrectly");
      img = forced;
    }
    for (MorId f = 0; f < a.cat.morphisms(); ++f)
      if (b.fun.mor_map[f] == kNoMor)
        throw ValidationError(b.name, "morphism '" + a.mor_name(f) + "' has no image");
    Report r = validate_functor(b.fun);
    if (!r.ok()) throw ValidationError(b.name, r.to_string());
    doc.order.push_back({Document::BlockType::Fun, static_cast<int>(doc.funs.size())});
    doc.funs.push_back(std::move(b));
  }

  void parse_nat() {
    const Line& h = cur();
    expect_size(h, 6, "nat header");
    expect_tok(h, 2, ":");
    expect_tok(h, 4, "=>");
    claim_name(h[1]);
    const FunBlock& f = need_fun(h[3]);
    const FunBlock& g = need_fun(h[5]);
    if (f.dom != g.dom || f.cod != g.cod)
      throw ValidationError(h[1].s, "functors '" + f.name + "' and '" + g.name +
                                        "' are not parallel");
    const CatBlock& dom_cat = *doc.find_cat(f.dom);
    const CatBlock& cod_cat = *doc.find_cat(f.cod);
    NatBlock b;
    b.name = h[1].s;
    b.dom = f.name;
    b.cod = g.name;
    b.nat.dom_f = f.fun;
    b.nat.cod_f = g.fun;
    b.nat.components.assign(dom_cat.cat.objects(), kNoMor);
    for (const Line& l : body()) {
      if (l[0].s != "at") fail(l[0], "unexpected '" + l[0].s + "' in nat block");
      expect_size(l, 4, "at");
      expect_tok(l, 2, ":");
      ObjId x = dom_cat.ob_index(l[1].s);
      if (x < 0) fail(l[1], "unknown object '" + l[1].s + "'");
      MorId m = cod_cat.mor_index(l[3].s);
      if (m == kNoMor) fail(l[3], "unknown morphism '" + l[3].s + "'");
      b.nat.components[x] = m;
    }
    for (ObjId x = 0; x < dom_cat.cat.objects(); ++x)
      if (b.nat.components[x] == kNoMor)
        throw ValidationError(b.name, "missing component at '" + dom_cat.obs[x] + "'");
    Report r = validate_nat(b.nat);
    if (!r.ok()) throw ValidationError(b.name, r.to_string());
    doc.order.push_back({Document::BlockType::Nat, static_cast<int>(doc.nats.size())});
    doc.nats.push_back(std::move(b));
  }

  /// Correspondence from the structural product of two hom categories to a
  /// declared cat block: objects by product index, nonidentity morphisms in
  /// ascending product index.
  std::vector<MorId> product_iso(const FinCat& p, const CatBlock& d, const std::string& who) {
    if (d.cat.objects() != p.objects() || d.cat.morphisms() != p.morphisms())
      throw ValidationError(who, "hcomp domain '" + d.name + "' has the wrong size");
    std::vector<MorId> iso(p.morphisms());
    MorId next = static_cast<MorId>(d.obs.size());
    for (MorId q = 0; q < p.morphisms(); ++q) {
      if (p.is_identity(q)) {
        iso[q] = d.cat.identity(p.src(q));
      } else {
        iso[q] = next++;
      }
      if (d.cat.src(iso[q]) != p.src(q) || d.cat.tgt(iso[q]) != p.tgt(q))
        throw ValidationError(who, "hcomp domain '" + d.name +
                                       "' does not match the product shape");
    }
    for (MorId g = 0; g < p.morphisms(); ++g)
      for (MorId f = 0; f < p.morphisms(); ++f) {
        MorId lhs = p.table(g, f);
        MorId rhs = d.cat.table(iso[g], iso[f]);
        if ((lhs == kNoMor) != (rhs == kNoMor) || (lhs != kNoMor && iso[lhs] != rhs))
          throw ValidationError(who, "hcomp domain '" + d.name +
                                         "' does not match the product composition");
      }
    return iso;
  }

  void parse_two_cat() {
    const Line& h = cur();
    expect_size(h, 2, "2cat header");
    claim_name(h[1]);
    TwoCatBlock b;
    b.name = h[1].s;
    struct RawRef {
      std::vector<Tok> idx;
      Tok val;
    };
    std::vector<RawRef> raw_homs, raw_units, raw_hcomps;
    for (const Line& l : body()) {
      if (l[0].s == "ob") {
        for (std::size_t i = 1; i < l.size(); ++i) {
          for (const auto& o : b.obs)
            if (o == l[i].s) fail(l[i], "duplicate object '" + l[i].s + "'");
          b.obs.push_back(l[i].s);
        }
      } else if (l[0].s == "hom") {
        expect_size(l, 5, "hom");
        expect_tok(l, 3, "=");
        raw_homs.push_back({{l[1], l[2]}, l[4]});
      } else if (l[0].s == "unit") {
        expect_size(l, 4, "unit");
        expect_tok(l, 2, "=");
        raw_units.push_back({{l[1]}, l[3]});
      } else if (l[0].s == "hcomp") {
        expect_size(l, 6, "hcomp");
        expect_tok(l, 4, "=");
        raw_hcomps.push_back({{l[1], l[2], l[3]}, l[5]});
      } else {
        fail(l[0], "unexpected '" + l[0].s + "' in 2cat block");
      }
    }
    const int n = static_cast<int>(b.obs.size());
    auto ob_at = [&](const Tok& t) {
      for (int i = 0; i < n; ++i)
        if (b.obs[i] == t.s) return static_cast<ObjId>(i);
      fail(t, "unknown object '" + t.s + "'");
    };
    b.homs.assign(static_cast<std::size_t>(n) * n, "");
    b.hcomps.assign(static_cast<std::size_t>(n) * n * n, "");
    b.tc.n_objects = n;
    b.tc.homs.resize(static_cast<std::size_t>(n) * n);
    b.tc.hcomps.resize(static_cast<std::size_t>(n) * n * n);
    b.tc.units.assign(n, -1);
    for (const RawRef& r : raw_homs) {
      ObjId x = ob_at(r.idx[0]), y = ob_at(r.idx[1]);
      const CatBlock& cb = need_cat(r.val);
      b.homs[x * n + y] = cb.name;
      b.tc.hom(x, y) = cb.cat;
    }
    for (int j = 0; j < n * n; ++j)
      if (b.homs[j].empty())
        throw ValidationError(b.name, "missing hom category at (" + b.obs[j / n] + "," +
                                          b.obs[j % n] + ")");
    for (const RawRef& r : raw_units) {
      ObjId x = ob_at(r.idx[0]);
      const CatBlock& cb = *doc.find_cat(b.homs[x * n + x]);
      ObjId u = cb.ob_index(r.val.s);
      if (u < 0) fail(r.val, "unknown 1-cell '" + r.val.s + "'");
      b.tc.units[x] = u;
    }
    for (int x = 0; x < n; ++x)
      if (b.tc.units[x] < 0)
        throw ValidationError(b.name, "missing unit at '" + b.obs[x] + "'");
    for (const RawRef& r : raw_hcomps) {
      ObjId x = ob_at(r.idx[0]), y = ob_at(r.idx[1]), z = ob_at(r.idx[2]);
      const FunBlock& fb = need_fun(r.val);
      if (fb.cod != b.homs[x * n + z])
        throw ValidationError(b.name, "hcomp '" + fb.name + "' lands in the wrong hom");
      const CatBlock& d = need_cat(Tok{fb.dom, r.val.line, r.val.col});
      FinCat p = product_category(b.tc.hom(y, z), b.tc.hom(x, y));
      std::vector<MorId> iso = product_iso(p, d, b.name);
      FinFunctor hc;
      hc.dom = std::move(p);
      hc.cod = b.tc.hom(x, z);
      hc.obj_map = fb.fun.obj_map;
      hc.mor_map.resize(hc.dom.morphisms());
      for (MorId q = 0; q < hc.dom.morphisms(); ++q) hc.mor_map[q] = fb.fun.mor_map[iso[q]];
      b.hcomps[(x * n + y) * n + z] = fb.name;
      b.tc.hcomp(x, y, z) = std::move(hc);
    }
    for (int j = 0; j < n * n * n; ++j)
      if (b.hcomps[j].empty()) throw ValidationError(b.name, "missing hcomp functor");
    Report r = validate_two_cat(b.tc);
    if (!r.ok()) throw ValidationError(b.name, r.to_string());
    doc.order.push_back({Document::BlockType::TwoCat, static_cast<int>(doc.two_cats.size())});
    doc.two_cats.push_back(std::move(b));
  }

  void parse_two_fun() {
    const Line& h = cur();
    expect_size(h, 4, "2fun header");
    expect_tok(h, 2, ":");
    claim_name(h[1]);
    const TwoCatBlock& tcb = need_two_cat(h[3]);
    const int n = tcb.tc.objects();
    auto ob_at = [&](const Tok& t) {
      for (int i = 0; i < n; ++i)
        if (tcb.obs[i] == t.s) return static_cast<ObjId>(i);
      fail(t, "unknown object '" + t.s + "'");
    };
    TwoFunBlock b;
    b.name = h[1].s;
    b.twocat = tcb.name;
    b.values.assign(n, "");
    b.ones.resize(static_cast<std::size_t>(n) * n);
    b.twos.resize(static_cast<std::size_t>(n) * n);
    b.f.dom = tcb.tc;
    b.f.on_obj.resize(n);
    b.f.on_one.resize(static_cast<std::size_t>(n) * n);
    b.f.on_two.resize(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n * n; ++j) {
      const FinCat& ab = tcb.tc.homs[j];
      b.ones[j].assign(ab.objects(), "");
      b.twos[j].assign(ab.morphisms() - ab.objects(), "");
      b.f.on_one[j].resize(ab.objects());
      b.f.on_two[j].resize(ab.morphisms());
    }
    for (const Line& l : body()) {
      if (l[0].s == "ob") {
        expect_size(l, 4, "ob");
        expect_tok(l, 2, "=");
        b.values[ob_at(l[1])] = need_cat(l[3]).name;
      } else if (l[0].s == "one") {
        expect_size(l, 6, "one");
        expect_tok(l, 4, "=");
        ObjId x = ob_at(l[1]), y = ob_at(l[2]);
        const CatBlock& hom = *doc.find_cat(tcb.homs[x * n + y]);
        ObjId cell = hom.ob_index(l[3].s);
        if (cell < 0) fail(l[3], "unknown 1-cell '" + l[3].s + "'");
        const FunBlock& fb = need_fun(l[5]);
        b.ones[x * n + y][cell] = fb.name;
        b.f.on_one[x * n + y][cell] = fb.fun;
      } else if (l[0].s == "two") {
        expect_size(l, 6, "two");
        expect_tok(l, 4, "=");
        ObjId x = ob_at(l[1]), y = ob_at(l[2]);
        const CatBlock& hom = *doc.find_cat(tcb.homs[x * n + y]);
        MorId cell = hom.mor_index(l[3].s);
        if (cell == kNoMor) fail(l[3], "unknown 2-cell '" + l[3].s + "'");
        if (hom.cat.is_identity(cell))
          fail(l[3], "identity 2-cell lines are implicit");
        const NatBlock& nb = need_nat(l[5]);
        b.twos[x * n + y][cell - hom.cat.objects()] = nb.name;
        b.f.on_two[x * n + y][cell] = nb.nat;
      } else {
        fail(l[0], "unexpected '" + l[0].s + "' in 2fun block");
      }
    }
    for (int c = 0; c < n; ++c) {
      if (b.values[c].empty())
        throw ValidationError(b.name, "missing value at '" + tcb.obs[c] + "'");
      b.f.on_obj[c] = doc.find_cat(b.values[c])->cat;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int j = x * n + y;
        const CatBlock& hom = *doc.find_cat(tcb.homs[j]);
        for (ObjId cell = 0; cell < hom.cat.objects(); ++cell) {
          if (b.ones[j][cell].empty())
            throw ValidationError(b.name, "missing image of 1-cell '" + hom.obs[cell] + "'");
          const FunBlock& fb = *doc.find_fun(b.ones[j][cell]);
          if (fb.dom != b.values[x] || fb.cod != b.values[y])
            throw ValidationError(b.name, "functor '" + fb.name +
                                              "' does not run between the values");
        }
        for (MorId cell = 0; cell < hom.cat.morphisms(); ++cell) {
          if (hom.cat.is_identity(cell)) {
            b.f.on_two[j][cell] = identity_nat(b.f.on_one[j][hom.cat.src(cell)]);
            continue;
          }
          const std::string& nm = b.twos[j][cell - hom.cat.objects()];
          if (nm.empty())
            throw ValidationError(b.name,
                                  "missing image of 2-cell '" + hom.mor_name(cell) + "'");
          const NatBlock& nb = *doc.find_nat(nm);
          if (nb.dom != b.ones[j][hom.cat.src(cell)] || nb.cod != b.ones[j][hom.cat.tgt(cell)])
            throw ValidationError(b.name, "transformation '" + nb.name +
                                              "' has the wrong boundary 1-cells");
        }
      }
    Report r = validate_two_functor(b.f);
    if (!r.ok()) throw ValidationError(b.name, r.to_string());
    doc.order.push_back({Document::BlockType::TwoFun, static_cast<int>(doc.two_funs.size())});
    doc.two_funs.push_back(std::move(b));
  }

  void parse_two_nat() {
    const Line& h = cur();
    expect_size(h, 6, "2nat header");
    expect_tok(h, 2, ":");
    expect_tok(h, 4, "=>");
    claim_name(h[1]);
    const TwoFunBlock& f = need_two_fun(h[3]);
    const TwoFunBlock& g = need_two_fun(h[5]);
    if (f.twocat != g.twocat)
      throw ValidationError(h[1].s, "2-functors over different 2-categories");
    const TwoCatBlock& tcb = *doc.find_two_cat(f.twocat);
    const int n = tcb.tc.objects();
    TwoNatBlock b;
    b.name = h[1].s;
    b.dom = f.name;
    b.cod = g.name;
    b.comps.assign(n, "");
    b.t.dom_f = f.f;
    b.t.cod_f = g.f;
    b.t.components.resize(n);
    for (const Line& l : body()) {
      if (l[0].s != "at") fail(l[0], "unexpected '" + l[0].s + "' in 2nat block");
      expect_size(l, 4, "at");
      expect_tok(l, 2, ":");
      ObjId c = -1;
      for (int i = 0; i < n; ++i)
        if (tcb.obs[i] == l[1].s) c = i;
      if (c < 0) fail(l[1], "unknown object '" + l[1].s + "'");
      const FunBlock& fb = need_fun(l[3]);
      if (fb.dom != f.values[c] || fb.cod != g.values[c])
        throw ValidationError(b.name, "component '" + fb.name +
                                          "' does not run between the values");
      b.comps[c] = fb.name;
      b.t.components[c] = fb.fun;
    }
    for (int c = 0; c < n; ++c)
      if (b.comps[c].empty())
        throw ValidationError(b.name, "missing component at '" + tcb.obs[c] + "'");
    Report r = validate_two_natural(b.t);
    if (!r.ok()) throw ValidationError(b.name, r.to_string());
    doc.order.push_back({Document::BlockType::TwoNat, static_cast<int>(doc.two_nats.size())});
    doc.two_nats.push_back(std::move(b));
  }

  void parse_mod() {
    const Line& h = cur();
    expect_size(h, 6, "mod header");
    expect_tok(h, 2, ":");
    expect_tok(h, 4, "=>");
    claim_name(h[1]);
    const TwoNatBlock& s = need_two_nat(h[3]);
    const TwoNatBlock& t = need_two_nat(h[5]);
    if (s.dom != t.dom || s.cod != t.cod)
      throw ValidationError(h[1].s, "2-natural transformations are not parallel");
    const TwoFunBlock& f = *doc.find_two_fun(s.dom);
    const TwoCatBlock& tcb = *doc.find_two_cat(f.twocat);
    const int n = tcb.tc.objects();
    ModBlock b;
    b.name = h[1].s;
    b.dom = s.name;
    b.cod = t.name;
    b.comps.assign(n, "");
    b.m.dom_t = s.t;
    b.m.cod_t = t.t;
    b.m.components.resize(n);
    for (const Line& l : body()) {
      if (l[0].s != "at") fail(l[0], "unexpected '" + l[0].s + "' in mod block");
      expect_size(l, 4, "at");
      expect_tok(l, 2, ":");
      ObjId c = -1;
      for (int i = 0; i < n; ++i)
        if (tcb.obs[i] == l[1].s) c = i;
      if (c < 0) fail(l[1], "unknown object '" + l[1].s + "'");
      const NatBlock& nb = need_nat(l[3]);
      if (nb.dom != s.comps[c] || nb.cod != t.comps[c])
        throw ValidationError(b.name, "component '" + nb.name +
                                          "' has the wrong boundary functors");
      b.comps[c] = nb.name;
      b.m.components[c] = nb.nat;
    }
    for (int c = 0; c < n; ++c)
      if (b.comps[c].empty())
        throw ValidationError(b.name, "missing component at '" + tcb.obs[c] + "'");
    Report r = validate_modification(b.m);
    if (!r.ok()) throw ValidationError(b.name, r.to_string());
    doc.order.push_back({Document::BlockType::Mod, static_cast<int>(doc.mods.size())});
    doc.mods.push_back(std::move(b));
  }

  Document run() {
    while (!done()) {
      const std::string& kw = cur()[0].s;
      if (kw == "cat")
        parse_cat();
      else if (kw == "fun")
        parse_fun();
      else if (kw == "nat")
        parse_nat();
      else if (kw == "2cat")
        parse_two_cat();
      else if (kw == "2fun")
        parse_two_fun();
      else if (kw == "2nat")
        parse_two_nat();
      else if (kw == "mod")
        parse_mod();
      else
        fail(cur()[0], "unknown block type '" + kw + "'");
    }
    return std::move(doc);
  }
};

}  // namespace

Document parse(const std::string& text) {
  Parser p;
  p.lines = tokenize(text);
  return p.run();
}

// ---- rendering -------------------------------------------------------------

namespace {

void render_cat(const Document&, const CatBlock& b, std::ostringstream& out) {
  out << "cat " << b.name << "\n";
  if (!b.obs.empty()) {
    out << "  ob";
    for (const auto& o : b.obs) out << ' ' << o;
    out << "\n";
  }
  const int n = static_cast<int>(b.obs.size());
  for (MorId f = n; f < b.cat.morphisms(); ++f)
    out << "  mor " << b.mor_name(f) << " : " << b.obs[b.cat.src(f)] << " -> "
        << b.obs[b.cat.tgt(f)] << "\n";
  for (MorId g = n; g < b.cat.morphisms(); ++g)
    for (MorId f = n; f < b.cat.morphisms(); ++f)
      if (b.cat.composable(g, f))
        out << "  comp " << b.mor_name(g) << " . " << b.mor_name(f) << " = "
            << b.mor_name(b.cat.table(g, f)) << "\n";
  out << "end\n";
}

void render_fun(const Document& doc, const FunBlock& b, std::ostringstream& out) {
  const CatBlock& a = *doc.find_cat(b.dom);
  const CatBlock& c = *doc.find_cat(b.cod);
  out << "fun " << b.name << " : " << b.dom << " -> " << b.cod << "\n";
  for (ObjId x = 0; x < a.cat.objects(); ++x)
    out << "  ob " << a.obs[x] << " |-> " << c.obs[b.fun.obj_map[x]] << "\n";
  for (MorId f = a.cat.objects(); f < a.cat.morphisms(); ++f)
    out << "  mor " << a.mor_name(f) << " |-> " << c.mor_name(b.fun.mor_map[f]) << "\n";
  out << "end\n";
}

void render_nat(const Document& doc, const NatBlock& b, std::ostringstream& out) {
  const FunBlock& f = *doc.find_fun(b.dom);
  const CatBlock& a = *doc.find_cat(f.dom);
  const CatBlock& c = *doc.find_cat(f.cod);
  out << "nat " << b.name << " : " << b.dom << " => " << b.cod << "\n";
  for (ObjId x = 0; x < a.cat.objects(); ++x)
    out << "  at " << a.obs[x] << " : " << c.mor_name(b.nat.components[x]) << "\n";
  out << "end\n";
}

void render_two_cat(const Document& doc, const TwoCatBlock& b, std::ostringstream& out) {
  const int n = static_cast<int>(b.obs.size());
  out << "2cat " << b.name << "\n";
  if (n > 0) {
    out << "  ob";
    for (const auto& o : b.obs) out << ' ' << o;
    out << "\n";
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out << "  hom " << b.obs[x] << ' ' << b.obs[y] << " = " << b.homs[x * n + y] << "\n";
  for (int x = 0; x < n; ++x)
    out << "  unit " << b.obs[x] << " = "
        << doc.find_cat(b.homs[x * n + x])->obs[b.tc.units[x]] << "\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        out << "  hcomp " << b.obs[x] << ' ' << b.obs[y] << ' ' << b.obs[z] << " = "
            << b.hcomps[(x * n + y) * n + z] << "\n";
  out << "end\n";
}

void render_two_fun(const Document& doc, const TwoFunBlock& b, std::ostringstream& out) {
  const TwoCatBlock& tcb = *doc.find_two_cat(b.twocat);
  const int n = static_cast<int>(tcb.obs.size());
  out << "2fun " << b.name << " : " << b.twocat << "\n";
  for (int c = 0; c < n; ++c)
    out << "  ob " << tcb.obs[c] << " = " << b.values[c] << "\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const CatBlock& hom = *doc.find_cat(tcb.homs[x * n + y]);
      for (ObjId cell = 0; cell < hom.cat.objects(); ++cell)
        out << "  one " << tcb.obs[x] << ' ' << tcb.obs[y] << ' ' << hom.obs[cell] << " = "
            << b.ones[x * n + y][cell] << "\n";
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const CatBlock& hom = *doc.find_cat(tcb.homs[x * n + y]);
      for (MorId cell = hom.cat.objects(); cell < hom.cat.morphisms(); ++cell)
        out << "  two " << tcb.obs[x] << ' ' << tcb.obs[y] << ' ' << hom.mor_name(cell)
            << " = " << b.twos[x * n + y][cell - hom.cat.objects()] << "\n";
    }
  out << "end\n";
}

void render_two_nat(const Document& doc, const TwoNatBlock& b, std::ostringstream& out) {
  const TwoFunBlock& f = *doc.find_two_fun(b.dom);
  const TwoCatBlock& tcb = *doc.find_two_cat(f.twocat);
  out << "2nat " << b.name << " : " << b.dom << " => " << b.cod << "\n";
  for (std::size_t c = 0; c < tcb.obs.size(); ++c)
    out << "  at " << tcb.obs[c] << " : " << b.comps[c] << "\n";
  out << "end\n";
}

void render_mod(const Document& doc, const ModBlock& b, std::ostringstream& out) {
  const TwoNatBlock& s = *doc.find_two_nat(b.dom);
  const TwoFunBlock& f = *doc.find_two_fun(s.dom);
  const TwoCatBlock& tcb = *doc.find_two_cat(f.twocat);
  out << "mod " << b.name << " : " << b.dom << " => " << b.cod << "\n";
  for (std::size_t c = 0; c < tcb.obs.size(); ++c)
    out << "  at " << tcb.obs[c] << " : " << b.comps[c] << "\n";
  out << "end\n";
}

}  // namespace

std::string render(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& e : doc.order) {
    if (!first) out << "\n";
    first = false;
    switch (e.type) {
      case Document::BlockType::Cat: render_cat(doc, doc.cats[e.index], out); break;
      case Document::BlockType::Fun: render_fun(doc, doc.funs[e.index], out); break;
      case Document::BlockType::Nat: render_nat(doc, doc.nats[e.index], out); break;
      case Document::BlockType::TwoCat: render_two_cat(doc, doc.two_cats[e.index], out); break;
      case Document::BlockType::TwoFun: render_two_fun(doc, doc.two_funs[e.index], out); break;
      case Document::BlockType::TwoNat: render_two_nat(doc, doc.two_nats[e.index], out); break;
      case Document::BlockType::Mod: render_mod(doc, doc.mods[e.index], out); break;
    }
  }
  return out.str();
}

// ---- building --------------------------------------------------------------

void DocBuilder::require_fresh(const std::string& name) const {
  if (cat_info_.count(name) || fun_info_.count(name) || nat_info_.count(name) ||
      two_cat_info_.count(name) || two_fun_info_.count(name) || two_nat_info_.count(name) ||
      doc_.find_mod(name))
    throw PreconditionFailed("duplicate block name '" + name + "'");
}

const DocBuilder::CatInfo& DocBuilder::cat_of(const std::string& name) const {
  auto it = cat_info_.find(name);
  if (it == cat_info_.end())
    throw PreconditionFailed("unknown category block '" + name + "'");
  return it->second;
}

std::string DocBuilder::add_cat(const std::string& name, const FinCat& c) {
  require_fresh(name);
  auto [canon, perm] = canonical_cat(c);
  CatBlock b;
  b.name = name;
  for (ObjId x = 0; x < c.objects(); ++x) b.obs.push_back("x" + std::to_string(x));
  for (int i = 0; i < c.morphisms() - c.objects(); ++i)
    b.mors.push_back("f" + std::to_string(i));
  b.cat = std::move(canon);
  cat_info_[name] = {c, std::move(perm), static_cast<int>(doc_.cats.size())};
  doc_.order.push_back({Document::BlockType::Cat, static_cast<int>(doc_.cats.size())});
  doc_.cats.push_back(std::move(b));
  return name;
}

std::string DocBuilder::add_fun(const std::string& name, const FinFunctor& f,
                               const std::string& dom, const std::string& cod) {
  require_fresh(name);
  const CatInfo& d = cat_of(dom);
  const CatInfo& c = cat_of(cod);
  if (d.original != f.dom || c.original != f.cod)
    throw PreconditionFailed("functor '" + name + "' does not match its named categories");
  FunBlock b;
  b.name = name;
  b.dom = dom;
  b.cod = cod;
  b.fun.dom = doc_.cats[d.block].cat;
  b.fun.cod = doc_.cats[c.block].cat;
  b.fun.obj_map = f.obj_map;
  b.fun.mor_map.resize(f.mor_map.size());
  for (MorId m = 0; m < static_cast<MorId>(f.mor_map.size()); ++m)
    b.fun.mor_map[d.perm[m]] = c.perm[f.mor_map[m]];
  fun_info_[name] = {f, static_cast<int>(doc_.funs.size())};
  doc_.order.push_back({Document::BlockType::Fun, static_cast<int>(doc_.funs.size())});
  doc_.funs.push_back(std::move(b));
  return name;
}

std::string DocBuilder::add_nat(const std::string& name, const NatTrans& a,
                               const std::string& dom, const std::string& cod) {
  require_fresh(name);
  auto di = fun_info_.find(dom);
  auto ci = fun_info_.find(cod);
  if (di == fun_info_.end() || ci == fun_info_.end())
    throw PreconditionFailed("unknown functor block for transformation '" + name + "'");
  if (di->second.original != a.dom_f || ci->second.original != a.cod_f)
    throw PreconditionFailed("transformation '" + name + "' does not match its functors");
  const FunBlock& db = doc_.funs[di->second.block];
  const CatInfo& cod_cat = cat_of(db.cod);
  NatBlock b;
  b.name = name;
  b.dom = dom;
  b.cod = cod;
  b.nat.dom_f = db.fun;
  b.nat.cod_f = doc_.funs[ci->second.block].fun;
  b.nat.components.resize(a.components.size());
  for (std::size_t x = 0; x < a.components.size(); ++x)
    b.nat.components[x] = cod_cat.perm[a.components[x]];
  nat_info_[name] = {a, static_cast<int>(doc_.nats.size())};
  doc_.order.push_back({Document::BlockType::Nat, static_cast<int>(doc_.nats.size())});
  doc_.nats.push_back(std::move(b));
  return name;
}

std::string DocBuilder::add_two_cat(const std::string& name, const FinTwoCat& tc) {
  require_fresh(name);
  const int n = tc.objects();
  TwoCatBlock b;
  b.name = name;
  for (int x = 0; x < n; ++x) b.obs.push_back("c" + std::to_string(x));
  b.homs.resize(static_cast<std::size_t>(n) * n);
  b.hcomps.resize(static_cast<std::size_t>(n) * n * n);
  b.tc.n_objects = n;
  b.tc.homs.resize(static_cast<std::size_t>(n) * n);
  b.tc.hcomps.resize(static_cast<std::size_t>(n) * n * n);
  b.tc.units = tc.units;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::string hn = name + "_h" + std::to_string(x) + "_" + std::to_string(y);
      add_cat(hn, tc.hom(x, y));
      b.homs[x * n + y] = hn;
      b.tc.homs[x * n + y] = doc_.cats[cat_of(hn).block].cat;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const std::string sfx =
            std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(z);
        const FinCat& old_ab = tc.hom(x, y);
        const FinCat& old_bc = tc.hom(y, z);
        const std::vector<MorId>& pab = cat_of(b.homs[x * n + y]).perm;
        const std::vector<MorId>& pbc = cat_of(b.homs[y * n + z]).perm;
        const std::vector<MorId>& pac = cat_of(b.homs[x * n + z]).perm;
        const FinCat& new_ab = b.tc.hom(x, y);
        FinCat p_norm = product_category(b.tc.hom(y, z), new_ab);
        const FinFunctor& old_h = tc.hcomp(x, y, z);
        // the hcomp over the relabeled homs, expressed first against the
        // original target labels (for the fun block) and then fully
        // relabeled (for the structural 2-category)
        FinFunctor h_orig;
        h_orig.dom = p_norm;
        h_orig.cod = tc.hom(x, z);
        h_orig.obj_map = old_h.obj_map;
        h_orig.mor_map.resize(p_norm.morphisms());
        FinFunctor h_norm;
        h_norm.dom = p_norm;
        h_norm.cod = b.tc.hom(x, z);
        h_norm.obj_map = old_h.obj_map;
        h_norm.mor_map.resize(p_norm.morphisms());
        for (MorId u = 0; u < old_bc.morphisms(); ++u)
          for (MorId v = 0; v < old_ab.morphisms(); ++v) {
            MorId q_new = pair_mor(new_ab, pbc[u], pab[v]);
            MorId old_img = old_h.mor_map[pair_mor(old_ab, u, v)];
            h_orig.mor_map[q_new] = old_img;
            h_norm.mor_map[q_new] = pac[old_img];
          }
        std::string pn = name + "_p" + sfx;
        add_cat(pn, p_norm);
        std::string fn = name + "_c" + sfx;
        add_fun(fn, h_orig, pn, b.homs[x * n + z]);
        b.hcomps[(x * n + y) * n + z] = fn;
        b.tc.hcomp(x, y, z) = std::move(h_norm);
      }
  internal_check(validate_two_cat(b.tc).ok(), "relabeled 2-category is invalid");
  two_cat_info_[name] = {tc, static_cast<int>(doc_.two_cats.size())};
  doc_.order.push_back({Document::BlockType::TwoCat, static_cast<int>(doc_.two_cats.size())});
  doc_.two_cats.push_back(std::move(b));
  return name;
}

std::string DocBuilder::add_two_fun(const std::string& name, const CatValued2Functor& f,
                                   const std::string& twocat) {
  require_fresh(name);
  auto ti = two_cat_info_.find(twocat);
  if (ti == two_cat_info_.end())
    throw PreconditionFailed("unknown 2-category block '" + twocat + "'");
  if (ti->second.original != f.dom)
    throw PreconditionFailed("2-functor '" + name + "' does not match its 2-category");
  const TwoCatBlock& tcb = doc_.two_cats[ti->second.block];
  const int n = f.dom.objects();
  TwoFunBlock b;
  b.name = name;
  b.twocat = twocat;
  b.values.resize(n);
  b.ones.resize(static_cast<std::size_t>(n) * n);
  b.twos.resize(static_cast<std::size_t>(n) * n);
  b.f.dom = tcb.tc;
  b.f.on_obj.resize(n);
  b.f.on_one.resize(static_cast<std::size_t>(n) * n);
  b.f.on_two.resize(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c) {
    b.values[c] = add_cat(name + "_v" + std::to_string(c), f.on_obj[c]);
    b.f.on_obj[c] = doc_.cats[cat_of(b.values[c]).block].cat;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int j = x * n + y;
      const FinCat& old_hom = f.dom.hom(x, y);
      const std::vector<MorId>& ph = cat_of(tcb.homs[j]).perm;
      b.f.on_one[j].resize(old_hom.objects());
      b.f.on_two[j].resize(old_hom.morphisms());
      b.ones[j].resize(old_hom.objects());
      b.twos[j].resize(old_hom.morphisms() - old_hom.objects());
      for (ObjId cell = 0; cell < old_hom.objects(); ++cell) {
        std::string fn = add_fun(name + "_o" + std::to_string(x) + "_" + std::to_string(y) +
                                     "_" + std::to_string(cell),
                                 f.one(x, y, cell), b.values[x], b.values[y]);
        b.ones[j][cell] = fn;
        b.f.on_one[j][cell] = doc_.funs[fun_info_.at(fn).block].fun;
      }
      for (MorId cell = 0; cell < old_hom.morphisms(); ++cell) {
        MorId nc = ph[cell];
        if (old_hom.is_identity(cell)) {
          b.f.on_two[j][nc] = identity_nat(b.f.on_one[j][old_hom.src(cell)]);
          continue;
        }
        std::string nn = add_nat(
            name + "_t" + std::to_string(x) + "_" + std::to_string(y) + "_" +
                std::to_string(nc),
            f.two(x, y, cell), b.ones[j][old_hom.src(cell)], b.ones[j][old_hom.tgt(cell)]);
        b.twos[j][nc - old_hom.objects()] = nn;
        b.f.on_two[j][nc] = doc_.nats[nat_info_.at(nn).block].nat;
      }
    }
  internal_check(validate_two_functor(b.f).ok(), "relabeled 2-functor is invalid");
  two_fun_info_[name] = {f, static_cast<int>(doc_.two_funs.size())};
  doc_.order.push_back({Document::BlockType::TwoFun, static_cast<int>(doc_.two_funs.size())});
  doc_.two_funs.push_back(std::move(b));
  return name;
}

std::string DocBuilder::add_two_nat(const std::string& name, const TwoNatTrans& t,
                                   const std::string& dom, const std::string& cod) {
  require_fresh(name);
  auto di = two_fun_info_.find(dom);
  auto ci = two_fun_info_.find(cod);
  if (di == two_fun_info_.end() || ci == two_fun_info_.end())
    throw PreconditionFailed("unknown 2-functor block for '" + name + "'");
  if (di->second.original != t.dom_f || ci->second.original != t.cod_f)
    throw PreconditionFailed("2-natural transformation '" + name +
                             "' does not match its 2-functors");
  const TwoFunBlock& fb = doc_.two_funs[di->second.block];
  const TwoFunBlock& gb = doc_.two_funs[ci->second.block];
  const int n = static_cast<int>(t.components.size());
  TwoNatBlock b;
  b.name = name;
  b.dom = dom;
  b.cod = cod;
  b.comps.resize(n);
  b.t.dom_f = fb.f;
  b.t.cod_f = gb.f;
  b.t.components.resize(n);
  for (int c = 0; c < n; ++c) {
    std::string fn = add_fun(name + "_a" + std::to_string(c), t.components[c], fb.values[c],
                             gb.values[c]);
    b.comps[c] = fn;
    b.t.components[c] = doc_.funs[fun_info_.at(fn).block].fun;
  }
  internal_check(validate_two_natural(b.t).ok(), "relabeled transformation is invalid");
  two_nat_info_[name] = {t, static_cast<int>(doc_.two_nats.size())};
  doc_.order.push_back({Document::BlockType::TwoNat, static_cast<int>(doc_.two_nats.size())});
  doc_.two_nats.push_back(std::move(b));
  return name;
}

std::string DocBuilder::add_mod(const std::string& name, const Modification& m,
                               const std::string& dom, const std::string& cod) {
  require_fresh(name);
  auto si = two_nat_info_.find(dom);
  auto ti = two_nat_info_.find(cod);
  if (si == two_nat_info_.end() || ti == two_nat_info_.end())
    throw PreconditionFailed("unknown 2-natural block for '" + name + "'");
  if (si->second.original != m.dom_t || ti->second.original != m.cod_t)
    throw PreconditionFailed("modification '" + name + "' does not match its boundaries");
  const TwoNatBlock& sb = doc_.two_nats[si->second.block];
  const TwoNatBlock& tb = doc_.two_nats[ti->second.block];
  const int n = static_cast<int>(m.components.size());
  ModBlock b;
  b.name = name;
  b.dom = dom;
  b.cod = cod;
  b.comps.resize(n);
  b.m.dom_t = sb.t;
  b.m.cod_t = tb.t;
  b.m.components.resize(n);
  for (int c = 0; c < n; ++c) {
    std::string nn = add_nat(name + "_a" + std::to_string(c), m.components[c], sb.comps[c],
                             tb.comps[c]);
    b.comps[c] = nn;
    b.m.components[c] = doc_.nats[nat_info_.at(nn).block].nat;
  }
  internal_check(validate_modification(b.m).ok(), "relabeled modification is invalid");
  doc_.order.push_back({Document::BlockType::Mod, static_cast<int>(doc_.mods.size())});
  doc_.mods.push_back(std::move(b));
  return name;
}

}  // namespace catefs
