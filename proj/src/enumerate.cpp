#include "catefs/enumerate.hpp"

#include <algorithm>
#include <atomic>

#ifdef CATEFS_HAVE_OPENMP
#include <omp.h>
#endif

namespace catefs {

namespace {

bool g_parallel = true;

/// Checks every fully assigned composition constraint touching morphism u.
bool consistent_at(const FinCat& dom, const FinCat& cod,
                   const std::vector<MorId>& mor_map, MorId u) {
  const int m = dom.morphisms();
  for (MorId g = 0; g < m; ++g) {
    if (mor_map[g] == kNoMor) continue;
    for (MorId f = 0; f < m; ++f) {
      if (mor_map[f] == kNoMor || !dom.composable(g, f)) continue;
      MorId h = dom.compose(g, f);
      if (mor_map[h] == kNoMor) continue;
      if (g != u && f != u && h != u) continue;
      if (cod.table(mor_map[g], mor_map[f]) != mor_map[h]) return false;
    }
  }
  return true;
}

struct Search {
  const FinCat& dom;
  const FinCat& cod;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
  std::vector<MorId> todo;  // non-identity morphisms in assignment order
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;

  Search(const FinCat& d, const FinCat& c) : dom(d), cod(c) {
    for (MorId u = 0; u < dom.morphisms(); ++u)
      if (!dom.is_identity(u)) todo.push_back(u);
  }

  void seed_identities() {
    mor_map.assign(dom.morphisms(), kNoMor);
    for (ObjId x = 0; x < dom.objects(); ++x)
      mor_map[dom.identity(x)] = cod.identity(obj_map[x]);
  }

  bool spend() {
    ++nodes;
    return budget == 0 || nodes <= budget;
  }
};

void enumerate_rest(Search& s, std::size_t k, std::vector<FinFunctor>& out) {
  if (!s.spend()) throw Error("enumerate_functors: node budget exhausted");
  if (k == s.todo.size()) {
    FinFunctor f;
    f.dom = s.dom;
    f.cod = s.cod;
    f.obj_map = s.obj_map;
    f.mor_map = s.mor_map;
    out.push_back(std::move(f));
    return;
  }
  MorId u = s.todo[k];
  for (MorId v : s.cod.hom(s.obj_map[s.dom.src(u)], s.obj_map[s.dom.tgt(u)])) {
    s.mor_map[u] = v;
    if (consistent_at(s.dom, s.cod, s.mor_map, u)) enumerate_rest(s, k + 1, out);
    s.mor_map[u] = kNoMor;
  }
}

std::vector<FinFunctor> enumerate_for_obj_map(const FinCat& dom, const FinCat& cod,
                                              std::vector<ObjId> obj_map,
                                              std::uint64_t budget) {
  Search s(dom, cod);
  s.obj_map = std::move(obj_map);
  s.budget = budget;
  s.seed_identities();
  std::vector<FinFunctor> out;
  enumerate_rest(s, 0, out);
  return out;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<ObjId> decode_obj_map(std::uint64_t index, int n_dom, int n_cod) {
  std::vector<ObjId> m(n_dom);
  for (int x = 0; x < n_dom; ++x) {
    m[x] = static_cast<ObjId>(index % n_cod);
    index /= n_cod;
  }
  return m;
}

}  // namespace

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

std::vector<FinFunctor> enumerate_functors(const FinCat& dom, const FinCat& cod,
                                           std::uint64_t node_budget) {
  if (dom.objects() == 0) {
    FinFunctor f;
    f.dom = dom;
    f.cod = cod;
    return {f};
  }
  if (cod.objects() == 0) return {};
  const std::uint64_t count = pow_u64(cod.objects(), dom.objects());
  std::vector<std::vector<FinFunctor>> buckets(count);
#ifdef CATEFS_HAVE_OPENMP
  if (g_parallel && count > 1) {
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        buckets[i] = enumerate_for_obj_map(
            dom, cod, decode_obj_map(i, dom.objects(), cod.objects()), node_budget);
      } catch (const Error&) {
        failed.store(true, std::memory_order_relaxed);
      }
    }
    if (failed) throw Error("enumerate_functors: node budget exhausted");
  } else
#endif
  {
    for (std::uint64_t i = 0; i < count; ++i)
      buckets[i] = enumerate_for_obj_map(
          dom, cod, decode_obj_map(i, dom.objects(), cod.objects()), node_budget);
  }
  std::vector<FinFunctor> out;
  for (auto& b : buckets)
    for (auto& f : b) out.push_back(std::move(f));
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw BoundaryMismatch("enumerate_nat_trans: functors not parallel");
  const int n = f.dom.objects();
  std::vector<std::vector<MorId>> choices(n);
  for (ObjId c = 0; c < n; ++c) {
    choices[c] = f.cod.hom(f.obj_map[c], g.obj_map[c]);
    if (choices[c].empty()) return {};
  }
  std::vector<NatTrans> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    NatTrans a;
    a.dom_f = f;
    a.cod_f = g;
    a.components.resize(n);
    for (ObjId c = 0; c < n; ++c) a.components[c] = choices[c][idx[c]];
    if (validate_nat(a).ok()) out.push_back(std::move(a));
    int c = 0;
    for (; c < n; ++c) {
      if (++idx[c] < choices[c].size()) break;
      idx[c] = 0;
    }
    if (c == n) break;
  }
  return out;
}

namespace {

bool find_rest(Search& s, std::size_t k, const std::function<std::uint64_t()>& pick,
               FinFunctor& out) {
  if (!s.spend()) return false;
  if (k == s.todo.size()) {
    out.dom = s.dom;
    out.cod = s.cod;
    out.obj_map = s.obj_map;
    out.mor_map = s.mor_map;
    return true;
  }
  MorId u = s.todo[k];
  auto options = s.cod.hom(s.obj_map[s.dom.src(u)], s.obj_map[s.dom.tgt(u)]);
  // random rotation keeps the search deterministic under the pick stream
  if (options.size() > 1)
    std::rotate(options.begin(), options.begin() + pick() % options.size(), options.end());
  for (MorId v : options) {
    s.mor_map[u] = v;
    if (consistent_at(s.dom, s.cod, s.mor_map, u) && find_rest(s, k + 1, pick, out)) return true;
    s.mor_map[u] = kNoMor;
  }
  return false;
}

}  // namespace

std::optional<FinFunctor> find_functor(const FinCat& dom, const FinCat& cod,
                                       const std::function<std::uint64_t()>& pick,
                                       std::uint64_t node_budget) {
  if (dom.objects() == 0) {
    FinFunctor f;
    f.dom = dom;
    f.cod = cod;
    return f;
  }
  if (cod.objects() == 0) return std::nullopt;
  Search s(dom, cod);
  s.budget = node_budget;
  // several random object assignments, then a sweep of all of them
  const std::uint64_t total = pow_u64(cod.objects(), dom.objects());
  std::vector<std::uint64_t> order;
  for (int t = 0; t < 16; ++t) order.push_back(pick() % total);
  for (std::uint64_t i = 0; i < total && i < 4096; ++i) order.push_back(i);
  for (std::uint64_t i : order) {
    s.obj_map = decode_obj_map(i, dom.objects(), cod.objects());
    s.seed_identities();
    s.nodes = 0;
    FinFunctor out;
    if (find_rest(s, 0, pick, out)) return out;
  }
  return std::nullopt;
}

}  // namespace catefs
