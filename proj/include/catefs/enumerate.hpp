#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "catefs/fincat.hpp"

namespace catefs {

/// Process-wide switch between the serial and the OpenMP code paths of the
/// enumeration and harness kernels.  Results are identical either way; the
/// serial path is the reference implementation.
void set_parallel(bool on);
bool parallel_enabled();

/// All functors dom -> cod, by backtracking over object assignments and
/// morphism images with eager composition checks.  Deterministic order.
/// node_budget caps the search (0 = unlimited); the cap is generous for the
/// instance sizes used here and overruns raise Error.
std::vector<FinFunctor> enumerate_functors(const FinCat& dom, const FinCat& cod,
                                           std::uint64_t node_budget = 0);

/// All natural transformations f => g for parallel functors f, g.
std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g);

/// A single functor dom -> cod found by randomized backtracking, if any.
/// The order in which candidates are tried is driven by `pick`, a callback
/// returning a pseudo-random value; pass the same stream to reproduce.
std::optional<FinFunctor> find_functor(const FinCat& dom, const FinCat& cod,
                                       const std::function<std::uint64_t()>& pick,
                                       std::uint64_t node_budget = 200000);

}  // namespace catefs
