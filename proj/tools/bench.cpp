#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "catefs/enumerate.hpp"
#include "catefs/gen.hpp"
#include "catefs/lift.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double run_harness(const catefs::GeneratedTwoCat& shape, std::uint64_t seed, int cases,
                   const catefs::GenParams& p) {
  auto t0 = Clock::now();
  catefs::Report r = catefs::check_lifted_efs(shape, seed, cases, p);
  double dt = seconds_since(t0);
  if (!r.ok()) std::fprintf(stderr, "%s", r.to_string().c_str());
  return dt;
}

double run_enumeration(std::uint64_t seed, int cases, const catefs::GenParams& p) {
  auto t0 = Clock::now();
  for (int i = 0; i < cases; ++i) {
    catefs::Rng rng(seed ^ (static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL));
    catefs::GeneratedCat dom = catefs::gen_fincat(rng, p);
    catefs::GeneratedCat cod = catefs::gen_fincat(rng, p);
    (void)catefs::enumerate_functors(dom.cat, cod.cat, 2000000);
  }
  return seconds_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel timing of the enumeration and harness kernels"};
  std::uint64_t seed = 0;
  int cases = 100;
  std::string shape = "walking-2cell";
  app.add_option("--seed", seed);
  app.add_option("--cases", cases);
  app.add_option("--shape", shape);
  CLI11_PARSE(app, argc, argv);

  catefs::GenParams p;
  catefs::Rng rng(seed);
  catefs::GeneratedTwoCat tc = catefs::named_two_cat(shape, rng, p);

  catefs::set_parallel(false);
  double h_serial = run_harness(tc, seed, cases, p);
  double e_serial = run_enumeration(seed, cases, p);
  catefs::set_parallel(true);
  double h_par = run_harness(tc, seed, cases, p);
  double e_par = run_enumeration(seed, cases, p);

  std::printf("kernel            serial[s]  parallel[s]  speedup\n");
  std::printf("harness %-9s %9.3f  %11.3f  %7.2f\n", shape.c_str(), h_serial, h_par,
              h_par > 0 ? h_serial / h_par : 0.0);
  std::printf("enumeration       %9.3f  %11.3f  %7.2f\n", e_serial, e_par,
              e_par > 0 ? e_serial / e_par : 0.0);
  return 0;
}
