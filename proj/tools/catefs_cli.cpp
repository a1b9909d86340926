#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "catefs/efs.hpp"
#include "catefs/errors.hpp"
#include "catefs/gen.hpp"
#include "catefs/lift.hpp"
#include "catefs/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw catefs::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw catefs::Error("cannot open '" + out_path + "' for writing");
  out << text;
}

void summary(const std::string& sub, int pass, int fail, std::uint64_t seed) {
  std::cout << "RESULT " << sub << " pass=" << pass << " fail=" << fail << " seed=" << seed
            << "\n";
}

template <typename T>
const T& require(const T* p, const std::string& kind, const std::string& name) {
  if (!p) throw catefs::ValidationError(name, "no " + kind + " block with this name");
  return *p;
}

int cmd_validate(const std::string& file) {
  catefs::Document doc = catefs::parse(read_file(file));
  summary("validate", static_cast<int>(doc.order.size()), 0, 0);
  return kExitOk;
}

int cmd_factor(const std::string& file, const std::string& fun_name,
               const std::string& out_path) {
  catefs::Document doc = catefs::parse(read_file(file));
  const catefs::FunBlock& fb = require(doc.find_fun(fun_name), "functor", fun_name);
  catefs::Factorization fact = catefs::factor_bo_ff(fb.fun);
  catefs::DocBuilder b;
  b.add_cat(fun_name + "_dom", fb.fun.dom);
  b.add_cat(fun_name + "_mid", fact.mid);
  b.add_cat(fun_name + "_cod", fb.fun.cod);
  b.add_fun(fun_name + "_bo", fact.bo, fun_name + "_dom", fun_name + "_mid");
  b.add_fun(fun_name + "_ff", fact.ff, fun_name + "_mid", fun_name + "_cod");
  write_output(catefs::render(b.doc()), out_path);
  summary("factor", 1, 0, 0);
  return kExitOk;
}

int cmd_fill(const std::string& file, const std::string& eps, const std::string& mu,
             const std::string& alpha, const std::string& alpha_prime, const std::string& psi,
             const std::string& out_path) {
  catefs::Document doc = catefs::parse(read_file(file));
  catefs::FillSquare sq;
  sq.eps = require(doc.find_fun(eps), "functor", eps).fun;
  sq.mu = require(doc.find_fun(mu), "functor", mu).fun;
  sq.alpha = require(doc.find_fun(alpha), "functor", alpha).fun;
  sq.alpha_prime = require(doc.find_fun(alpha_prime), "functor", alpha_prime).fun;
  sq.psi = require(doc.find_nat(psi), "transformation", psi).nat;
  catefs::Report r = catefs::validate_fill_square(sq);
  if (!r.ok()) throw catefs::ValidationError(psi, r.to_string());
  catefs::FillResult res = catefs::diagonal_fill(sq);
  catefs::DocBuilder b;
  b.add_cat("Fp", sq.eps.cod);
  b.add_cat("G", sq.mu.dom);
  b.add_cat("Gp", sq.mu.cod);
  b.add_fun("delta", res.delta, "Fp", "G");
  b.add_fun("alpha_prime", sq.alpha_prime, "Fp", "Gp");
  b.add_fun("mu_delta", catefs::compose_functors(sq.mu, res.delta), "Fp", "Gp");
  b.add_nat("psi_tilde", res.psi_tilde, "alpha_prime", "mu_delta");
  write_output(catefs::render(b.doc()), out_path);
  summary("fill", 1, 0, 0);
  return kExitOk;
}

int cmd_lift_factor(const std::string& file, const std::string& nat_name,
                    const std::string& out_path) {
  catefs::Document doc = catefs::parse(read_file(file));
  const catefs::TwoNatBlock& nb =
      require(doc.find_two_nat(nat_name), "2-natural transformation", nat_name);
  catefs::LevelwiseFactorization lf = catefs::levelwise_factor(nb.t);
  catefs::DocBuilder b;
  b.add_two_cat(nat_name + "_base", nb.t.dom_f.dom);
  b.add_two_fun(nat_name + "_dom", nb.t.dom_f, nat_name + "_base");
  b.add_two_fun(nat_name + "_mid", lf.mid, nat_name + "_base");
  b.add_two_fun(nat_name + "_cod", nb.t.cod_f, nat_name + "_base");
  b.add_two_nat(nat_name + "_bo", lf.eps, nat_name + "_dom", nat_name + "_mid");
  b.add_two_nat(nat_name + "_ff", lf.mu, nat_name + "_mid", nat_name + "_cod");
  write_output(catefs::render(b.doc()), out_path);
  summary("lift-factor", 1, 0, 0);
  return kExitOk;
}

int cmd_check_axioms(std::uint64_t seed, int cases, const std::string& shape,
                     int max_objects, int max_morphisms) {
  catefs::GenParams params;
  params.max_objects = max_objects;
  params.max_morphisms = max_morphisms;
  catefs::Rng rng(seed);
  catefs::GeneratedTwoCat shape_tc = catefs::named_two_cat(shape, rng, params);
  catefs::Report r = catefs::check_lifted_efs(shape_tc, seed, cases, params);
  std::set<std::string> failed_cases;
  for (const auto& v : r.violations) {
    std::size_t colon = v.detail.find(':');
    failed_cases.insert(colon == std::string::npos ? v.detail : v.detail.substr(0, colon));
    std::cerr << v.code << ": " << v.detail << "\n";
  }
  int fail = static_cast<int>(failed_cases.size());
  summary("check-axioms", cases - fail, fail, seed);
  return fail == 0 ? kExitOk : kExitValidation;
}

const std::set<std::string> kShapes = {
    "terminal",       "discrete-3",        "walking-arrow",
    "walking-2cell",  "composable-pair",   "composable-2cells",
    "locally-discrete-random", "one-object-monoid", "product"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization-system toolkit for finite categorical data"};
  app.require_subcommand(1);

  std::string file, fun_name, nat_name, out_path;
  std::string eps, mu, alpha, alpha_prime, psi;
  std::uint64_t seed = 0;
  int cases = 100;
  std::string shape = "walking-arrow";
  int max_objects = 4;
  int max_morphisms = 12;

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate a file");
  validate->add_option("file", file)->required();

  CLI::App* factor =
      app.add_subcommand("factor", "Factor a functor as bijective-on-objects then fully faithful");
  factor->add_option("--functor", fun_name)->required();
  factor->add_option("file", file)->required();
  factor->add_option("--out", out_path);

  CLI::App* fill = app.add_subcommand("fill", "Produce the unique diagonal of a fill square");
  fill->add_option("--eps", eps)->required();
  fill->add_option("--mu", mu)->required();
  fill->add_option("--alpha", alpha)->required();
  fill->add_option("--alpha-prime", alpha_prime)->required();
  fill->add_option("--psi", psi)->required();
  fill->add_option("file", file)->required();
  fill->add_option("--out", out_path);

  CLI::App* lift = app.add_subcommand(
      "lift-factor", "Factor a 2-natural transformation through its interpolating 2-functor");
  lift->add_option("--two-nat", nat_name)->required();
  lift->add_option("file", file)->required();
  lift->add_option("--out", out_path);

  CLI::App* check = app.add_subcommand("check-axioms",
                                       "Run the randomized factorization-system harness");
  check->add_option("--seed", seed);
  check->add_option("--cases", cases);
  check->add_option("--shape", shape);
  check->add_option("--max-objects", max_objects);
  check->add_option("--max-morphisms", max_morphisms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file);
    if (app.got_subcommand(factor)) return cmd_factor(file, fun_name, out_path);
    if (app.got_subcommand(fill))
      return cmd_fill(file, eps, mu, alpha, alpha_prime, psi, out_path);
    if (app.got_subcommand(lift)) return cmd_lift_factor(file, nat_name, out_path);
    if (app.got_subcommand(check)) {
      if (!kShapes.count(shape)) {
        std::cerr << "unknown shape '" << shape << "'\n";
        return kExitUsage;
      }
      return cmd_check_axioms(seed, cases, shape, max_objects, max_morphisms);
    }
  } catch (const catefs::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const catefs::InternalCheckFailure& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const catefs::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
