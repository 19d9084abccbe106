#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "maxaut/cli.hpp"

namespace {

std::uint64_t env_budget(std::uint64_t fallback) {
  if (const char* s = std::getenv("MAXAUT_BUDGET")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(s, &pos);
      if (pos == std::string(s).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed MAXAUT_BUDGET value\n";
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace maxaut::cli;

  CLI::App app{
      "maxaut: exact construction and verification of two-generator "
      "p-groups of nilpotency class at most three, their automorphism "
      "counts and their regular bipartite maps"};
  app.require_subcommand(1);

  CommonOptions common;
  common.enum_budget = env_budget(common.enum_budget);
  app.add_option("--budget", common.enum_budget,
                 "largest group order enumerated (env MAXAUT_BUDGET)")
      ->capture_default_str();
  app.add_option("--oracle-budget", common.oracle_budget,
                 "largest order for Cayley-table cross checks")
      ->capture_default_str();
  app.add_option("--jobs", common.jobs, "worker threads for enumerations")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  // let the global budget/jobs flags appear after a subcommand name too
  app.fallthrough();

  auto* build = app.add_subcommand(
      "build", "construct a catalog member and write its group file");
  BuildArgs bargs;
  build->add_option("--family", bargs.family, "catalog family name")
      ->required();
  build->add_option("--p", bargs.p, "prime")->required();
  build->add_option("--a", bargs.a, "exponent a")->required();
  build->add_option("--b", bargs.b, "exponent b (families that use it)");
  build->add_option("--c", bargs.c, "exponent c (families that use it)");
  build->add_flag("--permissive", bargs.permissive,
                  "skip the family side conditions (negative controls)");
  build->add_option("--out", bargs.out, "output path (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "run the verification suite on a group file");
  VerifyArgs vargs;
  verify->add_option("--in", vargs.in, "group file written by build")
      ->required();
  verify
      ->add_option("--which", vargs.which,
                   "max-aut | table1 | table2 | table3 | quotient | mi | all")
      ->check(CLI::IsMember({"max-aut", "table1", "table2", "table3",
                             "quotient", "mi", "all"}))
      ->capture_default_str();
  verify->add_flag("--recheck", vargs.recheck,
                   "redo the consistency check instead of trusting the file");
  verify->add_option("--out", vargs.out, "report path (default stdout)");

  auto* sweep = app.add_subcommand(
      "sweep", "tabulate families across a parameter range");
  SweepArgs sargs;
  sweep->add_option("--p", sargs.primes, "prime (repeatable)")->required();
  sweep->add_option("--max-n", sargs.max_n, "largest log_p of the order")
      ->required();
  sweep->add_option("--family", sargs.families,
                    "family name (repeatable; default: the six class-three "
                    "families)");
  sweep->add_option("--format", sargs.format, "jsonl | csv")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  sweep->add_option("--out", sargs.out, "output path (default stdout)");

  auto* dessin = app.add_subcommand(
      "dessin", "compute the regular bipartite map of a group file");
  DessinArgs dargs;
  dessin->add_option("--in", dargs.in, "group file written by build")
      ->required();
  dessin->add_option("--emit-map", dargs.emit_map,
                     "write the rotation data as JSON to this path");
  dessin->add_option("--dot", dargs.dot,
                     "write the bipartite graph in dot format to this path");
  dessin->add_option("--out", dargs.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }

  if (build->parsed()) return cmd_build(bargs, common, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(vargs, common, std::cout, std::cerr);
  if (sweep->parsed()) return cmd_sweep(sargs, common, std::cout, std::cerr);
  if (dessin->parsed()) return cmd_dessin(dargs, common, std::cout, std::cerr);
  return kExitInvalidInput;
}
