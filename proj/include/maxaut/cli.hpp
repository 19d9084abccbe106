#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace maxaut::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudgetExceeded = 3;

struct CommonOptions {
  std::uint64_t enum_budget = 3125;   // pair-enumeration / map budget on |G|
  std::uint64_t oracle_budget = 512;  // Cayley-table budget on |G|
  int jobs = 1;
};

struct BuildArgs {
  std::string family;
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::optional<std::int64_t> b, c;
  bool permissive = false;
  std::string out;  // empty = stdout
};

struct VerifyArgs {
  std::string in;
  std::string which = "all";  // max-aut | table1 | table2 | table3 | quotient | mi | all
  bool recheck = false;
  std::string out;
};

struct SweepArgs {
  std::vector<std::int64_t> primes;
  std::int64_t max_n = 0;
  std::vector<std::string> families;  // default: the six class-three families
  std::string format = "jsonl";       // jsonl | csv
  std::string out;
};

struct DessinArgs {
  std::string in;
  std::string emit_map;  // optional output path for the rotation data
  std::string dot;       // optional output path for the bipartite graph
  std::string out;
};

// Payload goes to args.out (or `out` when empty); progress and errors to
// diag.  Payload bytes carry no timestamps or timings, so identical inputs
// give identical files.
int cmd_build(const BuildArgs& args, const CommonOptions& common,
              std::ostream& out, std::ostream& diag);
int cmd_verify(const VerifyArgs& args, const CommonOptions& common,
               std::ostream& out, std::ostream& diag);
int cmd_sweep(const SweepArgs& args, const CommonOptions& common,
              std::ostream& out, std::ostream& diag);
int cmd_dessin(const DessinArgs& args, const CommonOptions& common,
               std::ostream& out, std::ostream& diag);

}  // namespace maxaut::cli
