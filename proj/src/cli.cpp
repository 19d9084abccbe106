#include "maxaut/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "maxaut/arith.hpp"
#include "maxaut/autos.hpp"
#include "maxaut/dessin.hpp"
#include "maxaut/errors.hpp"
#include "maxaut/json_io.hpp"
#include "maxaut/oracle.hpp"
#include "maxaut/params.hpp"
#include "maxaut/pcgroup.hpp"
#include "maxaut/structure.hpp"

namespace maxaut::cli {
namespace {

using nlohmann::json;

// Routes the payload to --out when given, otherwise to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw InvalidArgs("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

int run_guarded(std::ostream& diag, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ResourceBudgetExceeded& e) {
    diag << "error: " << e.what() << '\n';
    return kExitBudgetExceeded;
  } catch (const NotPrime& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const MissingParameter& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ConditionViolated& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InvalidArgs& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const UnknownFormat& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const PreconditionViolated& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ArithmeticOverflow& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    // Remaining library errors describe a failed mathematical check.
    diag << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

std::pair<GroupParams, PcPresentation> load_group(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgs("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw InvalidArgs(std::string("malformed group file: ") + e.what());
  }
  return load_group_file(doc);
}

ConsistencyOptions consistency_options(const CommonOptions& common) {
  ConsistencyOptions opts;
  opts.max_order = common.enum_budget;
  opts.jobs = common.jobs;
  return opts;
}

void ensure_consistent(PcPresentation& P, const CommonOptions& common,
                       bool recheck, std::ostream& diag) {
  if (P.consistent && !recheck) return;
  auto res = check_consistency(P, consistency_options(common));
  if (!res.ok) {
    diag << "consistency check failed: " << res.detail << '\n';
    throw Error("presentation is not consistent: " + res.detail);
  }
}

}  // namespace

int cmd_build(const BuildArgs& args, const CommonOptions& common,
              std::ostream& out, std::ostream& diag) {
  return run_guarded(diag, [&]() -> int {
    GroupParams params =
        validate_params(family_from_name(args.family), args.p, args.a, args.b,
                        args.c, /*strict=*/!args.permissive);
    PcPresentation pres = build_presentation(params);
    auto res = check_consistency(pres, consistency_options(common));

    Sink sink(args.out, out);
    sink.stream() << group_file_json(params, pres).dump(2) << '\n';
    if (!res.ok) {
      diag << "consistency check failed: " << res.detail << '\n';
      return kExitVerificationFailed;
    }
    diag << "built " << family_name(params.family) << " of order "
         << to_decimal(expected_order(params)) << '\n';
    return kExitPass;
  });
}

int cmd_verify(const VerifyArgs& args, const CommonOptions& common,
               std::ostream& out, std::ostream& diag) {
  return run_guarded(diag, [&]() -> int {
    static const std::set<std::string> kWhichValues = {
        "max-aut", "table1", "table2", "table3", "quotient", "mi", "all"};
    if (!kWhichValues.count(args.which))
      throw InvalidArgs("unknown --which value: " + args.which);

    auto [params, pres] = load_group(args.in);
    ensure_consistent(pres, common, args.recheck, diag);

    const bool all = args.which == "all";
    const bool class3_strict = params.strict && family_is_class3(params.family);

    json checks = json::object();
    bool ok = true;
    auto record = [&](const std::string& name, bool pass, json payload) {
      payload["pass"] = pass;
      checks[name] = std::move(payload);
      ok = ok && pass;
    };

    // The automorphism count backs both max-aut and the mi cross-check, so
    // compute it once.
    AutReport aut;
    if (all || args.which == "max-aut" || args.which == "mi") {
      CountOptions copts;
      copts.max_order = common.enum_budget;
      copts.jobs = common.jobs;
      aut = automorphism_count(pres, copts, params);
    }

    if (all || args.which == "max-aut")
      record("max-aut", aut.is_maximally_automorphic, to_json(aut));

    if (all || args.which == "table1") {
      auto rep = table1_check(pres);
      record("table1", rep.pass, to_json(rep));
    }

    if (args.which == "table2" || (all && class3_strict)) {
      auto rep = verify_table2(params, common.enum_budget);
      record("table2", rep.match, to_json(rep));
    } else if (all) {
      checks["table2"] = {{"skipped", true},
                          {"reason", "strict class-three parameters only"}};
    }

    if (args.which == "table3" || (all && class3_strict)) {
      auto rep = verify_table3(params, common.enum_budget);
      record("table3", rep.match, to_json(rep));
    } else if (all) {
      checks["table3"] = {{"skipped", true},
                          {"reason", "strict class-three parameters only"}};
    }

    if (all || args.which == "quotient") {
      CountOptions copts;
      copts.max_order = common.enum_budget;
      copts.jobs = common.jobs;
      auto rep = quotient_check(params, copts);
      record("quotient", rep.pass, to_json(rep));
    }

    if (all || args.which == "mi") {
      const auto order = group_order_u64(pres);
      if (order > common.oracle_budget) {
        if (!all)
          throw ResourceBudgetExceeded(
              "mi check needs a Cayley table of size " + std::to_string(order) +
              " which exceeds the oracle budget of " +
              std::to_string(common.oracle_budget));
        checks["mi"] = {{"skipped", true},
                        {"reason", "order exceeds oracle budget"}};
      } else {
        auto cayley = to_cayley(pres, common.oracle_budget);
        auto rep = mi_check(cayley, pres.p);
        // A maximally automorphic group must have all maximal subgroups
        // isomorphic; for a non-maximal one the report is data only.
        bool pass = aut.is_maximally_automorphic ? rep.all_isomorphic : true;
        record("mi", pass, to_json(rep));
      }
    }

    json doc;
    doc["family"] = family_name(params.family);
    doc["checks"] = std::move(checks);
    doc["pass"] = ok;

    Sink sink(args.out, out);
    sink.stream() << doc.dump(2) << '\n';
    return ok ? kExitPass : kExitVerificationFailed;
  });
}

namespace {

std::vector<GroupParams> sweep_candidates(Family family, std::int64_t p,
                                          std::int64_t max_n) {
  std::vector<GroupParams> rows;
  const bool use_b = family_uses_b(family);
  const bool use_c = family_uses_c(family);
  for (std::int64_t a = 1; a <= max_n; ++a) {
    for (std::int64_t b = 1; b <= (use_b ? max_n : 1); ++b) {
      for (std::int64_t c = 1; c <= (use_c ? max_n : 1); ++c) {
        GroupParams params;
        try {
          params = validate_params(
              family, p, a, use_b ? std::optional<std::int64_t>(b) : std::nullopt,
              use_c ? std::optional<std::int64_t>(c) : std::nullopt,
              /*strict=*/true);
        } catch (const Error&) {
          continue;  // outside the family's parameter region
        }
        if (build_presentation(params).n_total > max_n) continue;
        rows.push_back(params);
      }
    }
  }
  return rows;
}

std::string join_type(const std::vector<std::int64_t>& t) {
  std::string s;
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (idx) s += 'x';
    s += std::to_string(t[idx]);
  }
  return s;
}

constexpr const char* kCsvHeader =
    "family,p,a,b,c,n,order,gen_pairs,aut_count,hall_bound,max_aut,"
    "g3_type,gprime_type,ab_type,type,genus,status";

}  // namespace

int cmd_sweep(const SweepArgs& args, const CommonOptions& common,
              std::ostream& out, std::ostream& diag) {
  return run_guarded(diag, [&]() -> int {
    if (args.format != "jsonl" && args.format != "csv")
      throw InvalidArgs("unknown sweep format: " + args.format);
    if (args.max_n < 1) throw InvalidArgs("--max-n must be at least 1");
    if (args.primes.empty()) throw InvalidArgs("at least one --p is required");

    std::vector<std::int64_t> primes = args.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto p : primes)
      if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");

    std::vector<Family> families;
    if (args.families.empty()) {
      families.assign(kClass3Families.begin(), kClass3Families.end());
    } else {
      for (const auto& name : args.families)
        families.push_back(family_from_name(name));
    }

    Sink sink(args.out, out);
    std::ostream& os = sink.stream();
    if (args.format == "csv") os << kCsvHeader << '\n';

    std::size_t emitted = 0;
    for (Family family : families) {
      for (auto p : primes) {
        for (const GroupParams& params : sweep_candidates(family, p,
                                                          args.max_n)) {
          PcPresentation pres = build_presentation(params);
          json row;
          row["family"] = family_name(params.family);
          row["p"] = params.p;
          row["a"] = params.a;
          if (params.b) row["b"] = *params.b;
          if (params.c) row["c"] = *params.c;
          row["n"] = pres.n_total;
          row["order"] = to_decimal(expected_order(params));
          row["hall_bound"] = to_decimal(hall_bound(params.p, pres.n_total, 2));

          const auto order = group_order_u64(pres);
          if (order > common.enum_budget) {
            row["status"] = "budget";
          } else {
            auto res = check_consistency(pres, consistency_options(common));
            if (!res.ok) {
              row["status"] = "inconsistent";
            } else {
              CountOptions copts;
              copts.max_order = common.enum_budget;
              copts.jobs = common.jobs;
              AutReport aut = automorphism_count(pres, copts, params);
              row["gen_pairs"] = to_decimal(aut.generating_pair_count);
              row["aut_count"] = to_decimal(aut.relation_satisfying_count);
              row["max_aut"] = aut.is_maximally_automorphic;
              auto lcs = lower_central_series(pres, common.enum_budget);
              if (lcs.size() >= 3) row["gprime_type"] = abelian_type(lcs[1]);
              if (lcs.size() >= 4) row["g3_type"] = abelian_type(lcs[2]);
              row["ab_type"] = abelianization_type(pres);
              auto [map, report] = combinatorial_map(pres, common.enum_budget);
              (void)map;
              row["type"] = report.type;
              row["genus"] = std::to_string(report.genus);
              row["status"] = "ok";
            }
          }

          if (args.format == "jsonl") {
            os << row.dump() << '\n';
          } else {
            auto cell = [&](const char* key) -> std::string {
              if (!row.contains(key)) return "";
              const json& v = row[key];
              if (v.is_string()) return v.get<std::string>();
              if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
              if (v.is_array()) {
                std::vector<std::int64_t> t;
                for (const auto& x : v) t.push_back(x.get<std::int64_t>());
                return join_type(t);
              }
              return std::to_string(v.get<std::int64_t>());
            };
            os << cell("family") << ',' << cell("p") << ',' << cell("a") << ','
               << cell("b") << ',' << cell("c") << ',' << cell("n") << ','
               << cell("order") << ',' << cell("gen_pairs") << ','
               << cell("aut_count") << ',' << cell("hall_bound") << ','
               << cell("max_aut") << ',' << cell("g3_type") << ','
               << cell("gprime_type") << ',' << cell("ab_type") << ','
               << cell("type") << ',' << cell("genus") << ','
               << cell("status") << '\n';
          }
          ++emitted;
        }
      }
    }
    diag << "sweep emitted " << emitted << " rows\n";
    return kExitPass;
  });
}

int cmd_dessin(const DessinArgs& args, const CommonOptions& common,
               std::ostream& out, std::ostream& diag) {
  return run_guarded(diag, [&]() -> int {
    auto [params, pres] = load_group(args.in);
    ensure_consistent(pres, common, /*recheck=*/false, diag);

    auto [map, report] = combinatorial_map(pres, common.enum_budget);

    if (!args.emit_map.empty()) {
      std::ofstream f(args.emit_map, std::ios::binary | std::ios::trunc);
      if (!f) throw InvalidArgs("cannot open output file: " + args.emit_map);
      f << export_map(map, "json") << '\n';
    }
    if (!args.dot.empty()) {
      std::ofstream f(args.dot, std::ios::binary | std::ios::trunc);
      if (!f) throw InvalidArgs("cannot open output file: " + args.dot);
      f << export_map(map, "dot");
    }

    json doc = to_json(report);
    doc["family"] = family_name(params.family);

    Sink sink(args.out, out);
    sink.stream() << doc.dump(2) << '\n';
    return kExitPass;
  });
}

}  // namespace maxaut::cli
