// Copyright 2026 The Carmichael Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// carmichael: command-line front end. Every subcommand writes JSON lines to
// --out (stdout by default). Exit codes: 0 claim verified or found, 1 claim
// refuted, 2 usage error, 3 resource or effort ceiling.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "carmichael/fixtures.hpp"
#include "carmichael/json_io.hpp"
#include "carmichael/mitm.hpp"
#include "carmichael/nonrigid.hpp"
#include "carmichael/oracle.hpp"
#include "carmichael/pool.hpp"
#include "carmichael/reproduce.hpp"
#include "carmichael/run_log.hpp"

namespace {

using namespace carmichael;

enum Exit { kVerified = 0, kRefuted = 1, kUsage = 2, kCeiling = 3 };

struct Globals {
  std::optional<unsigned> threads;
  std::string out_path;
  std::string run_log;
  bool progress = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::app);
      if (!*file_) throw ValidationError("cannot open " + path + " for writing");
    }
  }
  void line(const Json& j) {
    std::ostream& os = file_ ? *file_ : std::cout;
    os << j.dump() << '\n';
    os.flush();
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

unsigned resolve_threads(const Globals& g) {
  if (g.threads) return std::max(1u, *g.threads);
  if (const char* env = std::getenv("CARMICHAEL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("CARMICHAEL_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string resolve_run_log(const Globals& g) {
  if (!g.run_log.empty()) return g.run_log;
  if (const char* env = std::getenv("CARMICHAEL_RUN_LOG")) return env;
  return "carmichael-runs.jsonl";
}

bool looks_factored(const std::string& s) { return s.find_first_of("^*") != std::string::npos; }

// A decimal is factored here; FactorizationIncomplete propagates.
FactoredNat read_number(const std::string& s) { return looks_factored(s) ? parse_factorization(s) : factor(parse_nat(s)); }

// Logs one search or census run around `body`.
class RunScope {
 public:
  RunScope(const Globals& g, std::string command, std::map<std::string, std::string> params)
      : path_(resolve_run_log(g)) {
    rec_.command = std::move(command);
    rec_.parameters = std::move(params);
    rec_.started = utc_timestamp();
    rec_.version = toolkit_version();
  }
  void finish(Json summary) {
    rec_.finished = utc_timestamp();
    rec_.summary = std::move(summary);
    append_run_record(path_, rec_);
  }

 private:
  std::string path_;
  RunRecord rec_;
};

std::function<void(std::size_t, std::size_t)> progress_printer(const Globals& g) {
  if (!g.progress) return {};
  return [](std::size_t done, std::size_t total) {
    std::cerr << "\rsweep blocks " << done << "/" << total << std::flush;
    if (done == total) std::cerr << '\n';
  };
}

PartitionStrategy read_strategy(const std::string& kind, const std::vector<unsigned>& sizes, unsigned table_bits) {
  PartitionStrategy s;
  s.kind = partition_kind_from_string(kind);
  s.table_bits = table_bits;
  if (!sizes.empty()) {
    if (sizes.size() != 3) throw ValidationError("--sizes takes three block sizes a,b,c");
    s.sizes = std::array<unsigned, 3>{sizes[0], sizes[1], sizes[2]};
  }
  return s;
}

Json census_summary(const CensusResult& c) {
  Json j = c;
  j.erase("hits");
  j["record"] = "census-summary";
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carmichael numbers of higher order: verification, prime pools and subset-product search"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (default: CARMICHAEL_THREADS, then all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "Append JSON lines to this file instead of stdout");
  app.add_option("--run-log", g.run_log, "Run log (default: CARMICHAEL_RUN_LOG, then ./carmichael-runs.jsonl)");
  app.add_flag("--progress", g.progress, "Report sweep progress on stderr");

  // verify
  auto* verify = app.add_subcommand("verify", "Decide whether n is a (rigid) Carmichael number of order m");
  std::string verify_n;
  unsigned verify_order = 1;
  bool verify_rigid = false;
  verify->add_option("n", verify_n, "Decimal integer or factorization such as 3*11*17")->required();
  verify->add_option("--order,-m", verify_order, "Order m")->check(CLI::PositiveNumber);
  verify->add_flag("--rigid", verify_rigid, "Require a rigid Carmichael number");

  // pool
  auto* pool = app.add_subcommand("pool", "List P(m, L) and the fecundity of L");
  std::string pool_modulus;
  unsigned pool_order = 2;
  pool->add_option("--modulus,-L", pool_modulus, "L as a decimal or factorization")->required();
  pool->add_option("--order,-m", pool_order, "Order m")->check(CLI::PositiveNumber);

  // fecundity-scan
  auto* scan = app.add_subcommand("fecundity-scan", "Rank smooth moduli L by fecundity");
  ScanOptions scan_opts;
  std::vector<std::string> scan_caps;
  scan->add_option("--prime-bound", scan_opts.prime_bound, "Largest prime allowed in L (<= 100)");
  scan->add_option("--cap", scan_caps, "Exponent cap p=e (repeatable)");
  scan->add_option("--default-cap", scan_opts.default_cap, "Exponent cap for unlisted primes");
  scan->add_option("--bound", scan_opts.modulus_bound, "Upper bound on L")->required();
  scan->add_option("--order,-m", scan_opts.order, "Order m")->check(CLI::PositiveNumber);
  scan->add_option("--top", scan_opts.top_k, "Records to keep");
  scan->add_option("--max-candidates", scan_opts.max_candidates, "Enumeration ceiling");

  // search
  auto* search = app.add_subcommand("search", "Enumerate subsets of P(m, L) with product = target (mod L)");
  std::string search_modulus, search_kind = "sorted";
  unsigned search_order = 2, search_bits = 20;
  std::vector<unsigned> search_sizes;
  std::string search_target = "1";
  std::size_t search_min = 2;
  std::optional<std::size_t> search_expect;
  std::string search_checkpoint;
  bool no_pruning = false;
  double memory_gib = 3;
  search->add_option("--modulus,-L", search_modulus, "L as a decimal or factorization")->required();
  search->add_option("--order,-m", search_order, "Order m")->check(CLI::PositiveNumber);
  search->add_option("--strategy", search_kind, "Partition: sorted, balanced or qr5");
  search->add_option("--sizes", search_sizes, "Block sizes a,b,c")->delimiter(',');
  search->add_option("--table-bits", search_bits, "Largest table block when --sizes is absent");
  search->add_option("--target", search_target, "Target residue (1 gives the rigid census)");
  search->add_option("--min-size", search_min, "Smallest subset size reported");
  search->add_option("--expect", search_expect, "Exit 0 only when exactly this many hits are found");
  search->add_option("--checkpoint", search_checkpoint, "Resumable progress file");
  search->add_flag("--no-character-pruning", no_pruning, "Disable the quadratic-character sweep filter");
  search->add_option("--memory-gib", memory_gib, "Table memory budget in GiB");

  // search-nonrigid
  auto* nonrigid = app.add_subcommand("search-nonrigid", "Enumerate C(2, L0, p0)");
  std::string nr_l0, nr_p0, nr_kind = "qr5", nr_resume;
  std::vector<unsigned> nr_sizes;
  std::vector<std::string> nr_members;
  bool nr_verify_only = false;
  std::optional<std::size_t> nr_expect;
  nonrigid->add_option("--l0", nr_l0, "L0 as a decimal or factorization")->required();
  nonrigid->add_option("--p0", nr_p0, "The distinguished prime p0")->required();
  nonrigid->add_option("--strategy", nr_kind, "Partition: sorted, balanced or qr5");
  nonrigid->add_option("--sizes", nr_sizes, "Block sizes a,b,c")->delimiter(',');
  nonrigid->add_flag("--verify-only", nr_verify_only, "Check known members instead of searching");
  nonrigid->add_option("--member", nr_members, "Candidate member to check with --verify-only (repeatable)");
  nonrigid->add_option("--resume", nr_resume, "Resumable progress file");
  nonrigid->add_option("--expect", nr_expect, "Exit 0 only when exactly this many members are found");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Probe x -> x^n for additivity in fields and quotient rings");
  std::string oracle_n;
  unsigned oracle_order = 2;
  AgreementOptions agree;
  oracle->add_option("--n", oracle_n, "Decimal integer or factorization")->required();
  oracle->add_option("--order,-m", oracle_order, "Order m")->check(CLI::PositiveNumber);
  oracle->add_option("--trials", agree.field_trials, "Random pairs per ring");
  oracle->add_option("--rings", agree.quotient_rings, "Quotient rings to probe");
  oracle->add_option("--seed", agree.seed, "Random seed");

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Recompute a published number and compare");
  std::string repro_target;
  bool allow_long = false;
  std::vector<std::string> names{"all"};
  for (const auto& t : reproduce_targets()) names.push_back(t.name);
  repro->add_option("target", repro_target, "Target name")->required()->check(CLI::IsMember(names));
  repro->add_flag("--allow-long", allow_long, "Permit long-running targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kVerified : kUsage;
  }

  try {
    Output out(g.out_path);

    if (*verify) {
      FactoredNat n;
      try {
        n = read_number(verify_n);
      } catch (const FactorizationIncomplete& e) {
        Json unfactored = Json::array();
        for (const auto& u : e.unfactored()) unfactored.push_back(u.get_str());
        out.line(Json{{"record", "factorization-incomplete"},
                      {"input", verify_n},
                      {"partial", e.partial()},
                      {"unfactored", unfactored}});
        return kCeiling;
      }
      const KorseltReport report = check_order(n, verify_order);
      out.line(report);
      const bool ok = verify_rigid ? report.verdict == Verdict::RigidCarmichaelOfOrder : report.carmichael();
      return ok ? kVerified : kRefuted;
    }

    if (*pool) {
      const FactoredNat L = read_number(pool_modulus);
      out.line(prime_pool(pool_order, L));
      out.line(fecundity(L, pool_order));
      return kVerified;
    }

    if (*scan) {
      for (const auto& c : scan_caps) {
        const auto eq = c.find('=');
        if (eq == std::string::npos) throw ValidationError("--cap expects p=e, got '" + c + "'");
        scan_opts.caps[std::stoull(c.substr(0, eq))] = static_cast<unsigned>(std::stoul(c.substr(eq + 1)));
      }
      RunScope run(g, "fecundity-scan",
                   {{"prime_bound", std::to_string(scan_opts.prime_bound)},
                    {"bound", std::to_string(scan_opts.modulus_bound)},
                    {"order", std::to_string(scan_opts.order)},
                    {"top", std::to_string(scan_opts.top_k)}});
      const auto records = fecundity_scan(scan_opts);
      for (const auto& r : records) out.line(r);
      run.finish(Json{{"records", records.size()}});
      return records.empty() ? kRefuted : kVerified;
    }

    if (*search) {
      const FactoredNat L = read_number(search_modulus);
      const PartitionStrategy strategy = read_strategy(search_kind, search_sizes, search_bits);
      SearchOptions opts;
      opts.threads = resolve_threads(g);
      opts.min_subset_size = search_min;
      opts.character_pruning = !no_pruning;
      opts.memory_budget_bytes = static_cast<std::size_t>(memory_gib * double(std::size_t{1} << 30));
      if (!search_checkpoint.empty()) opts.checkpoint = search_checkpoint;
      opts.progress = progress_printer(g);
      RunScope run(g, "search",
                   {{"modulus", L.to_string()},
                    {"order", std::to_string(search_order)},
                    {"strategy", search_kind},
                    {"target", search_target},
                    {"threads", std::to_string(opts.threads)}});
      CensusResult c;
      const Nat target = parse_nat(search_target);
      if (target == 1) {
        c = census_rigid(search_order, L, strategy, opts);
      } else {
        require_pool_modulus(L);
        const auto pool_primes = prime_pool(search_order, L).primes;
        const u64 Lv = nat_to_u64(L.value());
        c = enumerate_hits(make_instance(pool_primes, Lv, nat_to_u64(target % L.value()), strategy), opts);
      }
      for (const auto& h : c.hits) out.line(h);
      out.line(census_summary(c));
      run.finish(census_summary(c));
      if (search_expect) return c.count == *search_expect ? kVerified : kRefuted;
      return c.count > 0 ? kVerified : kRefuted;
    }

    if (*nonrigid) {
      const FactoredNat L0 = read_number(nr_l0);
      const NonRigidInstance inst = validate_nonrigid(L0, parse_nat(nr_p0));
      if (nr_verify_only) {
        std::vector<FactoredNat> candidates;
        for (const auto& m : nr_members) candidates.push_back(read_number(m));
        const FixtureSet& fx = fixtures();
        if (candidates.empty() && L0 == fx.l2 && inst.p0 == fx.nonrigid_p0) {
          candidates = {fx.nonrigid_smallest.factors, fx.nonrigid_largest.factors};
        }
        if (candidates.empty()) throw ValidationError("--verify-only needs --member for this (L0, p0)");
        bool all = true;
        for (const auto& n : candidates) {
          const MemberCheck check = check_nonrigid_member(inst, n);
          all = all && check.ok;
          Json j{{"record", "nonrigid-check"}, {"n", n}, {"ok", check.ok}, {"verdict", to_string(check.report.verdict)}};
          if (!check.ok) j["reason"] = check.reason;
          out.line(j);
        }
        return all ? kVerified : kRefuted;
      }
      SearchOptions opts;
      opts.threads = resolve_threads(g);
      if (!nr_resume.empty()) opts.checkpoint = nr_resume;
      opts.progress = progress_printer(g);
      RunScope run(g, "search-nonrigid",
                   {{"l0", L0.to_string()},
                    {"p0", std::to_string(inst.p0)},
                    {"strategy", nr_kind},
                    {"threads", std::to_string(opts.threads)}});
      const auto c = search_nonrigid(inst, read_strategy(nr_kind, nr_sizes, 20), opts);
      for (const auto& m : c.members) out.line(m);
      const Json summary{{"record", "nonrigid-summary"},
                         {"l0", L0},
                         {"p0", std::to_string(inst.p0)},
                         {"modulus", std::to_string(inst.modulus)},
                         {"target", std::to_string(inst.target)},
                         {"pool_size", c.pool_size},
                         {"count", c.members.size()},
                         {"expected_log2", c.expected_log2}};
      out.line(summary);
      run.finish(summary);
      if (nr_expect) return c.members.size() == *nr_expect ? kVerified : kRefuted;
      return c.members.empty() ? kRefuted : kVerified;
    }

    if (*oracle) {
      const FactoredNat n = read_number(oracle_n);
      agree.quotient_trials = agree.field_trials;
      const AgreementReport report = oracle_agreement(n, oracle_order, agree);
      for (const auto& v : report.probes) out.line(v);
      out.line(Json{{"record", "oracle-summary"},
                    {"n", n},
                    {"order", oracle_order},
                    {"seed", std::to_string(agree.seed)},
                    {"korselt", to_string(report.korselt)},
                    {"consistent", report.probes_consistent},
                    {"agrees", report.agrees()}});
      return report.probes_consistent ? kVerified : kRefuted;
    }

    if (*repro) {
      ReproduceOptions opts{resolve_threads(g), allow_long};
      std::vector<std::string> todo;
      if (repro_target == "all") {
        for (const auto& t : reproduce_targets()) {
          if (!t.long_running || allow_long) todo.push_back(t.name);
        }
      } else {
        todo.push_back(repro_target);
      }
      RunScope run(g, "reproduce", {{"target", repro_target}, {"threads", std::to_string(opts.threads)}});
      bool all = true;
      Json statuses = Json::object();
      for (const auto& name : todo) {
        const ReproduceOutcome r = reproduce(name, opts);
        all = all && r.passed;
        statuses[name] = r.passed ? "PASS" : "FAIL";
        out.line(r);
        std::cerr << (r.passed ? "PASS " : "FAIL ") << name << '\n';
      }
      run.finish(Json{{"targets", statuses}});
      return all ? kVerified : kRefuted;
    }
  } catch (const BudgetError& e) {
    std::cerr << "carmichael: " << e.what() << '\n';
    return kCeiling;
  } catch (const FactorizationIncomplete& e) {
    std::cerr << "carmichael: " << e.what() << '\n';
    return kCeiling;
  } catch (const ValidationError& e) {
    std::cerr << "carmichael: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "carmichael: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "carmichael: bad number: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
