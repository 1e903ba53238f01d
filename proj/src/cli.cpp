#include "triplication/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "triplication/recovery.hpp"

namespace triplication::cli {

namespace fs = std::filesystem;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InternalVerificationFailure: return kInternalFailure;
    default: return kInvalidInput;
  }
}

std::string default_output_dir() {
  const char* env = std::getenv("TRIPLICATION_OUT");
  return env && *env ? env : "triplication-out";
}

namespace {

int status_exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solution: return kOk;
    case SolveStatus::Unsatisfiable: return kUnsatisfiable;
    case SolveStatus::Aborted: return kAborted;
  }
  return kInternalFailure;
}

// Worst outcome wins: internal failure, then aborted, then UNSAT.
int combine(int a, int b) {
  auto rank = [](int c) {
    switch (c) {
      case kInternalFailure: return 4;
      case kInvalidInput: return 3;
      case kAborted: return 2;
      case kUnsatisfiable: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

json starter_document(const Pairing& starter, const TriplicationTable& table, ScenarioKind kind, int index) {
  json doc = starter_to_json(starter, true, Provenance{table_to_json(table), to_string(kind), index});
  json canonical = json::array();
  for (const Pair& p : canonical_unordered(starter)) canonical.push_back({p.x, p.y});
  doc["canonical"] = canonical;
  return doc;
}

}  // namespace

TriplicateReport triplicate(const TriplicateOptions& options, std::ostream& out) {
  TemplateBase base = base_of(options.spec);
  std::vector<int> keys;
  if (auto key = options.key ? options.key : options.spec.key) {
    keys.push_back(*key);
  } else {
    keys = admissible_keys(base);
    if (keys.empty()) throw Error(ErrorCode::KeyNotAdmissible, "the base has no admissible key");
  }
  Scenario scenario(options.scenario, options.spec.m);
  SolveOptions solve{options.budget, options.seed};
  if (!options.out_dir.empty()) fs::create_directories(options.out_dir);

  TriplicateReport report;
  for (int key : keys) {
    TriplicationTable table = template_table(base, key);
    KeyOutcome outcome;
    outcome.key = key;
    out << "key " << key << ", scenario " << to_string(options.scenario) << "\n" << render(table);
    SolveOutcome solved = solve_first(compile(table, scenario), solve);
    outcome.status = solved.status;
    outcome.stats = solved.stats;
    out << "status: " << to_string(solved.status) << " (" << solved.stats.nodes << " nodes)\n";
    if (solved.solution) {
      out << "discriminators (r = " << scenario.radix() << "):\n" << render(*solved.solution);
      Pairing starter = recover_starter(table, *solved.solution, scenario);
      out << "strong starter of order " << starter.modulus() << ": " << format_pairs(starter.pairs(), true) << "\n";
      if (!options.out_dir.empty()) {
        std::ostringstream name;
        name << "starter-m" << options.spec.m << "-" << to_string(options.spec.mode) << "-t" << key << "-"
             << to_string(options.scenario) << ".json";
        outcome.file = (fs::path(options.out_dir) / name.str()).string();
        write_json_file(outcome.file, starter_document(starter, table, options.scenario, 0));
        out << "wrote " << outcome.file << "\n";
      }
      outcome.starter = std::move(starter);
    }
    out << "\n";
    report.exit_code = combine(report.exit_code, status_exit_code(outcome.status));
    report.keys.push_back(std::move(outcome));
  }
  return report;
}

json key_report(const TemplateSpec& spec) {
  TemplateBase base = base_of(spec);
  std::vector<int> keys = admissible_keys(base);
  json admissible = json::object();
  for (int t = 1; t < spec.m; ++t) {
    admissible[std::to_string(t)] = std::binary_search(keys.begin(), keys.end(), t);
  }
  return {{"m", spec.m}, {"mode", to_string(spec.mode)}, {"keys", keys}, {"count", keys.size()},
          {"admissible", admissible}};
}

VerifyReport verify(const json& document) {
  if (document.contains("rows") && !document.contains("scenario")) {
    try {
      TriplicationTable table = table_from_json(document);
      return {true, "table", "valid triplication table of order " + std::to_string(table.order()) + ", key " +
                                 std::to_string(table.key())};
    } catch (const NotATable& e) {
      return {false, "table", e.what()};
    }
  }
  if (document.contains("pairs")) {
    Pairing p = pairing_from_json(document);
    StarterClass c = classify(p);
    std::string detail = std::string(to_string(c.kind)) + " of order " + std::to_string(p.modulus());
    if (!c.witness.empty()) detail += ": " + c.witness;
    // Starter files claim strength; bare pairings only need to be something.
    bool starter_file = document.contains("order");
    bool ok = starter_file ? c.kind == StarterKind::StrongStarter : c.kind != StarterKind::NotAny;
    return {ok, starter_file ? "starter" : "pairing", detail};
  }
  throw Error(ErrorCode::InvalidInput, "document is neither a pairing, a starter nor a table");
}

std::uint64_t sample_seed(std::uint64_t seed, int m, int index) {
  // splitmix64 over the three inputs
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ static_cast<std::uint64_t>(m)) ^ static_cast<std::uint64_t>(index));
}

namespace {

struct Job {
  std::string id;
  int m = 0;
  int index = 0;
  bool fixed = false;
  std::uint64_t seed = 0;
  const TriplicationTable* table = nullptr;
};

json run_job(const Job& job, const BatchConfig& config) {
  json record{{"id", job.id}, {"m", job.m}, {"index", job.index}, {"fixed", job.fixed}, {"seed", job.seed}};
  std::optional<TriplicationTable> table;
  if (job.table) {
    table = *job.table;
  } else {
    table = random_tt(job.m, {job.seed, config.sample_budget, 2'000});
  }
  if (!table) {
    record["status"] = "sample_failed";
    return record;
  }
  record["tt"] = table_to_json(*table);
  Scenario scenario(config.scenario, table->order());
  SolveOutcome solved = solve_first(compile(*table, scenario), {config.budget, std::nullopt});
  record["stats"] = stats_to_json(solved.stats);
  switch (solved.status) {
    case SolveStatus::Solution: {
      Pairing starter = recover_starter(*table, *solved.solution, scenario);
      record["status"] = "solved";
      record["solution"] = solution_to_json(*solved.solution);
      record["starter"] = json::array();
      for (const Pair& p : starter) record["starter"].push_back({p.x, p.y});
      break;
    }
    case SolveStatus::Unsatisfiable: record["status"] = "unsat"; break;
    case SolveStatus::Aborted: record["status"] = "aborted"; break;
  }
  return record;
}

void tally(OrderSummary& s, const json& record) {
  ++s.n;
  std::string status = record.value("status", "");
  if (status == "solved") ++s.solved;
  if (status == "unsat") ++s.unsatisfiable;
  if (status == "aborted") ++s.aborted;
  if (status == "sample_failed") ++s.sample_failures;
}

}  // namespace

BatchSummary run_batch(const BatchConfig& config, std::ostream& log) {
  if (config.samples < 1) throw Error(ErrorCode::InvalidInput, "sample count must be at least 1");
  if (config.budget == 0) throw Error(ErrorCode::InvalidInput, "solver budget must be positive");
  std::string dir = config.out_dir.empty() ? default_output_dir() : config.out_dir;
  fs::create_directories(dir);
  const fs::path catalog_path = fs::path(dir) / "catalog.jsonl";

  std::map<std::string, json> records;
  BatchSummary summary;
  if (std::ifstream in(catalog_path); in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      // A torn final line from an interrupted run is simply redone.
      json record = json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.contains("id")) continue;
      records[record["id"].get<std::string>()] = record;
    }
  }

  std::vector<Job> jobs;
  for (int m : config.orders) {
    for (int i = 0; i < config.samples; ++i) {
      jobs.push_back({std::to_string(m) + "-" + std::to_string(i), m, i, false, sample_seed(config.seed, m, i)});
    }
  }
  for (std::size_t i = 0; i < config.fixed.size(); ++i) {
    jobs.push_back({"fixed-" + std::to_string(i), config.fixed[i].order(), static_cast<int>(i), true, 0,
                    &config.fixed[i]});
  }
  std::vector<const Job*> pending;
  for (const Job& job : jobs) {
    if (records.count(job.id)) {
      ++summary.resumed;
    } else {
      pending.push_back(&job);
    }
  }
  log << "batch: " << jobs.size() << " tables, " << summary.resumed << " already in " << catalog_path.string()
      << "\n";

  std::ofstream catalog(catalog_path, std::ios::app);
  if (!catalog) throw Error(ErrorCode::InvalidInput, "cannot write " + catalog_path.string());
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t k = next++; k < pending.size(); k = next++) {
      json record;
      try {
        record = run_job(*pending[k], config);
      } catch (...) {
        std::lock_guard guard(lock);
        if (!failure) failure = std::current_exception();
        next = pending.size();
        return;
      }
      std::lock_guard guard(lock);
      catalog << record.dump() << "\n" << std::flush;
      std::string id = record["id"].get<std::string>();
      log << id << ": " << record["status"].get<std::string>() << "\n";
      records[id] = std::move(record);
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(pending.size())));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (int m : config.orders) {
    OrderSummary s;
    s.m = m;
    for (int i = 0; i < config.samples; ++i) tally(s, records.at(std::to_string(m) + "-" + std::to_string(i)));
    summary.orders.push_back(s);
  }
  for (std::size_t i = 0; i < config.fixed.size(); ++i) tally(summary.fixed, records.at("fixed-" + std::to_string(i)));
  write_json_file((fs::path(dir) / "summary.json").string(), summary_to_json(summary, config));
  return summary;
}

json summary_to_json(const BatchSummary& summary, const BatchConfig& config) {
  auto one = [](const OrderSummary& s) {
    return json{{"m", s.m},           {"N", s.n},
                {"N_empty", s.unsatisfiable}, {"solved", s.solved},
                {"aborted", s.aborted}, {"sample_failures", s.sample_failures}};
  };
  json orders = json::array();
  for (const OrderSummary& s : summary.orders) orders.push_back(one(s));
  json out{{"scenario", to_string(config.scenario)},
           {"seed", config.seed},
           {"samples", config.samples},
           {"budget", config.budget},
           {"orders", orders}};
  if (!config.fixed.empty()) out["fixed"] = one(summary.fixed);
  return out;
}

namespace {

struct SpecFlags {
  std::string spec_file;
  std::string mode = "one-starter";
  int m = 0;
  std::string t0, t1, t2;
  std::optional<int> mu;
  std::optional<int> key;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--spec", f.spec_file, "template spec JSON file");
  cmd->add_option("--mode", f.mode, "one-starter, three-starter or epicycloidal");
  cmd->add_option("--m", f.m, "order of the table");
  cmd->add_option("--T0", f.t0, "base starter, e.g. \"2,3;4,6;5,1\"");
  cmd->add_option("--T1", f.t1, "second base pairing (three-starter)");
  cmd->add_option("--T2", f.t2, "third base pairing (three-starter)");
  cmd->add_option("--mu", f.mu, "epicycloidal multiplier");
  cmd->add_option("--key", f.key, "key t");
}

TemplateSpec spec_from_flags(const SpecFlags& f) {
  TemplateSpec spec;
  if (!f.spec_file.empty()) {
    spec = template_spec_from_json(read_json_file(f.spec_file));
  } else {
    if (f.m <= 0 || f.t0.empty()) throw Error(ErrorCode::InvalidInput, "give --spec, or --m and --T0");
    spec.mode = parse_template_mode(f.mode);
    spec.m = f.m;
    spec.t0 = parse_pairing_literal(f.m, f.t0);
    if (!f.t1.empty()) spec.t1 = parse_pairing_literal(f.m, f.t1);
    if (!f.t2.empty()) spec.t2 = parse_pairing_literal(f.m, f.t2);
    spec.mu = f.mu;
  }
  if (f.key) spec.key = f.key;
  return spec;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong starters of order 3m by triplication"};
  app.require_subcommand(1);

  SpecFlags tri_flags;
  std::string tri_scenario = "carry";
  std::string tri_out;
  std::uint64_t tri_budget = 0;
  std::optional<std::uint64_t> tri_seed;
  bool tri_no_write = false;
  auto* tri = app.add_subcommand("triplicate", "build a table, solve its MSP and recover a strong starter");
  add_spec_flags(tri, tri_flags);
  tri->add_option("--scenario", tri_scenario, "mod or carry");
  tri->add_option("--out", tri_out, "output directory (default $TRIPLICATION_OUT)");
  tri->add_option("--budget", tri_budget, "solver node budget, 0 for none");
  tri->add_option("--seed", tri_seed, "shuffle value order with this seed");
  tri->add_flag("--no-write", tri_no_write, "print only");

  SpecFlags key_flags;
  bool keys_json = false;
  auto* keys = app.add_subcommand("keys", "list admissible keys of a base triple");
  add_spec_flags(keys, key_flags);
  keys->add_flag("--json", keys_json, "machine-readable report");

  std::string verify_file;
  auto* ver = app.add_subcommand("verify", "classify a starter or pairing, or validate a table");
  ver->add_option("file", verify_file, "JSON file")->required();

  SpecFlags solve_flags;
  std::string solve_tt;
  std::string solve_scenario = "carry";
  std::string solve_mode = "first";
  std::uint64_t solve_budget = 0;
  std::optional<std::uint64_t> solve_seed;
  auto* sol = app.add_subcommand("solve", "solve the MSP of a table");
  add_spec_flags(sol, solve_flags);
  sol->add_option("--tt", solve_tt, "table JSON file");
  sol->add_option("--scenario", solve_scenario, "mod or carry");
  sol->add_option("--find", solve_mode, "first, all or count")->check(CLI::IsMember({"first", "all", "count"}));
  sol->add_option("--budget", solve_budget, "solver node budget, 0 for none");
  sol->add_option("--seed", solve_seed, "shuffle value order with this seed");

  int sample_m = 0;
  std::uint64_t sample_seed_value = 0;
  std::uint64_t sample_budget = 1'000'000;
  std::string sample_out;
  auto* smp = app.add_subcommand("sample", "draw a random triplication table");
  smp->add_option("--m", sample_m, "order")->required();
  smp->add_option("--seed", sample_seed_value, "random seed");
  smp->add_option("--budget", sample_budget, "sampler node budget");
  smp->add_option("--out", sample_out, "write the table JSON here");

  BatchConfig batch;
  std::string batch_scenario = "carry";
  std::vector<std::string> batch_tables;
  auto* bat = app.add_subcommand("batch", "solve many random tables and count the unsolvable ones");
  bat->add_option("--orders", batch.orders, "orders m")->delimiter(',');
  bat->add_option("--samples", batch.samples, "tables per order");
  bat->add_option("--scenario", batch_scenario, "mod or carry");
  bat->add_option("--seed", batch.seed, "base seed");
  bat->add_option("--budget", batch.budget, "solver node budget per table");
  bat->add_option("--sample-budget", batch.sample_budget, "sampler node budget per table");
  bat->add_option("--threads", batch.threads, "worker threads");
  bat->add_option("--out", batch.out_dir, "output directory (default $TRIPLICATION_OUT)");
  bat->add_option("--tt", batch_tables, "extra table JSON files to solve as given");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*tri) {
      TriplicateOptions options;
      options.spec = spec_from_flags(tri_flags);
      options.scenario = parse_scenario_kind(tri_scenario);
      options.budget = tri_budget;
      options.seed = tri_seed;
      if (!tri_no_write) options.out_dir = tri_out.empty() ? default_output_dir() : tri_out;
      return triplicate(options, out).exit_code;
    }
    if (*keys) {
      json report = key_report(spec_from_flags(key_flags));
      if (keys_json) {
        out << report.dump(2) << "\n";
      } else {
        out << "K = {";
        const auto& ks = report["keys"];
        for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? "," : "") << ks[i].get<int>();
        out << "}\n|K| = " << report["count"].get<int>() << "\n";
      }
      return kOk;
    }
    if (*ver) {
      VerifyReport report = verify(read_json_file(verify_file));
      out << report.kind << ": " << (report.ok ? "OK" : "FAILED") << ": " << report.detail << "\n";
      return report.ok ? kOk : kInvalidInput;
    }
    if (*sol) {
      std::optional<TriplicationTable> table;
      if (!solve_tt.empty()) {
        table = table_from_json(read_json_file(solve_tt));
      } else {
        TemplateSpec spec = spec_from_flags(solve_flags);
        if (!spec.key) throw Error(ErrorCode::InvalidInput, "solve needs --tt or a spec with --key");
        table = table_of(spec, *spec.key);
      }
      Scenario scenario(parse_scenario_kind(solve_scenario), table->order());
      MspInstance inst = compile(*table, scenario);
      SolveOptions options{solve_budget, solve_seed};
      out << render(*table);
      if (solve_mode == "count") {
        CountResult counted = count_solutions(inst, options);
        out << "solutions: " << counted.count << (counted.complete ? "" : " (incomplete)") << "\n";
        return counted.complete ? (counted.count ? kOk : kUnsatisfiable) : kAborted;
      }
      if (solve_mode == "all") {
        Enumeration all = solve_all(inst, options);
        for (std::size_t i = 0; i < all.solutions.size(); ++i) {
          out << "solution " << i << ":\n" << render(all.solutions[i]);
          out << format_pairs(recover_starter(*table, all.solutions[i], scenario).pairs(), true) << "\n";
        }
        out << "status: " << to_string(all.status) << ", " << all.solutions.size() << " solutions\n";
        return status_exit_code(all.status);
      }
      SolveOutcome first = solve_first(inst, options);
      out << "status: " << to_string(first.status) << " (" << first.stats.nodes << " nodes, "
          << first.stats.backtracks << " backtracks)\n";
      if (first.solution) {
        out << render(*first.solution);
        out << format_pairs(recover_starter(*table, *first.solution, scenario).pairs(), true) << "\n";
      }
      return status_exit_code(first.status);
    }
    if (*smp) {
      auto table = random_tt(sample_m, {sample_seed_value, sample_budget, 2'000});
      if (!table) {
        err << "sampler budget exhausted\n";
        return kAborted;
      }
      out << render(*table) << table_to_json(*table).dump() << "\n";
      if (!sample_out.empty()) write_json_file(sample_out, table_to_json(*table));
      return kOk;
    }
    if (*bat) {
      batch.scenario = parse_scenario_kind(batch_scenario);
      for (const std::string& file : batch_tables) batch.fixed.push_back(table_from_json(read_json_file(file)));
      BatchSummary summary = run_batch(batch, err);
      out << summary_to_json(summary, batch).dump(2) << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace triplication::cli
