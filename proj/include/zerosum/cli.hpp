#pragma once

// Command-line front end:
//
//   zerosum group info   --group SPEC [--quaternion]
//   zerosum free check   --group SPEC (--seq TEXT | --seq-file PATH)
//   zerosum reach        --group SPEC (--seq TEXT [--targets TEXT] [--oracle] | --sample N [--max-length L])
//   zerosum davenport    --group SPEC [--budget N] [--json]
//   zerosum extremal     --group SPEC [--budget N]
//   zerosum verify       --target T --param P [--param P ...]
//   zerosum report
//
// Global options (accepted before or after the subcommand): --format
// {table,json,csv}, --cache-dir DIR, --no-cache, --parallelism N,
// --budget N, --rng-seed S.
//
// Exit codes: 0 success or documented discrepancy, 1 verification failure,
// 2 usage error, 3 node budget exhausted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerosum/cache.hpp"
#include "zerosum/davenport.hpp"
#include "zerosum/error.hpp"
#include "zerosum/extremal.hpp"
#include "zerosum/group.hpp"
#include "zerosum/product_engine.hpp"
#include "zerosum/report_io.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kBudgetExhausted = 3 };

enum class OutputFormat { Table, Json, Csv };
enum class Command { GroupInfo, FreeCheck, Reach, Davenport, Extremal, Verify, Report };

inline constexpr std::uint64_t kDefaultRngSeed = 20240601;

struct RunConfig {
  Command command = Command::Report;
  std::string group_spec;
  std::uint64_t budget = kDefaultBudget;
  OutputFormat output_format = OutputFormat::Table;
  std::filesystem::path cache_dir;
  unsigned parallelism = 1;
  std::uint64_t rng_seed = kDefaultRngSeed;
  bool use_cache = true;

  SearchOptions search() const { return {budget, parallelism}; }
};

/// Usage-level failure detected after argument parsing (bad --param etc.).
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

using nlohmann::json;

struct Options {
  RunConfig config;
  std::string format = "table";
  std::string cache_dir;
  bool json_flag = false;
  bool quaternion = false;
  std::string seq;
  std::string seq_file;
  std::string targets;
  bool oracle = false;
  std::uint64_t sample = 0;
  std::size_t max_length = 7;
  std::string target;
  std::vector<std::string> params;
};

inline std::vector<std::uint32_t> parse_int_params(const std::vector<std::string>& params) {
  std::vector<std::uint32_t> out;
  for (const auto& p : params) {
    const auto dots = p.find("..");
    long long lo = 0;
    long long hi = 0;
    bool ok = false;
    if (dots == std::string::npos) {
      ok = zerosum::detail::parse_int(p, lo) && lo >= 1;
      hi = lo;
    } else {
      ok = zerosum::detail::parse_int(std::string_view(p).substr(0, dots), lo) &&
           zerosum::detail::parse_int(std::string_view(p).substr(dots + 2), hi) && lo >= 1 && lo <= hi;
    }
    if (!ok || hi > 100000) throw UsageError("--param '" + p + "': expected a positive integer or a range a..b");
    for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

class Runner {
 public:
  Runner(Options opts, std::ostream& out, std::ostream& err) : o_(std::move(opts)), out_(out), err_(err) {}

  int run() {
    const RunConfig& c = o_.config;
    switch (c.command) {
      case Command::GroupInfo: return group_info();
      case Command::FreeCheck: return free_check();
      case Command::Reach: return reach();
      case Command::Davenport: return davenport_cmd();
      case Command::Extremal: return extremal_cmd();
      case Command::Verify: return verify_cmd();
      case Command::Report: return report_cmd();
    }
    return kUsage;
  }

 private:
  bool json_out() const { return o_.config.output_format == OutputFormat::Json; }

  GroupPtr group() const {
    if (o_.config.group_spec.empty()) throw UsageError("--group is required");
    return Group::build(o_.config.group_spec);
  }

  std::optional<cache::Cache> open_cache() const {
    if (!o_.config.use_cache) return std::nullopt;
    try {
      return cache::Cache(o_.config.cache_dir, &err_);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  int group_info() {
    const GroupPtr g = group();
    std::vector<std::string> quaternion;
    if (o_.quaternion) quaternion = quaternion_names(*g);
    std::vector<std::string> center;
    for (Element e : g->center()) center.push_back(g->name(e));
    if (json_out()) {
      json elements = json::array();
      for (Element e : g->elements()) {
        json row{{"index", e.index},
                 {"name", g->name(e)},
                 {"order", g->element_order(e)},
                 {"inverse", g->name(g->inverse(e))}};
        if (!quaternion.empty()) row["quaternion"] = quaternion[e.index];
        elements.push_back(row);
      }
      out_ << json{{"schema_version", io::kSchemaVersion},
                   {"kind", "group-info"},
                   {"group", g->spec().to_string()},
                   {"order", g->order()},
                   {"exponent", g->exponent()},
                   {"abelian", g->is_abelian()},
                   {"center", center},
                   {"elements", elements}}
                  .dump(2)
           << "\n";
      return kOk;
    }
    out_ << "group:    " << g->spec().to_string() << "\n"
         << "order:    " << g->order() << "\n"
         << "exponent: " << g->exponent() << "\n"
         << "abelian:  " << (g->is_abelian() ? "true" : "false") << "\n"
         << "center:   {";
    for (std::size_t i = 0; i < center.size(); ++i) out_ << (i ? ", " : "") << center[i];
    out_ << "}\n";
    if (g->order() <= 256) {
      out_ << "index  element      order  inverse" << (quaternion.empty() ? "" : "      quaternion") << "\n";
      for (Element e : g->elements()) {
        std::ostringstream row;
        row << std::left << std::setw(7) << e.index << std::setw(13) << g->name(e) << std::setw(7)
            << g->element_order(e) << std::setw(13) << g->name(g->inverse(e));
        if (!quaternion.empty()) row << quaternion[e.index];
        std::string line = row.str();
        line.erase(line.find_last_not_of(' ') + 1);
        out_ << line << "\n";
      }
    }
    return kOk;
  }

  std::vector<std::string> sequence_inputs() const {
    std::vector<std::string> inputs;
    if (!o_.seq.empty()) inputs.push_back(o_.seq);
    if (!o_.seq_file.empty()) {
      std::ifstream in(o_.seq_file);
      if (!in) throw UsageError("cannot read --seq-file '" + o_.seq_file + "'");
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        inputs.push_back(line);
      }
    }
    if (inputs.empty()) throw UsageError("give a sequence with --seq or --seq-file");
    return inputs;
  }

  int free_check() {
    const GroupPtr g = group();
    const auto inputs = sequence_inputs();
    json results = json::array();
    for (const auto& text : inputs) {
      const GSequence s = GSequence::parse(g, text);
      const bool free = is_product1_free(s);
      if (json_out()) {
        results.push_back({{"sequence", s.to_string()}, {"length", s.length()}, {"free", free}});
      } else if (inputs.size() == 1) {
        out_ << "free: " << (free ? "true" : "false") << "\n";
      } else {
        out_ << s.to_string() << " free: " << (free ? "true" : "false") << "\n";
      }
    }
    if (json_out()) {
      out_ << json{{"schema_version", io::kSchemaVersion},
                   {"kind", "free-check"},
                   {"group", g->spec().to_string()},
                   {"results", results}}
                  .dump(2)
           << "\n";
    }
    return kOk;
  }

  int reach() {
    const GroupPtr g = group();
    if (o_.sample > 0) return reach_sample(g);
    if (o_.seq.empty()) throw UsageError("reach needs --seq (or --sample N)");
    const GSequence s = GSequence::parse(g, o_.seq);
    const ReachableSet set = o_.oracle ? oracle_reachable(s) : reachable_products(s);
    std::optional<bool> hit;
    if (!o_.targets.empty()) {
      const GSequence targets = GSequence::parse(g, o_.targets);
      if (targets.empty()) throw UsageError("--targets must name at least one element");
      hit = std::any_of(targets.elements().begin(), targets.elements().end(),
                        [&](Element t) { return set.contains(t); });
    }
    const bool free = !set.contains(g->identity());
    if (json_out()) {
      std::vector<std::string> members;
      for (Element e : set.members()) members.push_back(g->name(e));
      json j{{"schema_version", io::kSchemaVersion},
             {"kind", "reach"},
             {"group", g->spec().to_string()},
             {"sequence", s.to_string()},
             {"method", o_.oracle ? "oracle" : "dp"},
             {"reachable", members},
             {"size", set.size()},
             {"free", free}};
      if (hit) j["hit"] = *hit;
      out_ << j.dump(2) << "\n";
      return kOk;
    }
    out_ << "reachable: " << set.to_string() << "\n"
         << "size: " << set.size() << "\n"
         << "free: " << (free ? "true" : "false") << "\n";
    if (hit) out_ << "hit: " << (*hit ? "true" : "false") << "\n";
    return kOk;
  }

  /// Seeded random comparison of the DP against the permutation oracle.
  int reach_sample(const GroupPtr& g) {
    const std::size_t max_len = std::min<std::size_t>(o_.max_length, kMaxOracleLength);
    if (max_len == 0) throw UsageError("--max-length must be at least 1");
    std::mt19937_64 rng(o_.config.rng_seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, g->order() - 1);
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uint64_t agree = 0;
    std::vector<std::string> disagreements;
    for (std::uint64_t i = 0; i < o_.sample; ++i) {
      std::vector<Element> elems(len(rng));
      for (auto& e : elems) e = Element{pick(rng)};
      const GSequence s(g, std::move(elems));
      if (reachable_products(s) == oracle_reachable(s)) {
        ++agree;
      } else {
        disagreements.push_back(s.to_string());
      }
    }
    if (json_out()) {
      out_ << json{{"schema_version", io::kSchemaVersion},
                   {"kind", "reach-sample"},
                   {"group", g->spec().to_string()},
                   {"rng_seed", o_.config.rng_seed},
                   {"cases", o_.sample},
                   {"agree", agree},
                   {"disagreements", disagreements}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "agree: " << agree << "/" << o_.sample << " (rng seed " << o_.config.rng_seed << ")\n";
      for (const auto& d : disagreements) out_ << "  disagreement: " << d << "\n";
    }
    return disagreements.empty() ? kOk : kVerificationFailure;
  }

  void print_davenport(const json& j) {
    if (json_out()) {
      out_ << j.dump(2) << "\n";
      return;
    }
    out_ << "group: " << j.at("group").get<std::string>() << "\n";
    if (j.at("status") == "exact") {
      out_ << "davenport: " << j.at("davenport").get<int>() << "\n";
    } else {
      out_ << "davenport: unknown above length " << j.at("max_free_length").get<int>() << "\n";
    }
    out_ << "max_free_length: " << j.at("max_free_length").get<int>() << "\n"
         << "witness: " << j.at("witness").get<std::string>() << "\n"
         << "nodes: " << j.at("nodes").get<std::uint64_t>() << "\n"
         << "millis: " << j.at("millis").get<std::int64_t>() << "\n";
    if (j.value("cached", false)) out_ << "cached: true\n";
  }

  int davenport_cmd() {
    const GroupPtr g = group();
    const std::string spec = g->spec().to_string();
    auto store = open_cache();
    if (store) {
      if (auto rec = store->lookup("davenport", spec)) {
        json j = json::parse(rec->payload);
        j["nodes"] = 0;
        j["millis"] = 0;
        j["cached"] = true;
        print_davenport(j);
        return kOk;
      }
    }
    const SearchResult r = max_free_length(g, o_.config.search());
    const json j = io::to_json(r, spec);
    if (!r.exact()) {
      print_davenport(j);
      err_ << "error: " << spec << ": " << r.describe() << "\n";
      return kBudgetExhausted;
    }
    if (store) store->store(cache::make_record("davenport", spec, j.dump()));
    print_davenport(j);
    return kOk;
  }

  int extremal_cmd() {
    const GroupPtr g = group();
    const std::string spec = g->spec().to_string();
    auto store = open_cache();
    json j;
    if (auto rec = store ? store->lookup("extremal", spec) : std::nullopt) {
      j = json::parse(rec->payload);
      j["nodes"] = 0;
      j["millis"] = 0;
      j["cached"] = true;
    } else {
      const auto start = std::chrono::steady_clock::now();
      const ExtremalSet set = enumerate_extremal(g, o_.config.search());
      const auto millis =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      j = io::extremal_to_json(spec, set.davenport, set.enumeration, millis);
      if (store) store->store(cache::make_record("extremal", spec, j.dump()));
    }
    if (json_out()) {
      out_ << j.dump(2) << "\n";
      return kOk;
    }
    out_ << "group: " << spec << "\n"
         << "davenport: " << j.at("davenport").get<int>() << "\n"
         << "extremal_count: " << j.at("extremal_count").get<std::size_t>() << "\n";
    for (const auto& s : j.at("sequences")) out_ << "  " << s.get<std::string>() << "\n";
    return kOk;
  }

  std::vector<std::pair<std::string, std::function<VerificationReport()>>> verify_jobs() const {
    static const std::vector<std::string> known = {"dihedral", "dicyclic", "metacyclic", "cyclic",
                                                   "weighted", "cyclic-structure", "minzero"};
    const std::string& t = o_.target;
    if (std::find(known.begin(), known.end(), t) == known.end()) {
      throw UsageError("unknown --target '" + t + "'");
    }
    if (o_.params.empty()) throw UsageError("verify needs at least one --param");
    const SearchOptions search = o_.config.search();
    std::vector<std::pair<std::string, std::function<VerificationReport()>>> jobs;
    if (t == "metacyclic" || t == "minzero") {
      for (const auto& p : o_.params) {
        const GroupSpec spec = t == "metacyclic" ? GroupSpec::parse("M:" + p) : GroupSpec::parse(p);
        const GroupPtr g = Group::build(spec);
        if (t == "metacyclic") {
          jobs.emplace_back(t + "@" + spec.to_string(), [g, search] { return verify_theorem(g, search); });
        } else {
          jobs.emplace_back(t + "@" + spec.to_string(), [g, search] { return check_minimal_zero_sum_order(g, search); });
        }
      }
      return jobs;
    }
    for (std::uint32_t n : parse_int_params(o_.params)) {
      if (t == "dihedral" || t == "dicyclic" || t == "cyclic") {
        const GroupSpec spec = t == "dihedral" ? GroupSpec::dihedral(n)
                               : t == "dicyclic" ? GroupSpec::dicyclic(n)
                                                 : GroupSpec::cyclic(n);
        const GroupPtr g = Group::build(spec);
        jobs.emplace_back(t + "@" + spec.to_string(), [g, search] { return verify_theorem(g, search); });
      } else if (t == "weighted") {
        if (n < 2 || n > 64) throw UsageError("weighted: n must lie in [2, 64]");
        jobs.emplace_back(t + "@C:" + std::to_string(n), [n] { return check_weighted_lemma(n); });
      } else {
        if (n < 3) throw UsageError("cyclic-structure: n must be at least 3");
        jobs.emplace_back(t + "@C:" + std::to_string(n), [n, search] { return check_cyclic_structure(n, search); });
      }
    }
    return jobs;
  }

  int verify_cmd() {
    auto jobs = verify_jobs();
    auto store = open_cache();
    bool failure = false;
    json all = json::array();
    std::vector<io::SummaryRow> rows;
    for (auto& [key, job] : jobs) {
      json j;
      if (auto rec = store ? store->lookup("verify", key) : std::nullopt) {
        j = json::parse(rec->payload);
      } else {
        const VerificationReport report = job();
        j = io::to_json(report);
        if (store) store->store(cache::make_record("verify", key, j.dump()));
      }
      failure = failure || j.at("verdict") == "failure";
      if (json_out()) {
        all.push_back(j);
      } else if (o_.config.output_format == OutputFormat::Csv) {
        rows.push_back(row_from_verify(j));
      } else {
        print_verify_table(j);
      }
    }
    if (json_out()) out_ << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
    if (o_.config.output_format == OutputFormat::Csv) out_ << io::render_csv(rows);
    return failure ? kVerificationFailure : kOk;
  }

  void print_verify_table(const json& j) {
    out_ << "target:      " << j.at("target").get<std::string>() << "\n"
         << "group:       " << j.at("group").get<std::string>() << "\n"
         << "family:      " << j.at("family").get<std::string>() << "\n";
    if (j.at("davenport").get<int>() > 0) out_ << "D(G):        " << j.at("davenport").get<int>() << "\n";
    out_ << "enumerated:  " << j.at("enumerated_count").get<std::uint64_t>() << "\n"
         << "predicted:   " << j.at("predicted_count").get<std::uint64_t>() << "\n"
         << "missing:     " << j.at("missing").size() << "\n"
         << "extra:       " << j.at("extra").size() << "\n"
         << "verdict:     " << j.at("verdict").get<std::string>() << "\n";
    for (const auto& s : j.at("missing")) out_ << "  missing " << s.get<std::string>() << "\n";
    for (const auto& s : j.at("extra")) out_ << "  extra   " << s.get<std::string>() << "\n";
    for (const auto& note : j.at("notes")) out_ << "  note: " << note.get<std::string>() << "\n";
    out_ << "\n";
  }

  static bool is_theorem_target(const std::string& target) {
    return target == "dihedral" || target == "dicyclic" || target == "metacyclic" || target == "cyclic";
  }

  static io::SummaryRow row_from_verify(const json& j) {
    io::SummaryRow row;
    const std::string target = j.at("target").get<std::string>();
    const std::string group = j.at("group").get<std::string>();
    row.group = is_theorem_target(target) ? group : target + "@" + group;
    if (j.at("davenport").get<int>() > 0) row.davenport = std::to_string(j.at("davenport").get<int>());
    if (is_theorem_target(target)) row.extremal_count = std::to_string(j.at("enumerated_count").get<std::uint64_t>());
    row.verdict = j.at("verdict").get<std::string>();
    row.missing = std::to_string(j.at("missing").size());
    row.extra = std::to_string(j.at("extra").size());
    row.nodes = j.at("nodes").get<std::uint64_t>();
    row.millis = j.at("millis").get<std::int64_t>();
    return row;
  }

  /// Sort key: optional "target@" prefix, then group kind and numeric parameters.
  static std::tuple<std::string, int, std::vector<std::uint32_t>, std::string> row_key(const std::string& name) {
    const auto at = name.find('@');
    const std::string prefix = at == std::string::npos ? "" : name.substr(0, at);
    const std::string spec_text = at == std::string::npos ? name : name.substr(at + 1);
    try {
      const GroupSpec spec = GroupSpec::parse(spec_text);
      return {prefix, static_cast<int>(spec.kind), spec.params, name};
    } catch (const ParseError&) {
      return {prefix, 99, {}, name};
    }
  }

  int report_cmd() {
    auto store = open_cache();
    std::map<std::string, io::SummaryRow> rows;
    if (store) {
      for (const auto& rec : store->all()) {
        json j;
        try {
          j = json::parse(rec.payload);
        } catch (const json::exception&) {
          err_ << "warning: cache record " << rec.kind << "-" << rec.group_spec << " has an unparsable payload\n";
          continue;
        }
        if (rec.kind == "verify") {
          io::SummaryRow fresh = row_from_verify(j);
          auto& row = rows[fresh.group];
          const std::uint64_t nodes = row.nodes + fresh.nodes;
          const std::int64_t millis = row.millis + fresh.millis;
          if (row.davenport != "-" && fresh.davenport == "-") fresh.davenport = row.davenport;
          if (row.extremal_count != "-" && fresh.extremal_count == "-") fresh.extremal_count = row.extremal_count;
          row = fresh;
          row.nodes = nodes;
          row.millis = millis;
        } else if (rec.kind == "davenport" || rec.kind == "extremal") {
          auto& row = rows[rec.group_spec];
          row.group = rec.group_spec;
          if (!j.at("davenport").is_null()) row.davenport = std::to_string(j.at("davenport").get<int>());
          if (rec.kind == "extremal") row.extremal_count = std::to_string(j.at("extremal_count").get<std::size_t>());
          row.nodes += j.value("nodes", std::uint64_t{0});
          row.millis += j.value("millis", std::int64_t{0});
        }
      }
    }
    if (rows.empty()) {
      if (json_out()) {
        out_ << io::summary_to_json({}).dump(2) << "\n";
      } else {
        out_ << "no results in cache " << o_.config.cache_dir.string() << "\n";
      }
      return kOk;
    }
    std::vector<io::SummaryRow> ordered;
    for (auto& [k, r] : rows) ordered.push_back(r);
    std::sort(ordered.begin(), ordered.end(),
              [](const io::SummaryRow& a, const io::SummaryRow& b) { return row_key(a.group) < row_key(b.group); });
    switch (o_.config.output_format) {
      case OutputFormat::Json: out_ << io::summary_to_json(ordered).dump(2) << "\n"; break;
      case OutputFormat::Csv: out_ << io::render_csv(ordered); break;
      case OutputFormat::Table: out_ << io::render_summary_table(ordered); break;
    }
    return kOk;
  }

  Options o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

/// Parses argv, dispatches, and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  detail::Options o;
  CLI::App app{"Exact zero-sum toolkit for finite groups", "zerosum"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget = kDefaultBudget;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (default: $ZEROSUM_CACHE_DIR or ./.zerosum-cache)");
  app.add_flag("--no-cache", [&o](std::int64_t) { o.config.use_cache = false; }, "Neither read nor write the cache");
  app.add_option("--parallelism", o.config.parallelism, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "Node budget for searches")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", o.config.rng_seed, "Seed for randomized checks");

  auto add_group = [&o](CLI::App* sub) {
    sub->add_option("--group", o.config.group_spec, "Group: C:n, D:n, Q:n, M:q,m,s or CxC:n1,n2,...")->required();
  };

  auto* group_cmd = app.add_subcommand("group", "Group information")->require_subcommand(1);
  auto* info = group_cmd->add_subcommand("info", "Order, exponent, center and element table");
  add_group(info);
  info->add_flag("--quaternion", o.quaternion, "Show quaternion names (Q:2 only)");
  info->callback([&o] { o.config.command = Command::GroupInfo; });

  auto* free_cmd = app.add_subcommand("free", "Product-1-freeness")->require_subcommand(1);
  auto* check = free_cmd->add_subcommand("check", "Decide whether sequences are product-1-free");
  add_group(check);
  check->add_option("--seq", o.seq, "Sequence, e.g. \"[y, y, x*y^2]\"");
  check->add_option("--seq-file", o.seq_file, "File with one sequence per line");
  check->callback([&o] { o.config.command = Command::FreeCheck; });

  auto* reach = app.add_subcommand("reach", "Products reachable from a sequence");
  add_group(reach);
  reach->add_option("--seq", o.seq, "Sequence");
  reach->add_option("--targets", o.targets, "Target elements as a sequence, e.g. \"[1, y^3]\"");
  reach->add_flag("--oracle", o.oracle, "Use the permutation brute force instead of the DP");
  reach->add_option("--sample", o.sample, "Compare DP and oracle on N random sequences");
  reach->add_option("--max-length", o.max_length, "Longest random sequence for --sample");
  reach->callback([&o] { o.config.command = Command::Reach; });

  auto* dav = app.add_subcommand("davenport", "Compute D(G)");
  add_group(dav);
  dav->add_flag("--json", o.json_flag, "Same as --format json");
  dav->callback([&o] { o.config.command = Command::Davenport; });

  auto* ext = app.add_subcommand("extremal", "Enumerate free sequences of length D(G) - 1");
  add_group(ext);
  ext->callback([&o] { o.config.command = Command::Extremal; });

  auto* ver = app.add_subcommand("verify", "Compare enumeration with a characterization");
  ver->add_option("--target", o.target, "dihedral|dicyclic|metacyclic|cyclic|weighted|cyclic-structure|minzero")
      ->required();
  ver->add_option("--param", o.params, "n, a range a..b, q,m,s (metacyclic) or a group spec (minzero)")->required();
  ver->callback([&o] { o.config.command = Command::Verify; });

  auto* rep = app.add_subcommand("report", "Summarize cached results");
  rep->callback([&o] { o.config.command = Command::Report; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'zerosum --help' for usage\n";
    return kUsage;
  }

  o.config.budget = budget;
  o.config.output_format = o.json_flag || o.format == "json" ? OutputFormat::Json
                           : o.format == "csv"               ? OutputFormat::Csv
                                                             : OutputFormat::Table;
  o.config.cache_dir = o.cache_dir.empty() ? cache::default_cache_dir() : std::filesystem::path(o.cache_dir);

  try {
    return detail::Runner(std::move(o), out, err).run();
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("zerosum");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace zerosum::cli
