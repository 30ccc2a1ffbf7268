#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>

#include "noodle/cache.hpp"
#include "noodle/enumeration.hpp"
#include "noodle/errors.hpp"
#include "noodle/faces.hpp"
#include "noodle/kappa.hpp"
#include "noodle/nclattice.hpp"
#include "noodle/sampling.hpp"
#include "noodle/serialize.hpp"
#include "noodle/version.hpp"

namespace noodle::cli {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json rational_json(const Rational& r) {
  return json{{"num", r.num().str()}, {"den", r.den().str()}};
}

struct CommandOutput {
  std::optional<json> doc;  // single JSON document
  std::string text;         // raw payload (csv / jsonl) when doc is empty
};

struct GlobalOpts {
  std::string out_path;
  bool timing = false;
  int threads = 0;
};

int enumeration_cap_meanders(bool allow_long) { return allow_long ? kMeanderEnumerationCap : 3; }
int enumeration_cap_shapes(bool allow_long) { return allow_long ? kPartialShapeEnumerationCap : 3; }

EnumerationCache open_cache(const std::string& dir_flag, bool allow_long) {
  auto dir = EnumerationCache::resolve_dir(
      dir_flag.empty() ? std::nullopt : std::optional<std::string>(dir_flag));
  return EnumerationCache(dir, enumeration_cap_meanders(allow_long),
                          enumeration_cap_shapes(allow_long));
}

json exploration_json(const ExplorationResult& r) {
  json j;
  j["status"] = r.status == ExplorationStatus::Closed ? "closed" : "censored";
  j["points"] = r.points;
  j["size"] = r.size;
  j["leftmost_is_zero"] = r.leftmost_is_zero;
  j["draws_used"] = r.draws_used;
  if (r.escape_index) j["K"] = *r.escape_index;
  if (r.shape) j["shape"] = json::parse(meander_to_json(*r.shape));
  if (r.partial_shape) j["partial_shape"] = json::parse(partial_shape_to_json(*r.partial_shape));
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"meandric systems, the infinite noodle, and rigorous kappa bounds"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts global;
  app.add_option("--out", global.out_path, "write the result document to this path");
  app.add_flag("--timing", global.timing, "embed wall-clock milliseconds in JSON output");
  app.add_option("--threads", global.threads, "worker threads (0 = hardware)");

  CommandOutput output;

  // ---- sample-ms ----------------------------------------------------
  {
    auto* sc = app.add_subcommand("sample-ms", "sample uniform meandric systems");
    auto n = std::make_shared<std::int64_t>(4);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto count = std::make_shared<std::int64_t>(1);
    auto format = std::make_shared<std::string>("json");
    sc->add_option("--n", *n, "half-size (points 0..2n-1)")->required();
    sc->add_option("--seed", *seed, "random seed (default 0)");
    sc->add_option("--count", *count, "how many systems to emit");
    sc->add_option("--format", *format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sc->callback([&, n, seed, count, format] {
      RandomSource rng(*seed);
      if (*format == "csv") {
        std::string text = "n,upper,lower\n";
        for (std::int64_t i = 0; i < *count; ++i) {
          PairSystem s = sample_meandric_system(*n, rng);
          text += std::to_string(s.n()) + "," + s.upper().to_string() + "," +
                  s.lower().to_string() + "\n";
        }
        output.text = std::move(text);
      } else if (*count == 1) {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = {{"command", "sample-ms"}, {"n", *n}, {"seed", *seed}, {"count", 1}};
        doc["system"] = json::parse(pair_system_to_json(sample_meandric_system(*n, rng)));
        output.doc = doc;
      } else {
        std::string text;
        for (std::int64_t i = 0; i < *count; ++i) {
          text += pair_system_to_json(sample_meandric_system(*n, rng)) + "\n";
        }
        output.text = std::move(text);
      }
    });
  }

  // ---- estimate-kappa-finite ----------------------------------------
  {
    auto* sc = app.add_subcommand("estimate-kappa-finite", "average cc/n over sampled systems");
    auto n = std::make_shared<std::int64_t>(10000);
    auto samples = std::make_shared<std::int64_t>(200);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto format = std::make_shared<std::string>("json");
    sc->add_option("--n", *n, "system half-size")->required();
    sc->add_option("--samples", *samples, "number of sampled systems");
    sc->add_option("--seed", *seed, "random seed (default 0)");
    sc->add_option("--format", *format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sc->callback([&, n, samples, seed, format] {
      auto est = estimate_kappa_finite(*n, *samples, *seed, global.threads);
      if (*format == "csv") {
        output.text = "n,samples,seed,point,std_error\n" + std::to_string(est.n) + "," +
                      std::to_string(est.samples) + "," + std::to_string(est.seed) + "," +
                      fmt_double(est.mean) + "," + fmt_double(est.std_error) + "\n";
      } else {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = {{"command", "estimate-kappa-finite"},
                         {"n", est.n},
                         {"samples", est.samples},
                         {"seed", est.seed},
                         {"threads", global.threads}};
        doc["point"] = est.mean;
        doc["std_error"] = est.std_error;
        doc["mean_exact"] = rational_json(est.mean_exact);
        output.doc = doc;
      }
    });
  }

  // ---- estimate-kappa-noodle ----------------------------------------
  {
    auto* sc = app.add_subcommand("estimate-kappa-noodle",
                                  "Monte Carlo 2/|C0| with a censoring bracket");
    auto samples = std::make_shared<std::int64_t>(100000);
    auto budget = std::make_shared<std::int64_t>(10000);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto format = std::make_shared<std::string>("json");
    sc->add_option("--samples", *samples, "number of independent noodles");
    sc->add_option("--budget", *budget, "letter-draw budget per exploration (default 10000)");
    sc->add_option("--seed", *seed, "random seed (default 0)");
    sc->add_option("--format", *format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sc->callback([&, samples, budget, seed, format] {
      auto est = estimate_kappa_noodle(*samples, *budget, *seed, global.threads);
      if (*format == "csv") {
        output.text = "samples,budget,seed,censored,point,low,high\n" +
                      std::to_string(est.samples) + "," + std::to_string(est.budget) + "," +
                      std::to_string(est.seed) + "," + std::to_string(est.censored) + "," +
                      fmt_double(est.point) + "," + fmt_double(est.low) + "," +
                      fmt_double(est.high) + "\n";
      } else {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = {{"command", "estimate-kappa-noodle"},
                         {"samples", est.samples},
                         {"budget", est.budget},
                         {"seed", est.seed},
                         {"threads", global.threads}};
        doc["point"] = est.point;
        doc["low"] = est.low;
        doc["high"] = est.high;
        doc["low_exact"] = rational_json(est.low_exact);
        doc["high_exact"] = rational_json(est.high_exact);
        doc["samples"] = est.samples;
        doc["censored"] = est.censored;
        doc["budget"] = est.budget;
        doc["seed"] = est.seed;
        output.doc = doc;
      }
    });
  }

  // ---- noodle-explore -----------------------------------------------
  {
    auto* sc = app.add_subcommand("noodle-explore", "explore one seeded infinite noodle");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto budget = std::make_shared<std::int64_t>(10000);
    auto start = std::make_shared<std::int64_t>(0);
    auto mode = std::make_shared<std::string>("component");
    sc->add_option("--seed", *seed, "random seed (default 0)");
    sc->add_option("--budget", *budget, "letter-draw budget (default 10000)");
    sc->add_option("--start", *start, "start position (component mode)");
    sc->add_option("--mode", *mode, "component (C0 and its shape) or shape (K and P0)")
        ->check(CLI::IsMember({"component", "shape"}));
    sc->callback([&, seed, budget, start, mode] {
      NoodleOracle oracle(*seed);
      ExplorationResult r = *mode == "component"
                                ? explore_component(oracle, *start, *budget)
                                : explore_partial_shape(oracle, *budget);
      json doc;
      doc["version"] = kVersion;
      doc["config"] = {{"command", "noodle-explore"},
                       {"seed", *seed},
                       {"budget", *budget},
                       {"start", *start},
                       {"mode", *mode}};
      doc["result"] = exploration_json(r);
      output.doc = doc;
    });
  }

  // ---- enumerate-meanders / enumerate-open --------------------------
  {
    auto* sc = app.add_subcommand("enumerate-meanders", "enumerate meanders of half-size k");
    auto k = std::make_shared<int>(1);
    auto print = std::make_shared<bool>(false);
    auto allow_long = std::make_shared<bool>(false);
    auto cache_dir = std::make_shared<std::string>();
    sc->add_option("--k", *k, "half-size")->required();
    sc->add_flag("--print", *print, "emit one JSON record per meander");
    sc->add_flag("--allow-long", *allow_long, "permit long-running enumeration (k >= 4)");
    sc->add_option("--cache-dir", *cache_dir, "enumeration cache directory");
    sc->callback([&, k, print, allow_long, cache_dir] {
      EnumerationCache cache = open_cache(*cache_dir, *allow_long);
      auto meanders = cache.meanders(*k);
      if (*print) {
        std::string text;
        for (const Meander& m : meanders) text += meander_to_json(m) + "\n";
        output.text = std::move(text);
      } else {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = {{"command", "enumerate-meanders"}, {"k", *k}, {"allow_long", *allow_long}};
        doc["k"] = *k;
        doc["points"] = 2 * *k;
        doc["count"] = meanders.size();
        output.doc = doc;
      }
    });
  }
  {
    auto* sc = app.add_subcommand("enumerate-open", "enumerate partial shapes on 2k+1 points");
    auto k = std::make_shared<int>(1);
    auto print = std::make_shared<bool>(false);
    auto allow_long = std::make_shared<bool>(false);
    auto cache_dir = std::make_shared<std::string>();
    sc->add_option("--k", *k, "half-size (2k+1 points)")->required();
    sc->add_flag("--print", *print, "emit one JSON record per shape");
    sc->add_flag("--allow-long", *allow_long, "permit long-running enumeration (k >= 4)");
    sc->add_option("--cache-dir", *cache_dir, "enumeration cache directory");
    sc->callback([&, k, print, allow_long, cache_dir] {
      EnumerationCache cache = open_cache(*cache_dir, *allow_long);
      auto shapes = cache.shapes(*k);
      if (*print) {
        std::string text;
        for (const PartialShape& p : shapes) text += partial_shape_to_json(p) + "\n";
        output.text = std::move(text);
      } else {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = {{"command", "enumerate-open"}, {"k", *k}, {"allow_long", *allow_long}};
        doc["k"] = *k;
        doc["points"] = 2 * *k + 1;
        doc["count"] = shapes.size();
        output.doc = doc;
      }
    });
  }

  // ---- kappa bounds ---------------------------------------------------
  auto add_kappa_command = [&](const std::string& name, bool lower_side, bool upper_side,
                               const std::string& help) {
    auto* sc = app.add_subcommand(name, help);
    auto k_max = std::make_shared<int>(3);
    auto l_max = std::make_shared<int>(30);
    auto allow_long = std::make_shared<bool>(false);
    auto cache_dir = std::make_shared<std::string>();
    sc->add_option("--kmax", *k_max, "max meander/shape half-size (default 3)");
    sc->add_option("--lmax", *l_max, "per-gap truncation (default 30)");
    sc->add_flag("--allow-long", *allow_long, "permit the long k >= 4 evaluation");
    sc->add_option("--cache-dir", *cache_dir, "enumeration cache directory");
    sc->callback([&, k_max, l_max, allow_long, cache_dir, lower_side, upper_side, name] {
      EnumerationCache cache = open_cache(*cache_dir, *allow_long);
      TruncationSpec spec{*k_max, *l_max};
      json doc;
      doc["version"] = kVersion;
      doc["config"] = {{"command", name},
                       {"k_max", spec.k_max},
                       {"l_max", spec.l_max},
                       {"allow_long", *allow_long},
                       {"threads", global.threads}};
      doc["spec"] = {{"k_max", spec.k_max}, {"l_max", spec.l_max}};
      json per_k_json = json::array();
      if (lower_side) {
        std::vector<PerKContribution> per_k;
        Rational lower = kappa_lower(spec, cache, global.threads, &per_k);
        doc["lower"] = rational_json(lower);
        doc["decimal_lower"] = lower.decimal(12, RoundDir::Down);
        for (const auto& c : per_k) {
          per_k_json.push_back({{"k", c.k},
                                {"meanders", c.items},
                                {"lower_contribution", rational_json(c.value)}});
        }
      }
      if (upper_side) {
        std::vector<PerKContribution> per_k;
        Rational upper = kappa_upper(spec, cache, global.threads, &per_k);
        doc["upper"] = rational_json(upper);
        doc["decimal_upper"] = upper.decimal(12, RoundDir::Up);
        for (const auto& c : per_k) {
          per_k_json.push_back({{"k", c.k},
                                {"shapes", c.items},
                                {"upper_subtracted", rational_json(c.value)}});
        }
      }
      doc["per_k"] = per_k_json;
      output.doc = doc;
    });
  };
  add_kappa_command("kappa-lower", true, false, "rigorous truncated lower bound for kappa");
  add_kappa_command("kappa-upper", false, true, "rigorous truncated upper bound for kappa");
  add_kappa_command("kappa-bounds", true, true, "rigorous lower and upper bounds for kappa");

  // ---- nc-* -----------------------------------------------------------
  {
    auto* sc = app.add_subcommand("nc-distance", "Hasse-diagram distance via the meandric identity");
    auto n = std::make_shared<int>(4);
    auto pi_text = std::make_shared<std::string>();
    auto rho_text = std::make_shared<std::string>();
    sc->add_option("--n", *n, "ground-set size")->required();
    sc->add_option("--pi", *pi_text, "partition, e.g. \"1,2,3|4\"")->required();
    sc->add_option("--rho", *rho_text, "partition, e.g. \"1,3|2|4\"")->required();
    sc->callback([&, n, pi_text, rho_text] {
      NCPartition pi = NCPartition::parse(*pi_text, *n);
      NCPartition rho = NCPartition::parse(*rho_text, *n);
      json doc;
      doc["version"] = kVersion;
      doc["config"] = {{"command", "nc-distance"}, {"n", *n}, {"pi", pi.to_string()}, {"rho", rho.to_string()}};
      doc["distance"] = distance_via_cc(pi, rho);
      if (*n <= kHasseCap) doc["bfs_distance"] = hasse_distance(pi, rho);
      output.doc = doc;
    });
  }
  {
    auto* sc = app.add_subcommand("nc-verify",
                                  "check d = n - cc against the BFS oracle on every pair");
    auto n = std::make_shared<int>(4);
    sc->add_option("--n", *n, "ground-set size (BFS-capped)")->required();
    sc->callback([&, n] {
      auto all = all_noncrossing_partitions(*n);
      std::int64_t pairs = 0;
      bool holds = true;
      for (const NCPartition& pi : all) {
        for (const NCPartition& rho : all) {
          ++pairs;
          if (distance_via_cc(pi, rho) != hasse_distance(pi, rho)) holds = false;
        }
      }
      json doc;
      doc["version"] = kVersion;
      doc["config"] = {{"command", "nc-verify"}, {"n", *n}};
      doc["pairs"] = pairs;
      doc["identity_holds"] = holds;
      output.doc = doc;
    });
  }
  {
    auto* sc = app.add_subcommand("nc-experiment", "mean rescaled distances in NC(n)");
    auto n = std::make_shared<std::int64_t>(1000);
    auto samples = std::make_shared<std::int64_t>(100);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto format = std::make_shared<std::string>("csv");
    sc->add_option("--n", *n, "ground-set size")->required();
    sc->add_option("--samples", *samples, "number of sampled pairs");
    sc->add_option("--seed", *seed, "random seed (default 0)");
    sc->add_option("--format", *format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
    sc->callback([&, n, samples, seed, format] {
      auto r = typical_distance_experiment(*n, *samples, *seed);
      if (*format == "json") {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = {{"command", "nc-experiment"},
                         {"n", r.n},
                         {"samples", r.samples},
                         {"seed", r.seed}};
        doc["mean_d_over_n"] = r.mean_d_over_n;
        doc["mean_d0_over_n"] = r.mean_d0_over_n;
        output.doc = doc;
      } else {
        output.text = "n,seed,mean_d_over_n,mean_d0_over_n,samples\n" + std::to_string(r.n) + "," +
                      std::to_string(r.seed) + "," + fmt_double(r.mean_d_over_n) + "," +
                      fmt_double(r.mean_d0_over_n) + "," + std::to_string(r.samples) + "\n";
      }
    });
  }

  // ---- local-profile --------------------------------------------------
  {
    auto* sc = app.add_subcommand("local-profile",
                                  "TV distance of radius-k patterns to the fair product law");
    auto n = std::make_shared<std::int64_t>(10000);
    auto radius = std::make_shared<int>(1);
    auto marks = std::make_shared<std::int64_t>(100000);
    auto seed = std::make_shared<std::uint64_t>(0);
    sc->add_option("--n", *n, "system half-size")->required();
    sc->add_option("--radius", *radius, "pattern radius k (default 1)");
    sc->add_option("--marks", *marks, "number of uniform marks");
    sc->add_option("--seed", *seed, "random seed (default 0)");
    sc->callback([&, n, radius, marks, seed] {
      auto r = local_profile(*n, *radius, *marks, *seed);
      json doc;
      doc["version"] = kVersion;
      doc["config"] = {{"command", "local-profile"},
                       {"n", r.n},
                       {"radius", r.radius},
                       {"marks", r.marks},
                       {"seed", r.seed}};
      doc["tv_distance"] = r.tv_distance;
      output.doc = doc;
    });
  }

  // ---- cache ----------------------------------------------------------
  {
    auto* sc = app.add_subcommand("cache", "build or inspect the enumeration cache");
    auto* build = sc->add_subcommand("build", "enumerate and store meanders and shapes");
    auto k_max = std::make_shared<int>(3);
    auto meanders_only = std::make_shared<bool>(false);
    auto shapes_only = std::make_shared<bool>(false);
    auto allow_long = std::make_shared<bool>(false);
    auto cache_dir = std::make_shared<std::string>();
    build->add_option("--kmax", *k_max, "build enumerations for k = 1..kmax");
    build->add_flag("--meanders-only", *meanders_only, "skip partial shapes");
    build->add_flag("--shapes-only", *shapes_only, "skip meanders");
    build->add_flag("--allow-long", *allow_long, "permit k >= 4");
    build->add_option("--cache-dir", *cache_dir, "enumeration cache directory");
    build->callback([&, k_max, meanders_only, shapes_only, allow_long, cache_dir] {
      EnumerationCache cache = open_cache(*cache_dir, *allow_long);
      json built = json::array();
      for (int k = 1; k <= *k_max; ++k) {
        json entry;
        entry["k"] = k;
        if (!*shapes_only) entry["meanders"] = cache.meanders(k).size();
        if (!*meanders_only) entry["shapes"] = cache.shapes(k).size();
        built.push_back(entry);
      }
      json doc;
      doc["version"] = kVersion;
      doc["config"] = {{"command", "cache build"},
                       {"k_max", *k_max},
                       {"allow_long", *allow_long},
                       {"dir", cache.dir().string()}};
      doc["built"] = built;
      output.doc = doc;
    });
    auto* inspect = sc->add_subcommand("inspect", "print the cache manifest");
    auto inspect_dir = std::make_shared<std::string>();
    inspect->add_option("--cache-dir", *inspect_dir, "enumeration cache directory");
    inspect->callback([&, inspect_dir] {
      EnumerationCache cache = open_cache(*inspect_dir, false);
      json doc;
      doc["version"] = kVersion;
      doc["config"] = {{"command", "cache inspect"}, {"dir", cache.dir().string()}};
      doc["manifest"] = json::parse(cache.manifest_text());
      output.doc = doc;
    });
    sc->require_subcommand(1);
  }

  auto start_time = std::chrono::steady_clock::now();
  try {
    // CLI11 consumes a reversed argv-style vector
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run 'noodle --help' or 'noodle <command> --help' for usage\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start_time)
                     .count();

  std::string payload;
  if (output.doc) {
    if (global.timing) (*output.doc)["wall_ms"] = elapsed;
    payload = output.doc->dump(2) + "\n";
  } else {
    payload = output.text;
  }
  if (global.timing) err << "[noodle] wall clock: " << elapsed << " ms\n";

  if (!global.out_path.empty()) {
    std::ofstream file(global.out_path);
    if (!file) {
      err << "error: cannot open output path " << global.out_path << "\n";
      return 1;
    }
    file << payload;
  } else {
    out << payload;
  }
  return 0;
}

}  // namespace noodle::cli
