#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "noodle/cache.hpp"
#include "noodle/errors.hpp"
#include "noodle/serialize.hpp"

using namespace noodle;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialization roundtrips") {
  PairSystem s(Word::from_string("LLRR"), Word::from_string("LRLR"));
  CHECK(pair_system_from_json(pair_system_to_json(s)) == s);

  PartialSystem p = PartialSystem::from_words(Word::from_string("RLLRL", -2),
                                              Word::from_string("LRRLL", -2));
  CHECK(partial_system_from_json(partial_system_to_json(p)) == p);

  auto meanders = enumerate_meanders(2);
  for (const Meander& m : meanders) {
    CHECK(meander_from_json(meander_to_json(m)) == m);
  }
  for (const PartialShape& shape : enumerate_partial_shapes(2)) {
    CHECK(partial_shape_from_json(partial_shape_to_json(shape)) == shape);
  }
}

TEST_CASE("enumeration cache: build, reload, invalidate") {
  TempDir dir("noodle-cache-test");
  {
    EnumerationCache cache(dir.path, 3, 3);
    CHECK(cache.meanders(2).size() == 2);
    CHECK(cache.shapes(1).size() == 2);
    CHECK_THROWS_AS(cache.meanders(4), ResourceError);
    CHECK_THROWS_AS(cache.shapes(4), ResourceError);
  }
  CHECK(fs::exists(dir.path / "meanders_k2.jsonl"));
  CHECK(fs::exists(dir.path / "manifest.json"));
  {
    // fresh handle loads from disk and can serve k=4 once caps allow
    EnumerationCache cache(dir.path, 4, 3);
    CHECK(cache.meanders(2).size() == 2);
    CHECK(cache.meanders(3).size() == 8);
  }
  {
    // a stale manifest version invalidates cleanly (rebuild, not garbage)
    std::ofstream(dir.path / "manifest.json") << "{\"format_version\": 0}\n";
    EnumerationCache cache(dir.path, 3, 3);
    CHECK(cache.meanders(2).size() == 2);
  }
}

TEST_CASE("cli: bounds, determinism, exit codes") {
  TempDir dir("noodle-cli-test");
  std::string cache_arg = "--cache-dir=" + dir.path.string();

  auto bounds = run_cli({"kappa-bounds", "--kmax", "1", "--lmax", "10", cache_arg});
  CHECK(bounds.code == 0);
  CHECK(bounds.out.find("\"lower\"") != std::string::npos);
  CHECK(bounds.out.find("\"decimal_upper\"") != std::string::npos);

  // byte-identical rerun
  auto again = run_cli({"kappa-bounds", "--kmax", "1", "--lmax", "10", cache_arg});
  CHECK(again.out == bounds.out);

  // resource error without --allow-long
  auto blocked = run_cli({"kappa-bounds", "--kmax", "4", "--lmax", "5", cache_arg});
  CHECK(blocked.code == 3);

  // usage errors
  CHECK(run_cli({"kappa-bounds", "--no-such-flag"}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({}).code == 2);

  // sampling determinism across runs
  auto s1 = run_cli({"sample-ms", "--n", "6", "--seed", "42"});
  auto s2 = run_cli({"sample-ms", "--n", "6", "--seed", "42"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  auto s3 = run_cli({"sample-ms", "--n", "6", "--seed", "43"});
  CHECK(s3.out != s1.out);

  // csv shape
  auto csv = run_cli({"sample-ms", "--n", "3", "--seed", "1", "--count", "2", "--format", "csv"});
  CHECK(csv.out.rfind("n,upper,lower\n", 0) == 0);
}

TEST_CASE("cli: estimators and lattice commands") {
  auto noodle_est = run_cli({"estimate-kappa-noodle", "--samples", "400", "--budget", "500",
                             "--seed", "5"});
  CHECK(noodle_est.code == 0);
  CHECK(noodle_est.out.find("\"low_exact\"") != std::string::npos);

  auto finite = run_cli({"estimate-kappa-finite", "--n", "50", "--samples", "50", "--seed", "5"});
  CHECK(finite.code == 0);
  CHECK(finite.out.find("\"std_error\"") != std::string::npos);

  auto explore = run_cli({"noodle-explore", "--seed", "12", "--budget", "500", "--mode", "shape"});
  CHECK(explore.code == 0);
  CHECK(explore.out.find("\"status\"") != std::string::npos);

  auto dist = run_cli({"nc-distance", "--n", "4", "--pi", "1,2,3|4", "--rho", "1,3|2|4"});
  CHECK(dist.code == 0);
  CHECK(dist.out.find("\"distance\": 1") != std::string::npos);
  CHECK(dist.out.find("\"bfs_distance\": 1") != std::string::npos);

  auto verify = run_cli({"nc-verify", "--n", "4"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("\"identity_holds\": true") != std::string::npos);

  auto experiment = run_cli({"nc-experiment", "--n", "100", "--samples", "20", "--seed", "3"});
  CHECK(experiment.code == 0);
  CHECK(experiment.out.rfind("n,seed,mean_d_over_n,mean_d0_over_n,samples\n", 0) == 0);

  auto profile = run_cli({"local-profile", "--n", "200", "--marks", "2000", "--seed", "3"});
  CHECK(profile.code == 0);
  CHECK(profile.out.find("\"tv_distance\"") != std::string::npos);
}

TEST_CASE("cli: cache subcommands and enumeration printing") {
  TempDir dir("noodle-cli-cache");
  std::string cache_arg = "--cache-dir=" + dir.path.string();

  auto build = run_cli({"cache", "build", "--kmax", "2", cache_arg});
  CHECK(build.code == 0);
  CHECK(build.out.find("\"built\"") != std::string::npos);

  auto inspect = run_cli({"cache", "inspect", cache_arg});
  CHECK(inspect.code == 0);
  CHECK(inspect.out.find("\"meanders\"") != std::string::npos);

  auto enumerate = run_cli({"enumerate-meanders", "--k", "3", cache_arg});
  CHECK(enumerate.code == 0);
  CHECK(enumerate.out.find("\"count\": 8") != std::string::npos);

  auto print = run_cli({"enumerate-open", "--k", "1", "--print", cache_arg});
  CHECK(print.code == 0);
  // one JSON record per line, two shapes
  CHECK(std::count(print.out.begin(), print.out.end(), '\n') == 2);

  // --out writes the document to a file
  fs::path out_file = dir.path / "result.json";
  auto to_file = run_cli({"enumerate-meanders", "--k", "2", cache_arg, "--out", out_file.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(out_file);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents.find("\"count\": 2") != std::string::npos);
}
