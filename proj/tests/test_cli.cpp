#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qsl/cli.hpp"

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qsl::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;

  TempFile(const std::string& name, const std::string& content)
      : path("/tmp/qsl_test_" + name) {
    std::ofstream stream(path);
    stream << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("count subcommand", "[cli]") {
  SECTION("single board, csv golden output") {
    const CliRun got = run({"count", "--n", "6", "--format", "csv"});
    CHECK(got.code == 0);
    CHECK(got.out ==
          "n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n"
          "6,4,,,,,,,0,0\n");
    CHECK(got.err.empty());
  }

  SECTION("ranges produce one record per size") {
    const CliRun got = run({"count", "--n", "1..5", "--format", "csv"});
    REQUIRE(got.code == 0);
    const auto records = qsl::parse(got.out, qsl::Format::csv);
    REQUIRE(records.size() == 5);
    const std::uint64_t expected[] = {1, 0, 0, 2, 10};
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(records[i].n == static_cast<int>(i) + 1);
      CHECK(records[i].total == expected[i]);
      CHECK_FALSE(records[i].classes.has_value());
    }
  }

  SECTION("built-in cross-check passes silently") {
    const CliRun got = run({"count", "--n", "4..10"});
    CHECK(got.code == 0);
    CHECK(got.err.empty());
  }

  SECTION("reference file that agrees") {
    const TempFile ref("ok.csv", "# source: local\n6,4\n7,40\n");
    const CliRun got = run({"count", "--n", "6..7", "--reference-file", ref.path});
    CHECK(got.code == 0);
    CHECK(got.err.empty());
  }

  SECTION("reference file that disagrees fails loudly") {
    const TempFile ref("bad.csv", "6,5\n");
    const CliRun got = run({"count", "--n", "6", "--reference-file", ref.path});
    CHECK(got.code == 1);
    CHECK(got.err.find("cross-check mismatch at n=6") != std::string::npos);
    CHECK(got.err.find("computed 4") != std::string::npos);
    CHECK(got.err.find("reference 5") != std::string::npos);
  }

  SECTION("unreadable reference file") {
    const CliRun got = run({"count", "--n", "6", "--reference-file", "/nonexistent/ref.csv"});
    CHECK(got.code == 2);
    CHECK_FALSE(got.err.empty());
  }

  SECTION("malformed reference file") {
    const TempFile ref("garbled.csv", "six,4\n");
    const CliRun got = run({"count", "--n", "6", "--reference-file", ref.path});
    CHECK(got.code == 2);
  }
}

TEST_CASE("decompose subcommand", "[cli]") {
  SECTION("csv golden output") {
    const CliRun got = run({"decompose", "--n", "5..6", "--format", "csv"});
    CHECK(got.code == 0);
    CHECK(got.out ==
          "n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n"
          "5,10,2,0,8,1,0,1,0,2\n"
          "6,4,0,4,0,0,1,0,0,0\n");
  }

  SECTION("json carries stats and verdicts") {
    const CliRun got = run({"decompose", "--n", "6", "--format", "json"});
    REQUIRE(got.code == 0);
    const qsl::ordered_json doc = qsl::ordered_json::parse(got.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["stats"]["method"] == "dual-route");
    REQUIRE(doc[0].contains("verdicts"));
    bool saw_routes = false;
    bool saw_identities = false;
    for (const auto& verdict : doc[0]["verdicts"]) {
      if (verdict["name"] == "routes_agree") saw_routes = verdict["pass"] == true;
      if (verdict["name"] == "class_identities") saw_identities = verdict["pass"] == true;
    }
    CHECK(saw_routes);
    CHECK(saw_identities);
  }

  SECTION("boards below the class threshold are rejected") {
    const CliRun got = run({"decompose", "--n", "1"});
    CHECK(got.code == 2);
    CHECK_FALSE(got.err.empty());
  }

  SECTION("boards beyond the exhaustive cap are rejected") {
    const CliRun got = run({"decompose", "--n", "14"});
    CHECK(got.code == 2);
  }

  SECTION("garbage sizes are usage errors") {
    CHECK(run({"decompose", "--n", "banana"}).code == 2);
    CHECK(run({"decompose", "--n", "6..4"}).code == 2);
    CHECK(run({"decompose", "--n", "0"}).code == 2);
  }
}

TEST_CASE("verify subcommand", "[cli]") {
  SECTION("clean sweep up to 8") {
    const CliRun got = run({"verify", "--n-max", "8", "--format", "json"});
    REQUIRE(got.code == 0);
    const qsl::ordered_json doc = qsl::ordered_json::parse(got.out);
    REQUIRE(doc.size() > 0);
    std::vector<std::string> names;
    for (const auto& verdict : doc) {
      CHECK(verdict["pass"] == true);
      names.push_back(verdict["name"].get<std::string>());
    }
    for (const char* expected : {"mod2", "mod4", "mod4_excluded", "fr_empty", "fr_mod4",
                                 "evenness_pairing", "no_reflection_fixed", "fr_sum",
                                 "mirror_buckets", "border_pairing",
                                 "border_boundary_empty_complement"}) {
      CAPTURE(expected);
      CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
  }

  SECTION("table output mentions no failures") {
    const CliRun got = run({"verify", "--n-max", "6"});
    CHECK(got.code == 0);
    CHECK(got.out.find("FAIL") == std::string::npos);
    CHECK(got.err.empty());
  }

  SECTION("bounds") {
    CHECK(run({"verify", "--n-max", "1"}).code == 2);
    CHECK(run({"verify", "--n-max", "14"}).code == 2);
  }
}

TEST_CASE("buckets subcommand", "[cli]") {
  SECTION("5x5 lists every boundary index") {
    const CliRun got = run({"buckets", "--n", "5", "--format", "csv"});
    REQUIRE(got.code == 0);
    const auto lines = [&] {
      std::vector<std::string> out;
      std::istringstream stream(got.out);
      for (std::string line; std::getline(stream, line);) out.push_back(line);
      return out;
    }();
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,ell,completions,complements,mirror_partner,pairing_ok");
    CHECK(lines[2] == "5,2,1,1,1,0");
    CHECK(lines[3] == "5,3,0,0,0,1");
  }

  SECTION("12x12 known bucket row") {
    const CliRun got = run({"buckets", "--n", "12", "--format", "csv"});
    REQUIRE(got.code == 0);
    CHECK(got.out.find("12,5,4,4,4,1\n") != std::string::npos);
    CHECK(got.code == 0);
  }

  SECTION("sizes without quarter-turn structure are rejected") {
    CHECK(run({"buckets", "--n", "6"}).code == 2);
    CHECK(run({"buckets", "--n", "3"}).code == 2);
  }
}

TEST_CASE("thread handling", "[cli]") {
  SECTION("output is byte-identical across thread counts") {
    const CliRun one = run({"decompose", "--n", "2..8", "--format", "json", "--threads", "1"});
    const CliRun two = run({"decompose", "--n", "2..8", "--format", "json", "--threads", "2"});
    const CliRun eight = run({"decompose", "--n", "2..8", "--format", "json", "--threads", "8"});
    REQUIRE(one.code == 0);
    CHECK(one.out == two.out);
    CHECK(one.out == eight.out);
  }

  SECTION("bad thread counts are usage errors") {
    CHECK(run({"count", "--n", "6", "--threads", "0"}).code == 2);
    CHECK(run({"count", "--n", "6", "--threads", "-2"}).code == 2);
    CHECK(run({"count", "--n", "6", "--threads", "abc"}).code == 2);
  }

  SECTION("environment default") {
    ::setenv("QSL_THREADS", "2", 1);
    CHECK(run({"count", "--n", "6"}).code == 0);
    ::setenv("QSL_THREADS", "banana", 1);
    CHECK(run({"count", "--n", "6"}).code == 2);
    CHECK(run({"count", "--n", "6", "--threads", "1"}).code == 0);
    ::unsetenv("QSL_THREADS");
  }
}

TEST_CASE("usage and capacity", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--n", "6", "--bogus"}).code == 2);
  CHECK(run({"count", "--n", "6", "--format", "yaml"}).code == 2);

  SECTION("help is not an error") {
    const CliRun top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("count") != std::string::npos);
    const CliRun sub = run({"count", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--n") != std::string::npos);
  }

  SECTION("over-limit cap values warn and clamp") {
    const CliRun got = run({"count", "--n", "6", "--cap", "20"});
    CHECK(got.code == 0);
    CHECK(got.err.find("warning") != std::string::npos);
    CHECK(got.err.find("clamp") != std::string::npos);
  }

  SECTION("cap below the requested size refuses the search") {
    const CliRun got = run({"count", "--n", "12", "--cap", "10"});
    CHECK(got.code == 2);
    CHECK_FALSE(got.err.empty());
  }
}
