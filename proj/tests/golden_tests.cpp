#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "aspectke/cli.hpp"
#include "aspectke/parser.hpp"
#include "aspectke/validate.hpp"
#include "support.hpp"

using namespace aspectke;
using namespace aspectke::testing;

TEST_CASE("every manifest scenario replays its golden") {
  auto scenarios = load_manifest();
  CHECK(scenarios.size() >= 40);
  for (const auto& s : scenarios) {
    CAPTURE(s.name);
    int status = -1;
    std::string got = run_scenario_cli(s, &status);
    CHECK(status == 0);
    CHECK(got == read_file(fixture_path(s.name + ".expected")));
  }
}

TEST_CASE("every scenario file is listed") {
  auto scenarios = load_manifest();
  for (const auto& path : all_fixture_files(".expected")) {
    std::string rel = path.substr(fixture_dir().size() + 1);
    rel.resize(rel.size() - std::string(".expected").size());
    bool listed = false;
    for (const auto& s : scenarios) listed = listed || s.name == rel;
    CAPTURE(rel);
    CHECK(listed);
  }
}

TEST_CASE("fixture systems validate") {
  for (const auto& path : all_fixture_files(".akl")) {
    CAPTURE(path);
    SystemState s = parse_system_unchecked(read_file(path), path);
    CHECK(validate_system(s).empty());
  }
}

TEST_CASE("check accepts every fixture aspect file") {
  std::vector<std::string> args = {"check"};
  for (const auto& p : all_fixture_files(".apl")) args.push_back(p);
  std::ostringstream out, err;
  CHECK(run_cli(args, out, err) == 0);
  CHECK(out.str().empty());
}

TEST_CASE("other seeds reach the same final net on sequential scenarios") {
  auto scenarios = load_manifest();
  for (const char* name : {"running/running_example", "advice/a1_out", "continuation/a2_read"}) {
    const Scenario& s = find_scenario(scenarios, name);
    std::string golden = run_scenario_cli(s);
    for (int seed : {1, 7, 12345}) {
      std::vector<std::string> args = {"run", fixture_path(s.system), "--seed",
                                       std::to_string(seed), "--dump-final"};
      for (const auto& a : s.aspects) {
        args.push_back("--aspects");
        args.push_back(fixture_path(a));
      }
      std::ostringstream out, err;
      CHECK(run_cli(args, out, err) == 0);
      CHECK(out.str() == golden);
    }
  }
}
