#pragma once

#include <string>
#include <vector>

#include "aspectke/aspect.hpp"
#include "aspectke/runtime.hpp"

namespace aspectke::testing {

std::string fixture_dir();
std::string fixture_path(const std::string& rel);
std::string read_file(const std::string& path);

struct Scenario {
  std::string name;
  std::string system;
  std::vector<std::string> aspects;
};

std::vector<Scenario> load_manifest();
const Scenario& find_scenario(const std::vector<Scenario>& all, const std::string& name);

// The system file with every listed aspect file appended to its aspects.
SystemState load_scenario(const Scenario& s);

// What `aspectke run <scenario> --seed 0 --dump-final` writes to stdout.
std::string run_scenario_cli(const Scenario& s, int* status = nullptr);

std::vector<std::string> all_fixture_files(const std::string& extension);

// Helpers over a finished run.
std::size_t count_tuples(const Net& net, const std::string& node);
bool has_tuple(const Net& net, const std::string& node, const std::vector<std::string>& fields);
bool has_nil_at(const Net& net, const std::string& node);

}  // namespace aspectke::testing
