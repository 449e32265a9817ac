#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aspectke/cli.hpp"
#include "aspectke/parser.hpp"

namespace fs = std::filesystem;

namespace aspectke::testing {

std::string fixture_dir() { return ASPECTKE_FIXTURE_DIR; }

std::string fixture_path(const std::string& rel) { return fixture_dir() + "/" + rel; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Scenario> load_manifest() {
  std::istringstream in(read_file(fixture_path("MANIFEST")));
  std::vector<Scenario> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    Scenario s;
    if (!(words >> s.name >> s.system)) continue;
    for (std::string a; words >> a;) s.aspects.push_back(a);
    out.push_back(std::move(s));
  }
  return out;
}

const Scenario& find_scenario(const std::vector<Scenario>& all, const std::string& name) {
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const Scenario& s) { return s.name == name; });
  if (it == all.end()) throw std::runtime_error("no scenario " + name);
  return *it;
}

SystemState load_scenario(const Scenario& s) {
  std::string path = fixture_path(s.system);
  SystemState state = parse_system(read_file(path), path);
  for (const auto& a : s.aspects) {
    std::string apath = fixture_path(a);
    for (auto& asp : parse_aspect_file(read_file(apath), apath)) {
      state.aspects.push_back(std::move(asp));
    }
  }
  return state;
}

std::string run_scenario_cli(const Scenario& s, int* status) {
  std::vector<std::string> args = {"run", fixture_path(s.system)};
  for (const auto& a : s.aspects) {
    args.push_back("--aspects");
    args.push_back(fixture_path(a));
  }
  args.insert(args.end(), {"--seed", "0", "--dump-final"});
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  if (status) *status = rc;
  return out.str();
}

std::vector<std::string> all_fixture_files(const std::string& extension) {
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(fixture_dir())) {
    if (e.is_regular_file() && e.path().extension() == extension) {
      out.push_back(e.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_tuples(const Net& net, const std::string& node) {
  return std::count_if(net.items.begin(), net.items.end(), [&](const LocatedItem& i) {
    return i.node == node && i.is_tuple();
  });
}

bool has_tuple(const Net& net, const std::string& node, const std::vector<std::string>& fields) {
  return std::any_of(net.items.begin(), net.items.end(), [&](const LocatedItem& i) {
    return i.node == node && i.is_tuple() && i.as_tuple().fields == fields;
  });
}

bool has_nil_at(const Net& net, const std::string& node) {
  return std::any_of(net.items.begin(), net.items.end(), [&](const LocatedItem& i) {
    return i.node == node && i.is_process() && i.as_process().is_nil();
  });
}

}  // namespace aspectke::testing
