#include "aspectke/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "aspectke/parser.hpp"
#include "aspectke/printer.hpp"
#include "aspectke/runtime.hpp"
#include "aspectke/validate.hpp"

namespace aspectke {

namespace {

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunConfig {
  std::string system_path;
  std::vector<std::string> aspect_paths;
  std::uint64_t seed = 0;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string trace_path;
  bool dump_final = false;
};

int cmd_run(const RunConfig& cfg, std::ostream& out) {
  SystemState state = parse_system(read_file(cfg.system_path), cfg.system_path);
  for (const std::string& p : cfg.aspect_paths) {
    std::vector<Aspect> more = parse_aspect_file(read_file(p), p);
    state.aspects.insert(state.aspects.end(), more.begin(), more.end());
  }
  RunResult result = run(std::move(state), cfg.seed, cfg.max_steps);

  std::ofstream trace_file;
  std::ostream* trace = &out;
  if (!cfg.trace_path.empty()) {
    trace_file.open(cfg.trace_path, std::ios::binary);
    if (!trace_file) throw LoadError("cannot write " + cfg.trace_path);
    trace = &trace_file;
  }
  for (const TraceEvent& e : result.trace) *trace << format_trace_event(e) << '\n';
  if (cfg.dump_final) {
    out << "-- final net (" << to_string(result.halt) << ", " << result.trace.size()
        << " steps)\n"
        << format_net(result.final_net());
  }
  return result.halt == HaltReason::Quiescent ? 0 : 2;
}

int cmd_check(const std::vector<std::string>& paths, std::ostream& out) {
  int status = 0;
  for (const std::string& path : paths) {
    try {
      std::vector<Aspect> aspects = parse_aspect_file_unchecked(read_file(path), path);
      for (const Aspect& a : aspects) {
        for (const Violation& v : validate_aspect(a)) {
          out << to_string(v) << '\n';
          status = 1;
        }
      }
    } catch (const ParseError& e) {
      out << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_analyze(const std::string& path, const std::string& function,
                const std::string& capability, std::ostream& out) {
  static const std::map<std::string, AnalysisFunction> kFunctions = {
      {"Act", AnalysisFunction::Act}, {"Loc", AnalysisFunction::Loc},
      {"LC", AnalysisFunction::LC},   {"LCc", AnalysisFunction::LCc},
      {"FV", AnalysisFunction::FV},   {"FVc", AnalysisFunction::FVc}};
  auto f = kFunctions.find(function);
  if (f == kFunctions.end()) throw LoadError("unknown analysis " + function);
  std::optional<Capability> cap;
  if (!capability.empty()) {
    cap = capability_from_string(capability);
    if (!cap) throw LoadError("unknown capability " + capability);
  }
  if (takes_capability(f->second) != cap.has_value()) {
    throw LoadError(function + (cap ? " takes no capability" : " needs a capability"));
  }
  Process p = parse_process(read_file(path), path);
  out << to_string(analyze(f->second, cap, p)) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AspectKE interpreter and policy runtime", "aspectke"};
  app.require_subcommand(1);

  RunConfig cfg;
  CLI::App* run_cmd = app.add_subcommand("run", "run a system under aspect files");
  run_cmd->add_option("system", cfg.system_path, "system file (.akl)")->required();
  run_cmd->add_option("--aspects", cfg.aspect_paths, "aspect file (.apl), repeatable");
  run_cmd->add_option("--seed", cfg.seed, "scheduler seed");
  run_cmd->add_option("--max-steps", cfg.max_steps, "step budget")->check(CLI::PositiveNumber);
  run_cmd->add_option("--trace", cfg.trace_path, "write the trace here instead of stdout");
  run_cmd->add_flag("--dump-final", cfg.dump_final, "print the final net");

  std::vector<std::string> check_paths;
  CLI::App* check_cmd = app.add_subcommand("check", "validate aspect files");
  check_cmd->add_option("paths", check_paths, "aspect files")->required();

  std::string proc_path;
  std::string function;
  std::string capability;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "run a behavior analysis");
  analyze_cmd->add_option("process", proc_path, "process file")->required();
  analyze_cmd->add_option("function", function, "Act, Loc, LC, LCc, FV or FVc")->required();
  analyze_cmd->add_option("capability", capability, "out, in, read, eval or newloc");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "aspectke: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*run_cmd) return cmd_run(cfg, out);
    if (*check_cmd) return cmd_check(check_paths, out);
    return cmd_analyze(proc_path, function, capability, out);
  } catch (const std::exception& e) {
    err << "aspectke: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace aspectke
