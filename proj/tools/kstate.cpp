#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "kstate/census.hpp"
#include "kstate/commands.hpp"
#include "kstate/error.hpp"
#include "kstate/report.hpp"

namespace {

int run_with_input(const std::string& path, const auto& command) {
  std::string text;
  try {
    text = kstate::read_input(path);
  } catch (const kstate::Error& e) {
    std::cerr << "error: " << kstate::to_string(e.kind()) << ": " << e.what() << '\n';
    return kstate::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return command(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman-state tools for knot diagrams: delta-spread vs dealternating number"};
  app.require_subcommand(1);

  const std::uint64_t env_cap = kstate::max_states_from_env();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  std::string input;
  auto* validate = app.add_subcommand("validate", "parse a diagram or census and run structural checks");
  validate->add_option("input", input, "PD / Gauss / census file, or - for stdin")->required();

  kstate::AnalyzeOptions analyze_opts;
  analyze_opts.max_states = env_cap;
  bool all_edges = false, text_out = false, json_out = false;
  int edge = 0;
  auto* analyze = app.add_subcommand("analyze", "enumerate states and report spreads, dalt, beta, Alexander");
  analyze->add_option("input", input, "PD / Gauss / census file, or - for stdin")->required();
  auto* edge_opt = analyze->add_option("--edge", edge, "single marked edge label");
  auto* all_opt = analyze->add_flag("--all-edges", all_edges, "every eligible marked edge (default)");
  edge_opt->excludes(all_opt);
  auto* json_flag = analyze->add_flag("--json", json_out, "JSON report (default)");
  analyze->add_flag("--text", text_out, "plain-text report")->excludes(json_flag);
  analyze->add_option("--max-states", analyze_opts.max_states, "state enumeration cap per marked edge");
  analyze->add_option("--jobs", analyze_opts.jobs, "worker threads for census input")->capture_default_str();

  kstate::VerifyCommandOptions verify_opts;
  verify_opts.max_states = env_cap;
  verify_opts.jobs = hw;
  std::string tables_path;
  int max_crossings = 0;
  auto* verify = app.add_subcommand("verify", "run every check over a census; nonzero exit on any violation");
  verify->add_option("input", input, "census file, or - for stdin")->required();
  verify->add_flag("--deep", verify_opts.deep, "all-pairs four-case decomposition checks");
  auto* max_opt = verify->add_option("--max-crossings", max_crossings, "skip diagrams with more crossings");
  verify->add_option("--tables", tables_path, "grading tables JSON overriding the built-in ones");
  verify->add_flag("--json", verify_opts.json, "JSON report instead of text");
  verify->add_option("--max-states", verify_opts.max_states, "state enumeration cap per marked edge");
  verify->add_option("--jobs", verify_opts.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*validate) {
    return run_with_input(input, [](const std::string& text) {
      return kstate::cmd_validate(text, std::cout, std::cerr);
    });
  }
  if (*analyze) {
    if (*edge_opt) analyze_opts.edge = edge;
    analyze_opts.json = !text_out;
    return run_with_input(input, [&](const std::string& text) {
      return kstate::cmd_analyze(text, analyze_opts, std::cout, std::cerr);
    });
  }
  if (*max_opt) verify_opts.max_crossings = max_crossings;
  if (!tables_path.empty()) {
    const int status = run_with_input(tables_path, [&](const std::string& text) {
      try {
        verify_opts.tables = kstate::parse_tables(text);
        return 0;
      } catch (const kstate::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kstate::exit_code(e.kind());
      }
    });
    if (status != 0) return status;
  }
  return run_with_input(input, [&](const std::string& text) {
    return kstate::cmd_verify(text, verify_opts, std::cout, std::cerr);
  });
}
