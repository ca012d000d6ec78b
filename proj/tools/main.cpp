/// @file main.cpp
/// Command-line driver: one subcommand per verification scenario, exact
/// reports in JSON or text, deterministic under a fixed seed.
/// Exit codes: 0 all checks pass, 1 any check fails (or a computation
/// aborts), 2 usage or parse error, 3 inconclusive checks only.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moducert/errors.hpp"
#include "moducert/report.hpp"
#include "moducert/scenario.hpp"
#include "moducert/transform.hpp"
#include "moducert/version.hpp"

namespace {

struct OutputOpts {
  std::string out;
  std::string format = "json";
};

int emit(const moducert::Report& rep, const OutputOpts& opts) {
  const std::string body = opts.format == "text" ? rep.to_text() : rep.to_json();
  if (opts.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open --out path '" << opts.out << "'\n";
      return 2;
    }
    file << body;
  }
  return rep.exit_code();
}

moducert::ResolutionGraph load_graph(const std::string& graph_path,
                                     const std::string& builtin, int d) {
  if (!graph_path.empty() && !builtin.empty()) {
    throw moducert::UsageError("pass either --graph or --scenario, not both");
  }
  if (!graph_path.empty()) {
    std::ifstream file(graph_path, std::ios::binary);
    if (!file) {
      throw moducert::UsageError("cannot read graph file '" + graph_path + "'");
    }
    const std::string text{std::istreambuf_iterator<char>(file),
                           std::istreambuf_iterator<char>()};
    return moducert::ResolutionGraph::from_json_text(text);
  }
  if (!builtin.empty()) return moducert::builtin_graph(builtin, d);
  throw moducert::UsageError(
      "a graph is required: --graph <file> or --scenario <2c|picard1|chain|zero>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification scenarios for rank-two degeneration moduli"};
  app.set_version_flag("--version",
                       std::string(moducert::kToolName) + " " + moducert::kToolVersion);
  app.require_subcommand(1);

  OutputOpts output;
  std::uint64_t seed = 0;
  std::string strategy = "lex";
  std::string graph_path;
  std::string builtin;
  int d = 1;
  int d_max = 5;
  int trials = 20;
  int chains = 200;
  int m_max = 5;
  int r_max = 5;
  std::vector<int> ds;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", output.out, "write the report to this path");
    sub->add_option("--format", output.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "random seed recorded in the report");
  };
  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_path, "resolution graph JSON file");
    sub->add_option("--scenario", builtin, "built-in graph: 2c, picard1, chain, zero");
    sub->add_option("--d", d, "parameter of the built-in graph")->check(CLI::Range(1, 64));
    sub->add_option("--strategy", strategy, "component processing order")
        ->check(CLI::IsMember({"lex", "max-mult"}));
  };

  CLI::App* gamma = app.add_subcommand("gamma", "kernel dimensions and family limits");
  gamma->add_option("--d-max", d_max, "largest algebra parameter")->check(CLI::Range(1, 10));
  gamma->add_option("--trials", trials, "samples per d")->check(CLI::Range(1, 10000));
  add_seed(gamma);
  add_output(gamma);

  CLI::App* chart = app.add_subcommand("chart", "chart battery at the base kernel");
  chart->add_option("--d", d, "algebra parameter")->check(CLI::Range(1, 6));
  add_seed(chart);
  add_output(chart);

  CLI::App* transition = app.add_subcommand("transition", "chart transition certificates");
  transition->add_option("--d-max", d_max, "largest algebra parameter")
      ->check(CLI::Range(1, 10));
  add_output(transition);

  CLI::App* forward = app.add_subcommand("forward", "forward drain of a resolution graph");
  add_graph(forward);
  add_output(forward);

  CLI::App* backward =
      app.add_subcommand("backward", "backward reconstruction with invariant traces");
  add_graph(backward);
  add_output(backward);

  CLI::App* choice =
      app.add_subcommand("choice-dim", "dimension ledger of reconstruction choices");
  add_graph(choice);
  add_output(choice);

  CLI::App* chern = app.add_subcommand("chern", "pushforward characters and defects");
  chern->add_option("--chains", chains, "random blowup chains")->check(CLI::Range(1, 100000));
  add_seed(chern);
  add_output(chern);

  CLI::App* ineq = app.add_subcommand("ineq", "exhaustive rank inequality battery");
  ineq->add_option("--m-max", m_max, "largest filtration length")->check(CLI::Range(1, 8));
  ineq->add_option("--r-max", r_max, "largest rank entry")->check(CLI::Range(1, 8));
  add_output(ineq);

  CLI::App* suite = app.add_subcommand("suite", "full verification battery");
  suite->add_option("--d", ds, "algebra parameters (repeat or comma-separate)")
      ->delimiter(',');
  add_seed(suite);
  add_output(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    moducert::Report rep;
    if (gamma->parsed()) {
      rep = moducert::run_gamma_scenario(d_max, trials, seed);
    } else if (chart->parsed()) {
      rep = moducert::run_chart_scenario(d, seed);
    } else if (transition->parsed()) {
      rep = moducert::run_transition_scenario(d_max);
    } else if (forward->parsed()) {
      rep = moducert::run_forward_scenario(load_graph(graph_path, builtin, d),
                                           moducert::strategy_from_string(strategy));
    } else if (backward->parsed()) {
      rep = moducert::run_backward_scenario(load_graph(graph_path, builtin, d),
                                            moducert::strategy_from_string(strategy));
    } else if (choice->parsed()) {
      rep = moducert::run_choice_scenario(load_graph(graph_path, builtin, d),
                                          moducert::strategy_from_string(strategy));
    } else if (chern->parsed()) {
      rep = moducert::run_chern_scenario(chains, seed);
    } else if (ineq->parsed()) {
      rep = moducert::run_ineq_scenario(m_max, r_max);
    } else if (suite->parsed()) {
      if (ds.empty()) throw moducert::UsageError("suite: --d is required (e.g. --d 1,2)");
      rep = moducert::run_suite(ds, seed);
    } else {
      throw moducert::UsageError("no subcommand selected");
    }
    return emit(rep, output);
  } catch (const moducert::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const moducert::Error& e) {
    std::cerr << "check aborted: " << e.what() << "\n";
    return 1;
  }
}
