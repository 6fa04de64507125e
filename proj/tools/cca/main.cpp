#include <fstream>
#include <iostream>
#include <new>
#include <thread>

#include "CLI11.hpp"

#include "commands.hpp"

namespace
{

using namespace cca::cli;
using json = nlohmann::ordered_json;

constexpr char const *schema_version = "1";

json report(std::vector<std::string> const &argv, Config const &config, json results)
{
  json j;
  j["schema_version"] = schema_version;
  j["command"] = argv;
  j["config"] = {{"threads", config.threads},
                 {"seed", config.seed},
                 {"budget", config.budget},
                 {"limits",
                  {{"graph", config.limits.graph},
                   {"enumeration", config.limits.enumeration},
                   {"max_field", config.limits.max_field}}}};
  j["results"] = std::move(results);
  return j;
}

int run(int argc, char **argv)
{
  CLI::App app{"Colour-preserving automorphisms of Cayley graphs and non-CCA triples"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  config.threads = std::max(1u, std::thread::hardware_concurrency());
  bool as_json = false;
  std::string out_file;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_option("--out", out_file, "Also write the JSON report to FILE");
  app.add_option("--threads", config.threads, "Worker threads (results do not depend on it)")
    ->check(CLI::Range(1u, 1024u));
  app.add_option("--budget", config.budget, "Connection sets examined per exhaustive search");
  app.add_option("--limit-graph", config.limits.graph, "Max Cayley graph vertices");
  app.add_option("--limit-enum", config.limits.enumeration, "Max group elements enumerated");
  app.add_option("--seed", config.seed, "Seed for randomised parts of the suite");

  std::string expr;
  std::vector<std::string> s_items;

  auto *group = app.add_subcommand("group", "Construct a group and describe it");
  group->add_option("expr", expr, "Group expression, e.g. \"PSL2(13)\" or \"S3 x C2\"")->required();

  CcaArgs cca;
  auto *cca_cmd = app.add_subcommand("cca", "Decide CCA for one Cayley graph or, exhaustively, a group");
  cca_cmd->add_option("expr", cca.expr, "Group expression")->required();
  cca_cmd->add_option("--S", cca.s, "Connection set (closed under inverses automatically)");
  cca_cmd->add_flag("--exhaustive", cca.exhaustive, "Examine every connection set");

  TripleArgs triple;
  auto *triple_cmd = app.add_subcommand("triple", "Non-CCA triples");
  triple_cmd->require_subcommand(1);
  auto add_triple_options = [&](CLI::App *cmd, bool with_st) {
    cmd->add_option("expr", triple.expr, "Group expression")->required();
    if (with_st) {
      cmd->add_option("--S", triple.s, "Elements of S");
      cmd->add_option("--T", triple.t, "Elements of T");
    }
    cmd->add_option("--tau", triple.tau, "Involution tau");
    cmd->add_option("--subgroup", triple.subgroup,
                    "point:P | pointwise:P,... | setwise:P,... | normalizer:M | gens:X,...");
  };
  auto *validate = triple_cmd->add_subcommand("validate", "Check the five triple conditions");
  add_triple_options(validate, true);
  auto *search = triple_cmd->add_subcommand("search", "Subgroup-strategy search (S = S_H(tau), t^2 = tau)");
  add_triple_options(search, false);
  auto *roots = triple_cmd->add_subcommand("roots", "Count square roots of tau");
  add_triple_options(roots, false);

  ReproduceArgs repro;
  auto *reproduce = app.add_subcommand("reproduce", "Run the acceptance suite");
  reproduce->add_option("--suite", repro.suite, "Suite name")->required();
  reproduce->add_option("--only", repro.only, "Criterion names or numbers");
  reproduce->add_flag("--inject-fault", repro.inject_fault, "Corrupt the Higman closed form (mutation test)");
  reproduce->add_flag("--timings", repro.timings, "Include per-criterion seconds in the report");

  auto *graph = app.add_subcommand("graph", "Dump a coloured Cayley graph");
  auto *graph_dump = graph->add_subcommand("dump", "Vertices, coloured edges and colour table");
  graph->require_subcommand(1);
  graph_dump->add_option("expr", expr, "Group expression")->required();
  graph_dump->add_option("--S", s_items, "Connection set (closed under inverses automatically)")->required();

  for (auto *cmd : {group, cca_cmd, triple_cmd, validate, search, roots, reproduce, graph, graph_dump})
    cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  if (config.limits.graph == 0 || config.limits.enumeration == 0) {
    std::cerr << "error: limits must be positive\n";
    return exit_usage;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    Outcome outcome;
    if (*group)
      outcome = cmd_group(config, expr);
    else if (*cca_cmd)
      outcome = cmd_cca(config, cca);
    else if (*validate)
      outcome = cmd_triple_validate(config, triple);
    else if (*search)
      outcome = cmd_triple_search(config, triple);
    else if (*roots)
      outcome = cmd_triple_roots(config, triple);
    else if (*reproduce)
      outcome = cmd_reproduce(config, repro);
    else
      outcome = cmd_graph(config, expr, s_items);

    auto doc = report(args, config, std::move(outcome.results));
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f)
        throw cca::InvalidArgument("cannot write " + out_file);
      f << doc.dump(2) << '\n';
    }
    if (as_json)
      std::cout << doc.dump(2) << '\n';
    else
      for (auto const &line : outcome.text)
        std::cout << line << '\n';
    return outcome.exit_code;
  } catch (cca::LimitExceeded const &e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return exit_limit;
  } catch (std::bad_alloc const &) {
    std::cerr << "out of memory\n";
    return exit_limit;
  } catch (cca::ParseError const &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (cca::InvalidArgument const &e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return exit_usage;
  } catch (cca::Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

} // namespace

int main(int argc, char **argv) { return run(argc, argv); }
