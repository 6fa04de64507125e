#ifndef CCA_TOOLS_COMMANDS_HPP
#define CCA_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cca/error.hpp"

namespace cca::cli
{

enum ExitCode
{
  exit_ok = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_limit = 3,
};

struct Config
{
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = std::uint64_t{1} << 22;
  Limits limits{};
};

struct Outcome
{
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::vector<std::string> text; ///< human-readable lines
  int exit_code = exit_ok;
};

Outcome cmd_group(Config const &config, std::string const &expr);

struct CcaArgs
{
  std::string expr;
  std::vector<std::string> s;
  bool exhaustive = false;
};

Outcome cmd_cca(Config const &config, CcaArgs const &args);

struct TripleArgs
{
  std::string expr;
  std::vector<std::string> s, t, tau;
  std::optional<std::string> subgroup;
};

Outcome cmd_triple_validate(Config const &config, TripleArgs const &args);
Outcome cmd_triple_search(Config const &config, TripleArgs const &args);
/// Square roots of tau in G, and in the subgroup when one is given.
Outcome cmd_triple_roots(Config const &config, TripleArgs const &args);

struct ReproduceArgs
{
  std::string suite;
  std::vector<std::string> only;
  bool inject_fault = false;
  bool timings = false;
};

Outcome cmd_reproduce(Config const &config, ReproduceArgs const &args);

Outcome cmd_graph(Config const &config, std::string const &expr, std::vector<std::string> const &s);

} // namespace cca::cli

#endif // CCA_TOOLS_COMMANDS_HPP
