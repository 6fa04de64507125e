#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <set>

#include "acceptance/suite.hpp"
#include "cca/colour_auts.hpp"
#include "cca/group_expr.hpp"
#include "cca/triples.hpp"
#include "cca/zoo.hpp"
#include "elements.hpp"

namespace cca::cli
{

namespace
{

using json = nlohmann::ordered_json;

json cycle_list(std::span<Permutation const> xs)
{
  auto out = json::array();
  for (auto const &x : xs)
    out.push_back(x.str());
  return out;
}

std::string fmt(char const *format, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

/// The set and its inverses, identity dropped, first appearance kept.
std::vector<Permutation> inverse_closure(std::vector<Permutation> const &xs)
{
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (auto const &x : xs)
    for (auto const &y : {x, x.inverse()})
      if (!y.is_identity() && seen.insert(y).second)
        out.push_back(y);
  return out;
}

Permutation single(ElementCodec const &codec, std::vector<std::string> const &items, char const *what)
{
  auto xs = codec.parse_list(items);
  if (xs.size() != 1)
    throw ParseError(std::string("expected exactly one element for ") + what);
  return xs.front();
}

json verdict_record(std::string const &group, std::span<Permutation const> s, ColouredCayleyGraph const &graph)
{
  json j;
  j["group"] = group;
  j["S"] = cycle_list(s);
  j["connected"] = graph.is_connected();
  if (graph.is_connected()) {
    auto v = to_json(is_cca_graph(graph));
    for (auto it = v.begin(); it != v.end(); ++it)
      j[it.key()] = it.value();
  }
  return j;
}

std::string verdict_line(json const &j)
{
  if (j["connected"] == false)
    return "disconnected: <S> is a proper subgroup";
  std::string line = j["is_cca"] == true ? "CCA" : "non-CCA";
  line += fmt(", |stab1| = 2^%u", j["stab1_log2"].get<unsigned>());
  line += fmt(", |Aut_{+-1}| = %llu", static_cast<unsigned long long>(j["aut_pm1_order"].get<std::uint64_t>()));
  return line;
}

void triple_lines(Outcome &out, NonCCATriple const &t)
{
  out.text.push_back(fmt("  tau = %s, T = {%s}, |S| = %zu", t.tau.str().c_str(),
                         t.t.empty() ? "" : t.t.front().str().c_str(), t.s.size()));
  out.text.push_back(fmt("  Ai %d  Aii %d  Aiii %d  Aiv %d  Av %d  index %llu  -> %s", t.checks.ai, t.checks.aii,
                         t.checks.aiii, t.checks.aiv, t.checks.av, static_cast<unsigned long long>(t.index),
                         t.valid ? "valid" : "not valid"));
}

} // namespace

Outcome cmd_group(Config const &config, std::string const &expr)
{
  auto g = construct(expr, config.limits);
  Outcome out;
  json j;
  j["group"] = g.name;
  j["order"] = g.group.order();
  j["degree"] = g.group.degree();
  j["generators"] = cycle_list(g.group.generators());
  bool order4 = zoo::has_element_of_order4(g.group, config.limits.enumeration);
  auto involutions = zoo::involution_count(g.group, config.limits.enumeration);
  j["has_element_of_order4"] = order4;
  j["involutions"] = involutions;
  if (g.higman)
    j["higman_params"] = json::parse(higman::params_to_json(g.higman->params()));
  out.results.push_back(j);
  out.text.push_back(fmt("%s: order %llu on %zu points, %llu involutions, %s element of order 4", g.name.c_str(),
                         static_cast<unsigned long long>(g.group.order()), g.group.degree(),
                         static_cast<unsigned long long>(involutions), order4 ? "has an" : "no"));
  return out;
}

Outcome cmd_cca(Config const &config, CcaArgs const &args)
{
  auto g = construct(args.expr, config.limits);
  Outcome out;
  if (args.exhaustive) {
    if (!args.s.empty())
      throw ParseError("--exhaustive and --S are exclusive");
    ExhaustiveOptions eo;
    eo.budget = config.budget;
    eo.threads = config.threads;
    eo.limits = config.limits;
    auto r = is_cca_group_exhaustive(g.group, eo);
    json j;
    j["group"] = g.name;
    j["mode"] = "exhaustive";
    j["verdict"] = to_string(r.verdict);
    j["candidate_sets"] = r.candidate_sets;
    j["sets_checked"] = r.sets_checked;
    j["connected_sets"] = r.connected_sets;
    j["budget"] = config.budget;
    if (r.witness_s)
      j["witness_S"] = cycle_list(*r.witness_s);
    if (r.witness_verdict && r.witness_verdict->witness)
      j["witness_alpha"] = *r.witness_verdict->witness;
    out.results.push_back(j);
    out.text.push_back(fmt("%s: %s (%llu of %llu connection sets examined, %llu connected)", g.name.c_str(),
                           to_string(r.verdict), static_cast<unsigned long long>(r.sets_checked),
                           static_cast<unsigned long long>(r.candidate_sets),
                           static_cast<unsigned long long>(r.connected_sets)));
    if (r.witness_s)
      out.text.push_back("  witness S = {" + [&] {
        std::string s;
        for (auto const &x : *r.witness_s)
          s += (s.empty() ? "" : ", ") + x.str();
        return s;
      }() + "}");
    if (r.verdict == GroupVerdict::unknown)
      out.exit_code = exit_limit;
    return out;
  }

  if (args.s.empty())
    throw ParseError("give a connection set with --S, or --exhaustive");
  ElementCodec codec(g);
  auto s = inverse_closure(codec.parse_list(args.s));
  auto graph = ColouredCayleyGraph::build(g.group, s, config.limits);
  auto j = verdict_record(g.name, graph.connection_set(), graph);
  out.results.push_back(j);
  out.text.push_back(g.name + ": " + verdict_line(j));
  return out;
}

Outcome cmd_triple_validate(Config const &config, TripleArgs const &args)
{
  auto g = construct(args.expr, config.limits);
  ElementCodec codec(g);
  auto s = codec.parse_list(args.s);
  auto t = codec.parse_list(args.t);
  auto tau = single(codec, args.tau, "--tau");
  auto triple = validate_triple(g.group, s, t, tau);

  std::optional<CrossCheck> check;
  if (triple.valid && g.group.order() <= config.limits.graph)
    check = crosscheck_triple(g.group, triple, config.limits);
  Outcome out;
  out.results.push_back(triple_record(g.name, triple, check));
  out.text.push_back(g.name + ":");
  triple_lines(out, triple);
  if (check)
    out.text.push_back(std::string("  Cay(G, S u T) is ") + (check->verdict.is_cca ? "CCA" : "non-CCA") +
                       fmt(", |stab1| = 2^%u", check->verdict.stab1_log2));
  return out;
}

Outcome cmd_triple_search(Config const &config, TripleArgs const &args)
{
  if (!args.subgroup)
    throw ParseError("triple search needs --subgroup");
  auto g = construct(args.expr, config.limits);
  auto h = parse_subgroup(*args.subgroup, g, config.limits);
  std::optional<std::vector<Permutation>> taus;
  if (!args.tau.empty())
    taus = ElementCodec(g).parse_list(args.tau);
  auto search = search_triple_subgroup_strategy(g.group, h, taus, config.limits.enumeration);

  Outcome out;
  json j;
  j["group"] = g.name;
  j["subgroup"] = *args.subgroup;
  j["subgroup_order"] = h.order();
  j["taus_tried"] = search.taus_tried;
  j["roots_tried"] = search.roots_tried;
  j["found"] = search.triple.has_value();
  out.text.push_back(fmt("%s, H = %s of order %llu: %s after %zu taus and %zu roots", g.name.c_str(),
                         args.subgroup->c_str(), static_cast<unsigned long long>(h.order()),
                         search.triple ? "found" : "no triple", search.taus_tried, search.roots_tried));
  if (search.triple) {
    std::optional<CrossCheck> check;
    if (g.group.order() <= config.limits.graph)
      check = crosscheck_triple(g.group, *search.triple, config.limits);
    j["triple"] = triple_record(g.name, *search.triple, check);
    triple_lines(out, *search.triple);
    if (check)
      out.text.push_back(std::string("  Cay(G, S u T) is ") + (check->verdict.is_cca ? "CCA" : "non-CCA") +
                         fmt(", |stab1| = 2^%u", check->verdict.stab1_log2));
  }
  out.results.push_back(j);
  return out;
}

Outcome cmd_triple_roots(Config const &config, TripleArgs const &args)
{
  auto g = construct(args.expr, config.limits);
  ElementCodec codec(g);
  auto tau = single(codec, args.tau, "--tau");
  Outcome out;
  json j;
  j["group"] = g.name;
  j["tau"] = tau.str();
  auto in_g = square_roots(g.group, tau, config.limits.enumeration);
  j["roots_in_group"] = in_g.size();
  out.text.push_back(fmt("%s: %zu square roots of %s", g.name.c_str(), in_g.size(), tau.str().c_str()));
  if (args.subgroup) {
    auto h = parse_subgroup(*args.subgroup, g, config.limits);
    auto in_h = square_roots(h, tau, config.limits.enumeration);
    j["subgroup"] = *args.subgroup;
    j["roots_in_subgroup"] = in_h.size();
    out.text.push_back(fmt("  %zu of them in %s", in_h.size(), args.subgroup->c_str()));
  }
  j["roots"] = cycle_list(in_g);
  out.results.push_back(j);
  return out;
}

Outcome cmd_reproduce(Config const &config, ReproduceArgs const &args)
{
  if (args.suite != "paper")
    throw ParseError("unknown suite '" + args.suite + "' (only 'paper' exists)");
  suite::Options options;
  options.threads = config.threads;
  options.seed = config.seed;
  options.limits = config.limits;
  options.budget = config.budget;
  options.inject_fault = args.inject_fault;
  for (auto const &item : args.only)
    for (auto const &name : split_top_level(item))
      options.only.push_back(name);

  auto start = std::chrono::steady_clock::now();
  auto results = suite::run(options);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Outcome out;
  bool all = true;
  for (auto const &r : results) {
    out.results.push_back(suite::to_json(r, args.timings));
    out.text.push_back(fmt("%s criterion %u (%s): %s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                           r.detail.c_str()));
    all = all && r.passed;
  }
  out.text.push_back(fmt("%zu criteria, %s, %.1fs wall clock", results.size(), all ? "all passed" : "FAILURES", total));
  out.exit_code = all ? exit_ok : exit_failure;
  return out;
}

Outcome cmd_graph(Config const &config, std::string const &expr, std::vector<std::string> const &s_items)
{
  auto g = construct(expr, config.limits);
  ElementCodec codec(g);
  auto s = inverse_closure(codec.parse_list(s_items));
  auto graph = ColouredCayleyGraph::build(g.group, s, config.limits);
  Outcome out;
  json j;
  j["group"] = g.name;
  j["S"] = cycle_list(graph.connection_set());
  j["connected"] = graph.is_connected();
  j["graph"] = graph.to_json();
  out.results.push_back(j);
  out.text.push_back(fmt("%s: %zu vertices, valency %zu, %zu colours, %s", g.name.c_str(), graph.vertex_count(),
                         graph.valency(), graph.colour_count(), graph.is_connected() ? "connected" : "disconnected"));
  return out;
}

} // namespace cca::cli
