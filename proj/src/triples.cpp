#include "cca/triples.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cca
{

namespace
{

void require_involution(Permutation const &tau)
{
  if (tau.is_identity() || !(tau * tau).is_identity())
    throw InvalidArgument("tau = " + tau.str() + " is not an involution");
}

void require_members(PermutationGroup const &g, std::span<Permutation const> xs, char const *what)
{
  for (auto const &x : xs) {
    if (x.degree() != g.degree())
      throw InvalidArgument(std::string(what) + " element " + x.str() + " has the wrong degree");
    if (!g.contains(x))
      throw InvalidArgument(std::string(what) + " element " + x.str() + " is not in the group");
  }
}

nlohmann::ordered_json cycle_list(std::span<Permutation const> xs)
{
  auto out = nlohmann::ordered_json::array();
  for (auto const &x : xs)
    out.push_back(x.str());
  return out;
}

} // namespace

STauSet s_tau(PermutationGroup const &carrier, Permutation const &tau, std::size_t limit)
{
  require_involution(tau);
  if (tau.degree() != carrier.degree())
    throw InvalidArgument("tau has the wrong degree for the carrier");

  STauSet result;
  result.tau = tau;
  for (auto const &x : carrier.elements(limit)) {
    if (x.is_identity())
      continue;
    auto conj = conjugate(x, tau);
    if (conj == x || conj == x.inverse())
      result.elements.push_back(x);
  }

  if (carrier.contains(tau)) {
    auto definitional = s_tau_definitional(carrier, tau, limit);
    std::set<Permutation> a(result.elements.begin(), result.elements.end());
    std::set<Permutation> b(definitional.begin(), definitional.end());
    if (a != b)
      throw Error("the two forms of S(tau) differ for tau = " + tau.str());
    result.definitional_form_checked = true;
  }
  return result;
}

std::vector<Permutation> s_tau_definitional(PermutationGroup const &carrier, Permutation const &tau,
                                            std::size_t limit)
{
  require_involution(tau);
  if (!carrier.contains(tau))
    throw InvalidArgument("tau = " + tau.str() + " is not in the carrier");

  auto elements = carrier.elements(limit);
  std::unordered_set<Permutation, PermutationHash> members;
  for (auto const &x : elements) {
    if (x * tau == tau * x)
      members.insert(x);
    if ((x * x).is_identity())
      members.insert(x * tau);
  }
  std::vector<Permutation> result;
  for (auto const &x : elements)
    if (!x.is_identity() && members.count(x))
      result.push_back(x);
  return result;
}

NonCCATriple validate_triple(PermutationGroup const &g, std::span<Permutation const> s,
                             std::span<Permutation const> t, Permutation const &tau)
{
  require_members(g, s, "S");
  require_members(g, t, "T");
  std::array<Permutation, 1> tau_only{tau};
  require_members(g, tau_only, "tau");
  require_involution(tau);

  NonCCATriple triple;
  triple.s.assign(s.begin(), s.end());
  triple.t.assign(t.begin(), t.end());
  triple.tau = tau;

  std::vector<Permutation> s_and_t(s.begin(), s.end());
  s_and_t.insert(s_and_t.end(), t.begin(), t.end());
  triple.checks.ai = generated_by(g.degree(), s_and_t).order() == g.order();

  triple.checks.aii = std::all_of(s.begin(), s.end(), [&](Permutation const &x) {
    auto conj = conjugate(x, tau);
    return conj == x || conj == x.inverse();
  });

  triple.checks.aiii =
    std::all_of(t.begin(), t.end(), [&](Permutation const &x) { return x * x == tau; });

  std::vector<Permutation> s_and_tau(s.begin(), s.end());
  s_and_tau.push_back(tau);
  auto x = generated_by(g.degree(), s_and_tau);
  triple.index = g.order() / x.order();
  triple.checks.aiv = x.order() != g.order();

  triple.tau_central = is_central(g, tau);
  triple.checks.av = !triple.tau_central || triple.index > 2;

  triple.valid = triple.checks.all();
  return triple;
}

std::vector<Permutation> square_roots(PermutationGroup const &x, Permutation const &tau,
                                      std::size_t limit)
{
  std::vector<Permutation> roots;
  for (auto const &y : x.elements(limit))
    if (y * y == tau)
      roots.push_back(y);
  return roots;
}

TripleSearch search_triple_subgroup_strategy(
  PermutationGroup const &g, PermutationGroup const &h,
  std::optional<std::vector<Permutation>> const &tau_candidates, std::size_t limit)
{
  if (!is_subgroup(g, h))
    throw InvalidArgument("the strategy subgroup is not contained in the group");

  std::vector<Permutation> taus;
  auto g_elements = g.elements(limit);
  if (tau_candidates) {
    taus = *tau_candidates;
  } else {
    for (auto const &y : h.elements(limit))
      if (!y.is_identity() && (y * y).is_identity())
        taus.push_back(y);
    for (auto const &y : g_elements) {
      if (y.is_identity() || !(y * y).is_identity() || h.contains(y))
        continue;
      bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                    [&](Permutation const &z) { return h.contains(conjugate(z, y)); });
      if (normalizes)
        taus.push_back(y);
    }
  }

  TripleSearch search;
  for (auto const &tau : taus) {
    ++search.taus_tried;
    auto s = s_tau(h, tau, limit).elements;
    std::vector<Permutation> s_and_tau = s;
    s_and_tau.push_back(tau);
    auto x = generated_by(g.degree(), s_and_tau);
    for (auto const &t : g_elements) {
      if (t * t != tau || x.contains(t))
        continue;
      ++search.roots_tried;
      std::array<Permutation, 1> ts{t};
      auto triple = validate_triple(g, s, ts, tau);
      if (triple.valid) {
        search.triple = std::move(triple);
        return search;
      }
    }
  }
  return search;
}

std::vector<Permutation> triple_connection_set(NonCCATriple const &triple)
{
  std::vector<Permutation> result;
  std::unordered_set<Permutation, PermutationHash> seen;
  auto add = [&](Permutation const &x) {
    if (!x.is_identity() && seen.insert(x).second)
      result.push_back(x);
  };
  for (auto const *part : {&triple.s, &triple.t})
    for (auto const &x : *part) {
      add(x);
      add(x.inverse());
    }
  return result;
}

CrossCheck crosscheck_triple(PermutationGroup const &g, NonCCATriple const &triple,
                             Limits const &limits)
{
  auto graph = ColouredCayleyGraph::build(g, triple_connection_set(triple), limits);
  CrossCheck check;
  check.connected = graph.is_connected();
  if (check.connected)
    check.verdict = is_cca_graph(graph);
  if (triple.valid && (!check.connected || check.verdict.is_cca))
    throw Error("valid non-CCA triple gives a " +
                std::string(check.connected ? "CCA" : "disconnected") + " Cayley graph: " +
                triple_record("", triple).dump());
  return check;
}

nlohmann::ordered_json to_json(TripleChecks const &checks)
{
  return {{"Ai", checks.ai}, {"Aii", checks.aii}, {"Aiii", checks.aiii}, {"Aiv", checks.aiv},
          {"Av", checks.av}};
}

nlohmann::ordered_json triple_record(std::string const &group, NonCCATriple const &triple,
                                     std::optional<CrossCheck> const &crosscheck)
{
  nlohmann::ordered_json j;
  j["group"] = group;
  j["S"] = cycle_list(triple.s);
  j["T"] = cycle_list(triple.t);
  j["tau"] = triple.tau.str();
  j["checks"] = to_json(triple.checks);
  j["valid"] = triple.valid;
  j["index"] = triple.index;
  if (crosscheck) {
    nlohmann::ordered_json c;
    c["connected"] = crosscheck->connected;
    if (crosscheck->connected) {
      auto v = to_json(crosscheck->verdict);
      for (auto it = v.begin(); it != v.end(); ++it)
        c[it.key()] = it.value();
    }
    j["crosscheck"] = c;
  }
  return j;
}

} // namespace cca
