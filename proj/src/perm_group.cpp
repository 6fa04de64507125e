#include "cca/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace cca
{

namespace
{

void build_orbit(ChainLevel &level, std::size_t degree)
{
  level.orbit.clear();
  level.reps.clear();
  level.inverse_reps.clear();
  level.orbit_index.assign(degree, -1);

  level.orbit.push_back(level.base_point);
  level.reps.emplace_back(degree);
  level.inverse_reps.emplace_back(degree);
  level.orbit_index[level.base_point] = 0;

  for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
    for (auto const &gen : level.generators) {
      Point image = gen[level.orbit[pos]];
      if (level.orbit_index[image] >= 0)
        continue;
      level.orbit_index[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      level.reps.push_back(level.reps[pos] * gen);
      level.inverse_reps.push_back(level.reps.back().inverse());
    }
  }
}

bool fixes_all(Permutation const &p, std::span<ChainLevel const> levels, std::size_t count)
{
  for (std::size_t l = 0; l < count; ++l) {
    if (p[levels[l].base_point] != levels[l].base_point)
      return false;
  }
  return true;
}

} // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
: _degree(degree),
  _generators(std::move(generators))
{
  if (degree == 0)
    throw InvalidArgument("permutation group of degree 0");
  for (auto const &g : _generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator " + g.str() + " has degree " +
                            std::to_string(g.degree()) + ", expected " +
                            std::to_string(degree));
  }
  schreier_sims();
}

void PermutationGroup::schreier_sims()
{
  // initial base: every nontrivial generator moves some base point
  for (auto const &g : _generators) {
    if (g.is_identity() || !fixes_all(g, _chain, _chain.size()))
      continue;
    ChainLevel level;
    level.base_point = g.first_moved();
    _chain.push_back(std::move(level));
  }
  for (std::size_t l = 0; l < _chain.size(); ++l) {
    for (auto const &g : _generators) {
      if (!g.is_identity() && fixes_all(g, _chain, l))
        _chain[l].generators.push_back(g);
    }
    build_orbit(_chain[l], _degree);
  }

  auto strip = [this](Permutation h, std::size_t start) {
    for (std::size_t l = start; l < _chain.size(); ++l) {
      auto const &level = _chain[l];
      std::int32_t idx = level.orbit_index[h[level.base_point]];
      if (idx < 0)
        return std::pair{std::move(h), l};
      h *= level.inverse_reps[static_cast<std::size_t>(idx)];
    }
    return std::pair{std::move(h), _chain.size()};
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(_chain.size()) - 1;
  while (i >= 0) {
    auto const li = static_cast<std::size_t>(i);
    bool descended = false;

    for (std::size_t pos = 0; pos < _chain[li].orbit.size() && !descended; ++pos) {
      for (std::size_t gi = 0; gi < _chain[li].generators.size(); ++gi) {
        auto const &level = _chain[li];
        auto const &gen = level.generators[gi];
        Permutation ux = level.reps[pos] * gen;
        auto idx = static_cast<std::size_t>(level.orbit_index[gen[level.orbit[pos]]]);
        if (ux == level.reps[idx])
          continue;

        auto [residue, drop] = strip(ux * level.inverse_reps[idx], li + 1);
        if (drop == _chain.size() && residue.is_identity())
          continue;

        if (drop == _chain.size()) {
          ChainLevel fresh;
          fresh.base_point = residue.first_moved();
          _chain.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= drop; ++l) {
          _chain[l].generators.push_back(residue);
          build_orbit(_chain[l], _degree);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        descended = true;
        break;
      }
    }
    if (!descended)
      --i;
  }

  _order = 1;
  for (auto const &level : _chain) {
    auto len = static_cast<std::uint64_t>(level.orbit.size());
    if (_order > std::numeric_limits<std::uint64_t>::max() / len)
      throw LimitExceeded("group order exceeds 64 bits");
    _order *= len;
  }
}

bool PermutationGroup::contains(Permutation const &p) const
{
  if (p.degree() != _degree)
    throw InvalidArgument("membership test with degree " + std::to_string(p.degree()) +
                          " in a group of degree " + std::to_string(_degree));
  Permutation h = p;
  for (auto const &level : _chain) {
    std::int32_t idx = level.orbit_index[h[level.base_point]];
    if (idx < 0)
      return false;
    h *= level.inverse_reps[static_cast<std::size_t>(idx)];
  }
  return h.is_identity();
}

std::vector<Point> PermutationGroup::base() const
{
  std::vector<Point> result;
  for (auto const &level : _chain)
    result.push_back(level.base_point);
  return result;
}

std::vector<std::size_t> PermutationGroup::orbit_lengths() const
{
  std::vector<std::size_t> result;
  for (auto const &level : _chain)
    result.push_back(level.orbit.size());
  return result;
}

std::vector<Permutation> PermutationGroup::elements(std::size_t limit) const
{
  if (_order > limit)
    throw LimitExceeded("group of order " + std::to_string(_order) +
                        " exceeds the enumeration limit " + std::to_string(limit));

  std::vector<Permutation> result;
  result.reserve(static_cast<std::size_t>(_order));

  // element = reps_{k-1}[i_{k-1}] * ... * reps_0[i_0]; recurse from level 0
  auto recurse = [&](auto &self, std::size_t level, Permutation const &suffix) -> void {
    if (level == _chain.size()) {
      result.push_back(suffix);
      return;
    }
    for (auto const &rep : _chain[level].reps)
      self(self, level + 1, rep * suffix);
  };
  recurse(recurse, 0, identity());
  return result;
}

std::vector<Point> PermutationGroup::orbit(Point p) const
{
  std::vector<Point> result{p};
  std::vector<bool> seen(_degree, false);
  seen[p] = true;
  for (std::size_t pos = 0; pos < result.size(); ++pos) {
    for (auto const &g : _generators) {
      Point image = g[result[pos]];
      if (!seen[image]) {
        seen[image] = true;
        result.push_back(image);
      }
    }
  }
  return result;
}

PermutationGroup subgroup(PermutationGroup const &g, std::vector<Permutation> generators)
{
  return PermutationGroup(g.degree(), std::move(generators));
}

PermutationGroup generated_by(std::size_t degree, std::span<Permutation const> elements)
{
  PermutationGroup result = PermutationGroup::trivial(degree);
  std::vector<Permutation> gens;
  for (auto const &x : elements) {
    if (result.contains(x))
      continue;
    gens.push_back(x);
    result = PermutationGroup(degree, gens);
  }
  return result;
}

bool is_subgroup(PermutationGroup const &g, PermutationGroup const &h)
{
  if (g.degree() != h.degree())
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Permutation const &x) { return g.contains(x); });
}

std::uint64_t subgroup_index(PermutationGroup const &g, PermutationGroup const &h)
{
  if (!is_subgroup(g, h))
    throw InvalidArgument("subgroup_index: H is not contained in G");
  return g.order() / h.order();
}

bool is_normal(PermutationGroup const &g, PermutationGroup const &h)
{
  if (!is_subgroup(g, h))
    throw InvalidArgument("is_normal: H is not contained in G");
  for (auto const &x : h.generators()) {
    for (auto const &y : g.generators()) {
      if (!h.contains(conjugate(x, y)))
        return false;
    }
  }
  return true;
}

PermutationGroup normal_closure(PermutationGroup const &g, std::span<Permutation const> elements)
{
  std::vector<Permutation> gens;
  PermutationGroup closure = PermutationGroup::trivial(g.degree());
  std::vector<Permutation> pending(elements.begin(), elements.end());

  while (!pending.empty()) {
    Permutation x = std::move(pending.back());
    pending.pop_back();
    if (closure.contains(x))
      continue;
    gens.push_back(x);
    closure = PermutationGroup(g.degree(), gens);
    for (auto const &y : g.generators())
      pending.push_back(conjugate(x, y));
  }
  return closure;
}

PermutationGroup centralizer_bruteforce(PermutationGroup const &g, Permutation const &p,
                                        std::size_t limit)
{
  std::vector<Permutation> commuting;
  for (auto const &x : g.elements(limit)) {
    if (x * p == p * x)
      commuting.push_back(x);
  }
  return generated_by(g.degree(), commuting);
}

bool is_central(PermutationGroup const &g, Permutation const &p)
{
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](Permutation const &y) { return y * p == p * y; });
}

} // namespace cca
